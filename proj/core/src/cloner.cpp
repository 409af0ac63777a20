// Copyright 2026 The qbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbc/cloner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qbc/discrimination.hpp"
#include "qbc/errors.hpp"
#include "qbc/infochannel.hpp"
#include "qbc/tolerances.hpp"

namespace qbc::cloner {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

std::array<double, 4> CloneParams::row(int input) const {
    if (input == 0) return {a0, b0, c0, d0};
    if (input == 1) return {a1, b1, c1, d1};
    throw UsageError("clone input must be 0 or 1");
}

XYParams XYParams::from_clone(const CloneParams& p) {
    return {(p.a0 + p.d0) * kInvSqrt2, (p.a0 - p.d0) * kInvSqrt2, (p.a1 + p.d1) * kInvSqrt2,
            (p.a1 - p.d1) * kInvSqrt2, p.b0, p.b1};
}

CloneParams XYParams::to_clone() const {
    return CloneParams::symmetric((x0 + y0) * kInvSqrt2, b0, (x0 - y0) * kInvSqrt2, (x1 + y1) * kInvSqrt2, b1,
                                  (x1 - y1) * kInvSqrt2);
}

CloneParams optimal_params(const OverlapAngle& theta, double phi) {
    const double sh = std::sin(0.5 * theta.radians());
    const double ch = std::cos(0.5 * theta.radians());
    const double a0 = kInvSqrt2 * (sh + ch * std::cos(phi));
    const double a1 = kInvSqrt2 * (-sh + ch * std::cos(phi));
    const double b = kInvSqrt2 * ch * std::sin(phi);
    return CloneParams::symmetric(a0, b, -a1, a1, b, -a0);
}

Ket clone_state(const CloneParams& params, int input) {
    const auto r = params.row(input);
    const Ket sigma{r[0], r[1], r[2], r[3]};
    if (!sigma.is_normalized(tol::kValidation)) {
        throw InfeasibleParamsError("clone state for input " + std::to_string(input) +
                                    " has squared norm " + std::to_string(sigma.norm_squared()));
    }
    return sigma;
}

Marginals marginals(const Ket& sigma) {
    return {hilbert::partial_trace(sigma, hilbert::Subsystem::Second),
            hilbert::partial_trace(sigma, hilbert::Subsystem::First)};
}

MarginalPair marginal_closed_form(const OverlapAngle& theta, double phi) {
    const double t = std::sin(theta.radians()) * std::cos(phi);
    const double u = std::sin(theta.radians()) * std::sin(phi);
    auto make = [](double diag, double off) {
        const std::array<hilbert::Complex, 4> e{0.5 * (1.0 + diag), 0.5 * off, 0.5 * off, 0.5 * (1.0 - diag)};
        return DensityMatrix(hilbert::HermitianOp(2, e));
    };
    return {make(t, u), make(-t, -u)};
}

double lambda_objective(const CloneParams& p) {
    const double off = p.a1 * p.c1 + p.b1 * p.d1 - p.a0 * p.c0 - p.b0 * p.d0;
    const double diag = p.a1 * p.a1 + p.b1 * p.b1 - p.a0 * p.a0 - p.b0 * p.b0;
    return off * off + diag * diag;
}

double lambda_objective_unsquared(const CloneParams& p) {
    const double off = p.a1 * p.c1 + p.b1 * p.d1 - p.a0 * p.c0 - p.b0 * p.d0;
    return off * off + p.a1 * p.a1 + p.b1 * p.b1 - p.a0 * p.a0 - p.b0 * p.b0;
}

std::array<double, 3> constraint_residuals(const CloneParams& p, const OverlapAngle& theta) {
    return {p.a0 * p.a0 + 2.0 * p.b0 * p.b0 + p.d0 * p.d0 - 1.0,
            p.a1 * p.a1 + 2.0 * p.b1 * p.b1 + p.d1 * p.d1 - 1.0,
            p.a1 * p.a0 + 2.0 * p.b1 * p.b0 + p.d1 * p.d0 - theta.overlap()};
}

double max_abs_residual(const CloneParams& params, const OverlapAngle& theta) {
    double m = 0.0;
    for (double r : constraint_residuals(params, theta)) m = std::max(m, std::abs(r));
    return m;
}

std::array<double, 4> ancilla_row(const CloneParams& params, const OverlapAngle& theta) {
    const double s = std::sin(theta.radians());
    if (theta.radians() == 0.0) {
        throw SingularExpansionError("theta = 0: |1> = |0>, the |0-perp> row is unconstrained");
    }
    const double c = theta.overlap();
    const auto r0 = params.row(0);
    const auto r1 = params.row(1);
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = (r1[k] - c * r0[k]) / s;
    return out;
}

std::array<std::array<double, 4>, 4> unitary_completion(const CloneParams& params, const OverlapAngle& theta) {
    using Vec = std::array<double, 4>;
    auto dot = [](const Vec& x, const Vec& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]; };

    const Vec first = params.row(0);
    const Vec second = ancilla_row(params, theta);
    if (std::abs(dot(first, first) - 1.0) > tol::kValidation || std::abs(dot(second, second) - 1.0) > tol::kValidation ||
        std::abs(dot(first, second)) > tol::kValidation) {
        throw InfeasibleParamsError("clone rows are not orthonormal; no unitary extension exists");
    }

    std::array<Vec, 4> basis_out{};
    basis_out[0] = first;
    basis_out[1] = second;
    int filled = 2;
    for (int e = 0; e < 4 && filled < 4; ++e) {
        Vec v{};
        v[static_cast<std::size_t>(e)] = 1.0;
        for (int k = 0; k < filled; ++k) {
            const double proj = dot(v, basis_out[static_cast<std::size_t>(k)]);
            for (std::size_t i = 0; i < 4; ++i) v[i] -= proj * basis_out[static_cast<std::size_t>(k)][i];
        }
        const double n = std::sqrt(dot(v, v));
        if (n < 1e-6) continue;
        for (auto& x : v) x /= n;
        basis_out[static_cast<std::size_t>(filled++)] = v;
    }

    // Input |00> -> column 0, |0-perp,0> -> column 2; the blank-excited inputs
    // |0,0-perp> and |0-perp,0-perp> take the completed directions.
    std::array<std::array<double, 4>, 4> u{};
    const std::array<int, 4> column_of{0, 2, 1, 3};
    for (int k = 0; k < 4; ++k) {
        for (int r = 0; r < 4; ++r) {
            u[static_cast<std::size_t>(r)][static_cast<std::size_t>(column_of[static_cast<std::size_t>(k)])] =
                basis_out[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
        }
    }
    return u;
}

double clone_entanglement(const OverlapAngle& theta, double /*phi*/) {
    return info::binary_entropy(discrimination::pure_pair_error(theta.radians()));
}

}  // namespace qbc::cloner
