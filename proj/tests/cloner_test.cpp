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
#include <random>

#include "gtest/gtest.h"
#include "qbc/discrimination.hpp"
#include "qbc/errors.hpp"
#include "qbc/infochannel.hpp"
#include "qbc/optimizer.hpp"
#include "support/oracles.hpp"

using namespace qbc;
using namespace qbc::cloner;
using hilbert::HermitianOp;
using hilbert::Subsystem;

namespace {

namespace oracle = qbc::testing;

constexpr double kPi = std::numbers::pi;

// 5 x 10 grid over theta in [0, pi/2] and phi in [0, 2 pi).
std::vector<std::pair<double, double>> grid50() {
    std::vector<std::pair<double, double>> g;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 10; ++j) g.emplace_back(kPi / 2 * i / 4.0, 2 * kPi * j / 10.0);
    }
    return g;
}

// A random point on the feasible manifold, built directly in the rotated
// coordinates: two unit 3-vectors with inner product cos(theta).
CloneParams random_feasible(std::mt19937_64& rng, double theta) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<double, 3> u{g(rng), g(rng), g(rng)};
    std::array<double, 3> w{g(rng), g(rng), g(rng)};
    const double nu = std::hypot(u[0], u[1], u[2]);
    for (auto& c : u) c /= nu;
    const double dot = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
    for (int k = 0; k < 3; ++k) w[static_cast<std::size_t>(k)] -= dot * u[static_cast<std::size_t>(k)];
    const double nw = std::hypot(w[0], w[1], w[2]);
    for (auto& c : w) c /= nw;
    std::array<double, 3> v{};
    for (std::size_t k = 0; k < 3; ++k) v[k] = std::cos(theta) * u[k] + std::sin(theta) * w[k];
    XYParams xy{u[0], u[1], v[0], v[1], u[2] / std::sqrt(2.0), v[2] / std::sqrt(2.0)};
    return xy.to_clone();
}

void expect_entries_near(const hilbert::DensityMatrix& rho, const std::array<double, 4>& expected, double tol) {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            EXPECT_NEAR(rho(r, c).real(), expected[static_cast<std::size_t>(2 * r + c)], tol);
            EXPECT_NEAR(rho(r, c).imag(), 0.0, tol);
        }
    }
}

}  // namespace

TEST(cloner, optimal_params_at_orthogonal_inputs) {
    const auto p = optimal_params(OverlapAngle(kPi / 2), 0.0);
    EXPECT_NEAR(p.a0, 1.0, 1e-15);
    EXPECT_NEAR(p.a1, 0.0, 1e-15);
    EXPECT_NEAR(p.b0, 0.0, 1e-15);
    EXPECT_NEAR(p.b1, 0.0, 1e-15);
    EXPECT_NEAR(p.d0, 0.0, 1e-15);
    EXPECT_NEAR(p.d1, -1.0, 1e-15);
    EXPECT_TRUE(p.is_symmetric());
}

TEST(cloner, optimal_params_are_feasible) {
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const OverlapAngle theta(kPi / 2 * i / 20.0);
            const auto p = optimal_params(theta, 2 * kPi * j / 20.0);
            EXPECT_NEAR(p.a1 * p.a0 + 2 * p.b1 * p.b0 + p.d1 * p.d0, theta.overlap(), 1e-15);
            EXPECT_LT(max_abs_residual(p, theta), 1e-12);
        }
    }
    const auto r = constraint_residuals(optimal_params(OverlapAngle(kPi / 3), kPi / 4), OverlapAngle(kPi / 3));
    for (double x : r) EXPECT_LT(std::abs(x), 1e-14);
}

TEST(cloner, clone_state_examples) {
    const auto p = optimal_params(OverlapAngle(kPi / 2), 0.0);
    const auto s0 = clone_state(p, 0);
    const auto s1 = clone_state(p, 1);
    EXPECT_NEAR(s0[0].real(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(s0[1]) + std::abs(s0[2]) + std::abs(s0[3]), 0.0, 1e-15);
    EXPECT_NEAR(s1[3].real(), -1.0, 1e-15);
    EXPECT_NEAR(std::abs(s1[0]) + std::abs(s1[1]) + std::abs(s1[2]), 0.0, 1e-15);
    EXPECT_THROW(clone_state(p, 2), UsageError);
    EXPECT_THROW(clone_state(CloneParams{}, 0), InfeasibleParamsError);
    EXPECT_THROW(clone_state(CloneParams::symmetric(1.0, 0.0, 1e-3, 0, 0, -1), 0), InfeasibleParamsError);
}

TEST(cloner, clone_states_preserve_overlap) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 500; ++i) {
        const double theta = std::uniform_real_distribution<double>(0.0, kPi / 2)(rng);
        const auto p = i % 2 == 0 ? optimal_params(OverlapAngle(theta), 6.0 * i / 500.0) : random_feasible(rng, theta);
        const auto ip = hilbert::inner_product(clone_state(p, 1), clone_state(p, 0));
        EXPECT_NEAR(ip.real(), std::cos(theta), 1e-12);
        EXPECT_NEAR(ip.imag(), 0.0, 1e-15);
    }
}

TEST(cloner, marginals_examples) {
    const auto product = marginals(hilbert::Ket::basis(4, 0));
    EXPECT_LT(max_abs_difference(product.traced_blank.op(), HermitianOp::projector(hilbert::Ket{1.0, 0.0})), 1e-15);
    EXPECT_LT(max_abs_difference(product.traced_system.op(), HermitianOp::projector(hilbert::Ket{1.0, 0.0})), 1e-15);

    const auto sigma = clone_state(optimal_params(OverlapAngle(0.8), 0.3), 0);
    const auto m = marginals(sigma);
    const auto expected = oracle::marginal_entries(0.8, 0.3, 0);
    expect_entries_near(m.traced_blank, expected, 1e-12);
    expect_entries_near(m.traced_system, expected, 1e-12);

    const double r = 1.0 / std::sqrt(2.0);
    const auto sym = marginals(hilbert::Ket{0.0, r, r, 0.0});
    EXPECT_LT(max_abs_difference(sym.traced_blank.op(), HermitianOp::identity(2).scaled(0.5)), 1e-15);
    EXPECT_LT(max_abs_difference(sym.traced_system.op(), HermitianOp::identity(2).scaled(0.5)), 1e-15);
}

TEST(cloner, marginal_closed_form_examples) {
    for (double phi : {0.0, 0.7, kPi / 2, 4.0}) {
        const auto z = marginal_closed_form(OverlapAngle(0.0), phi);
        EXPECT_LT(max_abs_difference(z.rho0.op(), HermitianOp::identity(2).scaled(0.5)), 1e-15);
        EXPECT_LT(max_abs_difference(z.rho1.op(), HermitianOp::identity(2).scaled(0.5)), 1e-15);
    }
    const auto o = marginal_closed_form(OverlapAngle(kPi / 2), 0.0);
    expect_entries_near(o.rho0, {1, 0, 0, 0}, 1e-15);
    expect_entries_near(o.rho1, {0, 0, 0, 1}, 1e-15);
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double theta = kPi / 2 * u(rng);
        const auto pair = marginal_closed_form(OverlapAngle(theta), 2 * kPi * u(rng));
        EXPECT_NEAR(pair.rho0.op().trace(), 1.0, 1e-15);
        EXPECT_NEAR(pair.rho1.op().trace(), 1.0, 1e-15);
        const auto [lo, hi] = oracle::eig2(pair.rho0.op() - pair.rho1.op());
        EXPECT_NEAR(lo, -std::sin(theta), 1e-12);
        EXPECT_NEAR(hi, std::sin(theta), 1e-12);
        for (const auto* rho : {&pair.rho0, &pair.rho1}) {
            const auto e = hilbert::hermitian_eig(rho->op());
            EXPECT_NEAR(e.eigenvalues[0], 0.5 * (1 - std::sin(theta)), 1e-12);
            EXPECT_NEAR(e.eigenvalues[1], 0.5 * (1 + std::sin(theta)), 1e-12);
        }
    }
}

TEST(cloner, partial_trace_marginals_match_closed_form_on_grid) {
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double theta = kPi / 2 * i / 19.0;
            const double phi = 2 * kPi * j / 20.0;
            const auto p = optimal_params(OverlapAngle(theta), phi);
            for (int x = 0; x < 2; ++x) {
                const auto m = marginals(clone_state(p, x));
                const auto expected = oracle::marginal_entries(theta, phi, x);
                expect_entries_near(m.traced_blank, expected, 1e-12);
                EXPECT_LT(max_abs_difference(m.traced_blank.op(), m.traced_system.op()), 1e-12);
            }
        }
    }
}

TEST(cloner, lambda_examples) {
    for (int i = 0; i <= 10; ++i) {
        const double theta = kPi / 2 * i / 10.0;
        for (double phi : {0.0, 1.0, 2.5, 5.0}) {
            EXPECT_NEAR(lambda_objective(optimal_params(OverlapAngle(theta), phi)), std::sin(theta) * std::sin(theta),
                        1e-12);
        }
    }
    EXPECT_NEAR(lambda_objective(optimal_params(OverlapAngle(kPi / 2), 0.0)), 1.0, 1e-15);
    EXPECT_NEAR(lambda_objective(optimal_params(OverlapAngle(0.0), 0.9)), 0.0, 1e-15);
}

TEST(cloner, printed_objective_fails_the_eigenvalue_oracle) {
    // With the second group unsquared the objective goes negative at the
    // exact optimum for orthogonal inputs, which no squared quantity can.
    const auto p = optimal_params(OverlapAngle(kPi / 2), 0.0);
    EXPECT_NEAR(lambda_objective_unsquared(p), -1.0, 1e-15);
    EXPECT_NEAR(lambda_objective(p), 1.0, 1e-15);
}

TEST(cloner, lambda_equals_squared_min_eigenvalue) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.0, kPi / 2);
    for (int i = 0; i < 1000; ++i) {
        const double theta = u(rng);
        const auto p = random_feasible(rng, theta);
        ASSERT_LT(max_abs_residual(p, OverlapAngle(theta)), 1e-12);
        const auto r0 = marginals(clone_state(p, 0)).traced_blank;
        const auto r1 = marginals(clone_state(p, 1)).traced_blank;
        const auto [lo, hi] = oracle::eig2(r0.op() - r1.op());
        EXPECT_NEAR(lambda_objective(p), lo * lo, 1e-10) << "case " << i;
        EXPECT_LE(lambda_objective(p), std::sin(theta) * std::sin(theta) + 1e-9);
        (void)hi;
    }
}

TEST(cloner, constraint_residual_examples) {
    const OverlapAngle theta(0.6);
    const auto zero = constraint_residuals(CloneParams{}, theta);
    EXPECT_EQ(zero[0], -1.0);
    EXPECT_EQ(zero[1], -1.0);
    EXPECT_EQ(zero[2], -std::cos(0.6));
    const auto alt = CloneParams::symmetric(1.0, 0.0, 0.0, std::cos(0.6), std::sin(0.6) / std::sqrt(2.0), 0.0);
    for (double x : constraint_residuals(alt, theta)) EXPECT_NEAR(x, 0.0, 1e-15);
}

TEST(cloner, xy_round_trip) {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto p = CloneParams::symmetric(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
        const auto q = XYParams::from_clone(p).to_clone();
        EXPECT_NEAR(q.a0, p.a0, 1e-15);
        EXPECT_NEAR(q.d0, p.d0, 1e-15);
        EXPECT_NEAR(q.a1, p.a1, 1e-15);
        EXPECT_NEAR(q.d1, p.d1, 1e-15);
        EXPECT_EQ(q.b0, p.b0);
        EXPECT_EQ(q.b1, p.b1);
    }
}

TEST(cloner, ancilla_row_examples) {
    const auto row = ancilla_row(optimal_params(OverlapAngle(kPi / 2), 0.0), OverlapAngle(kPi / 2));
    EXPECT_NEAR(row[0], 0.0, 1e-15);
    EXPECT_NEAR(row[1], 0.0, 1e-15);
    EXPECT_NEAR(row[2], 0.0, 1e-15);
    EXPECT_NEAR(row[3], -1.0, 1e-15);
    EXPECT_THROW(ancilla_row(optimal_params(OverlapAngle(0.0), 0.3), OverlapAngle(0.0)), SingularExpansionError);

    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> u(0.05, kPi / 2);
    for (int i = 0; i < 200; ++i) {
        const double theta = u(rng);
        const auto p = random_feasible(rng, theta);
        const auto perp = ancilla_row(p, OverlapAngle(theta));
        const auto r0 = p.row(0);
        const auto r1 = p.row(1);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(std::cos(theta) * r0[k] + std::sin(theta) * perp[k], r1[k], 1e-12);
        }
    }
}

TEST(cloner, unitary_completion_is_orthogonal) {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> u(0.05, kPi / 2);
    for (int i = 0; i < 100; ++i) {
        const double theta = u(rng);
        const auto p = optimal_params(OverlapAngle(theta), 6.0 * u(rng));
        const auto m = unitary_completion(p, OverlapAngle(theta));
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                double dot = 0;
                for (int r = 0; r < 4; ++r) dot += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] *
                                                   m[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)];
                EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-12);
            }
        }
        // Column of |00> is the clone of input 0.
        const auto r0 = p.row(0);
        for (std::size_t r = 0; r < 4; ++r) EXPECT_NEAR(m[r][0], r0[r], 1e-12);
    }
}

TEST(cloner, entanglement_examples) {
    EXPECT_NEAR(clone_entanglement(OverlapAngle(kPi / 2), 0.0), 0.0, 1e-15);
    EXPECT_NEAR(clone_entanglement(OverlapAngle(0.0), 1.0), std::numbers::ln2, 1e-15);
    // h(0.25) from a 40-digit evaluation.
    EXPECT_NEAR(clone_entanglement(OverlapAngle(kPi / 6), 0.2), 0.5623351446188083, 1e-15);
}

TEST(cloner, entanglement_matches_marginal_entropy_and_ignores_phi) {
    for (int i = 0; i <= 20; ++i) {
        const double theta = kPi / 2 * i / 20.0;
        const double target = static_cast<double>(oracle::entropy_ld(0.5L * (1.0L - std::sin(static_cast<long double>(theta)))));
        double first = -1;
        for (int j = 0; j < 20; ++j) {
            const double phi = 2 * kPi * j / 20.0;
            const double e = clone_entanglement(OverlapAngle(theta), phi);
            EXPECT_NEAR(e, target, 1e-12);
            const auto p = optimal_params(OverlapAngle(theta), phi);
            for (int x = 0; x < 2; ++x) {
                const auto m = marginals(clone_state(p, x));
                const double s = hilbert::von_neumann_entropy(m.traced_blank);
                EXPECT_NEAR(s, target, 1e-10);
                EXPECT_NEAR(hilbert::von_neumann_entropy(m.traced_system), s, 1e-12);
                if (first < 0) first = s;
                EXPECT_NEAR(s, first, 1e-12);
            }
        }
    }
}

TEST(cloner, clones_are_as_distinguishable_as_the_inputs) {
    for (const auto& [theta, phi] : grid50()) {
        const auto p = optimal_params(OverlapAngle(theta), phi);
        const auto r0 = marginals(clone_state(p, 0));
        const auto r1 = marginals(clone_state(p, 1));
        const double expected = discrimination::pure_pair_error(theta);
        EXPECT_NEAR(discrimination::helstrom(r0.traced_blank, r1.traced_blank).error_prob, expected, 1e-12);
        EXPECT_NEAR(discrimination::helstrom(r0.traced_system, r1.traced_system).error_prob, expected, 1e-12);
    }
}
