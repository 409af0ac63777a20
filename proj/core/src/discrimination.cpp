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

#include "qbc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qbc/errors.hpp"
#include "qbc/tolerances.hpp"

namespace qbc::discrimination {

BinaryPOVM::BinaryPOVM(HermitianOp pi0, HermitianOp pi1) : pi0_(std::move(pi0)), pi1_(std::move(pi1)) {
    if (pi0_.dim() != pi1_.dim()) throw UsageError("POVM elements have different dimensions");
    const auto sum = pi0_ + pi1_;
    if (hilbert::max_abs_difference(sum, HermitianOp::identity(sum.dim())) > tol::kEquality) {
        throw ValidationError("POVM elements do not sum to the identity");
    }
    for (const auto* element : {&pi0_, &pi1_}) {
        if (hilbert::hermitian_eig(*element).eigenvalues.front() < -tol::kNegativeEigenvalue) {
            throw ValidationError("POVM element is not positive semidefinite");
        }
    }
}

BinaryPOVM BinaryPOVM::projective(const Ket& v) {
    if (v.dim() != 2) throw UsageError("projective POVM helper expects a qubit ket");
    const auto p = HermitianOp::projector(v.normalized());
    return BinaryPOVM(p, HermitianOp::identity(2) - p);
}

const HermitianOp& BinaryPOVM::element(int outcome) const {
    if (outcome == 0) return pi0_;
    if (outcome == 1) return pi1_;
    throw UsageError("binary POVM outcome must be 0 or 1");
}

double error_of_povm(const DensityMatrix& rho0, const DensityMatrix& rho1, const BinaryPOVM& povm) {
    if (rho0.dim() != rho1.dim() || rho0.dim() != povm.dim()) {
        throw UsageError("state and measurement dimensions differ");
    }
    const double pe = 0.5 * (1.0 + hilbert::trace_product(rho0.op() - rho1.op(), povm.pi1()));
    return std::clamp(pe, 0.0, 1.0);
}

DiscriminationResult helstrom(const DensityMatrix& rho0, const DensityMatrix& rho1) {
    if (rho0.dim() != rho1.dim()) throw UsageError("state dimensions differ");
    const int n = rho0.dim();
    const auto eig = hilbert::hermitian_eig(rho0.op() - rho1.op());

    auto pi1 = HermitianOp::zero(n);
    std::vector<double> magnitudes;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -tol::kZeroEigenvalue) pi1 = pi1 + HermitianOp::projector(eig.eigenvectors[k]);
        magnitudes.push_back(std::abs(lambda));
    }
    // For traceless rho0 - rho1 the negative part equals minus half the trace
    // norm. Summing sorted magnitudes makes the result invariant under
    // swapping the two states.
    std::sort(magnitudes.begin(), magnitudes.end());
    double trace_norm = 0.0;
    for (double m : magnitudes) trace_norm += m;

    const double pe = std::clamp(0.5 * (1.0 - 0.5 * trace_norm), 0.0, 0.5);
    auto pi0 = HermitianOp::identity(n) - pi1;
    return {BinaryPOVM(std::move(pi0), std::move(pi1)), pe, eig.eigenvalues.front()};
}

double pure_pair_error(double theta) {
    const OverlapAngle angle(theta);
    return 0.5 * (1.0 - std::sin(angle.radians()));
}

std::pair<Ket, Ket> pure_pair(const OverlapAngle& theta) {
    return {Ket{1.0, 0.0}, Ket{std::cos(theta.radians()), std::sin(theta.radians())}};
}

BinaryPOVM clone_povm_closed_form(double phi) {
    if (!std::isfinite(phi)) throw UsageError("phi must be finite");
    // |psi_-+> = ((-+1 + cos phi)|0> + sin phi |1>) / sqrt(2(1 -+ cos phi)).
    // With h = phi/2 these are (cos h, sin h) and (-sin h, cos h) up to sign,
    // which stays well conditioned where 1 -+ cos phi vanishes.
    const double h = 0.5 * phi;
    const Ket plus{std::cos(h), std::sin(h)};
    const Ket minus{-std::sin(h), std::cos(h)};
    return BinaryPOVM(HermitianOp::projector(plus), HermitianOp::projector(minus));
}

}  // namespace qbc::discrimination
