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

#pragma once

#include <utility>

#include "qbc/angle.hpp"
#include "qbc/hilbert.hpp"

namespace qbc::discrimination {

using hilbert::DensityMatrix;
using hilbert::HermitianOp;
using hilbert::Ket;

/// Two-outcome measurement; outcome i means "decided state i".
class BinaryPOVM {
public:
    BinaryPOVM(HermitianOp pi0, HermitianOp pi1);

    /// Projective measurement with pi0 = |v><v| and pi1 = I - pi0 on a qubit.
    static BinaryPOVM projective(const Ket& v);

    const HermitianOp& pi0() const { return pi0_; }
    const HermitianOp& pi1() const { return pi1_; }
    const HermitianOp& element(int outcome) const;
    int dim() const { return pi0_.dim(); }

private:
    HermitianOp pi0_;
    HermitianOp pi1_;
};

struct DiscriminationResult {
    BinaryPOVM povm;
    double error_prob;
    /// Smallest eigenvalue of rho0 - rho1.
    double min_eigenvalue;
};

/// Average error with equal priors: (1 + tr((rho0 - rho1) pi1)) / 2.
double error_of_povm(const DensityMatrix& rho0, const DensityMatrix& rho1, const BinaryPOVM& povm);

/// Minimum-error measurement from the spectral split of rho0 - rho1.
/// Eigenvalues below zero go to pi1; zero and positive ones to pi0.
DiscriminationResult helstrom(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// (1 - sin theta) / 2, the optimum for two pure states with overlap cos theta.
double pure_pair_error(double theta);

/// |0> and cos(theta)|0> + sin(theta)|0-perp>.
std::pair<Ket, Ket> pure_pair(const OverlapAngle& theta);

/// Rank-one projective measurement that is optimal for the clone marginals
/// at free parameter phi. At phi = 0 and phi = pi, where the textbook
/// normalization of one branch vanishes, the result is its limit (the
/// standard-basis projectors).
BinaryPOVM clone_povm_closed_form(double phi);

}  // namespace qbc::discrimination
