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

#include <array>

#include "qbc/angle.hpp"
#include "qbc/hilbert.hpp"

namespace qbc::cloner {

using hilbert::DensityMatrix;
using hilbert::Ket;

/// Real coefficients of the cloning map on span{|0>|0>, |1>|0>}:
///
///   U|0>|0> = a0|00> + b0|0,0-perp> + c0|0-perp,0> + d0|0-perp,0-perp>
///   U|1>|0> = a1|00> + b1|0,0-perp> + c1|0-perp,0> + d1|0-perp,0-perp>
///
/// with the system as the first factor and the blank (prepared in |0>) as
/// the second. Symmetric clones need c0 = b0 and c1 = b1.
struct CloneParams {
    double a0 = 0, b0 = 0, c0 = 0, d0 = 0;
    double a1 = 0, b1 = 0, c1 = 0, d1 = 0;

    static CloneParams symmetric(double a0, double b0, double d0, double a1, double b1, double d1) {
        return {a0, b0, b0, d0, a1, b1, b1, d1};
    }

    bool is_symmetric() const { return b0 == c0 && b1 == c1; }
    std::array<double, 4> row(int input) const;

    friend bool operator==(const CloneParams&, const CloneParams&) = default;
};

/// Rotated coordinates a = (x + y)/sqrt2, d = (x - y)/sqrt2. In them the
/// isometry conditions say that (x0, y0, sqrt2 b0) and (x1, y1, sqrt2 b1)
/// are unit vectors with inner product cos(theta).
struct XYParams {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0, b0 = 0, b1 = 0;

    static XYParams from_clone(const CloneParams& p);
    CloneParams to_clone() const;
};

/// The optimal family, parameterized by the free angle phi.
CloneParams optimal_params(const OverlapAngle& theta, double phi);

/// U|i>|0> as a two-qubit ket. Throws InfeasibleParamsError when the
/// coefficients are not normalized within the validation tolerance.
Ket clone_state(const CloneParams& params, int input);

struct Marginals {
    DensityMatrix traced_blank;   // first factor (system) kept
    DensityMatrix traced_system;  // second factor (blank) kept
};

Marginals marginals(const Ket& sigma);

struct MarginalPair {
    DensityMatrix rho0;
    DensityMatrix rho1;
};

/// Closed-form marginals of the optimal clones:
///   rho_{0(1)} = (1 +- sin t cos p)/2 |0><0| + (1 -+ sin t cos p)/2 |1><1|
///                +- (sin t sin p)/2 (|0><1| + |1><0|)
MarginalPair marginal_closed_form(const OverlapAngle& theta, double phi);

/// Lambda = (1 - 2 Pe)^2 for symmetric parameters:
///   (a1 c1 + b1 d1 - a0 c0 - b0 d0)^2 + (a1^2 + b1^2 - a0^2 - b0^2)^2.
/// Equals the squared smallest eigenvalue of rho0 - rho1 on feasible points.
double lambda_objective(const CloneParams& params);

/// The objective with the second group left unsquared, as it is commonly
/// printed. Kept only to document that it cannot equal (1 - 2 Pe)^2.
double lambda_objective_unsquared(const CloneParams& params);

/// Left minus right side of the three isometry conditions:
///   a0^2 + 2 b0^2 + d0^2 = 1
///   a1^2 + 2 b1^2 + d1^2 = 1
///   a1 a0 + 2 b1 b0 + d1 d0 = cos(theta)
/// The weights 2 b^2 assume symmetric parameters.
std::array<double, 3> constraint_residuals(const CloneParams& params, const OverlapAngle& theta);
double max_abs_residual(const CloneParams& params, const OverlapAngle& theta);

/// Coefficients (a, b, c, d) of U|0-perp>|0>, obtained by linearity from
/// |1> = cos(theta)|0> + sin(theta)|0-perp>. Throws SingularExpansionError
/// at theta = 0.
std::array<double, 4> ancilla_row(const CloneParams& params, const OverlapAngle& theta);

/// Full 4x4 real orthogonal matrix (columns indexed like kets) extending the
/// isometry by Gram-Schmidt on the remaining basis vectors. Diagnostics only.
std::array<std::array<double, 4>, 4> unitary_completion(const CloneParams& params, const OverlapAngle& theta);

/// h(Pe) with Pe = (1 - sin theta)/2; independent of phi.
double clone_entanglement(const OverlapAngle& theta, double phi);

}  // namespace qbc::cloner
