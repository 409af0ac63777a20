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

namespace qbc::tol {

// Central tolerance table. Library checks and tests read from here.

/// Entrywise equality of values that are equal in exact arithmetic.
inline constexpr double kEquality = 1e-12;
/// Admission of input data (Hermiticity, normalization of clone states).
inline constexpr double kValidation = 1e-9;
/// Smallest eigenvalue admitted for a positive semidefinite operator.
inline constexpr double kNegativeEigenvalue = 1e-10;
/// Eigendecomposition reconstruction and orthonormality.
inline constexpr double kEigen = 1e-10;
/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;
/// Eigenvalues with magnitude at or below this are treated as zero when
/// splitting a spectrum by sign.
inline constexpr double kZeroEigenvalue = 1e-14;
/// A parameter set counts as feasible when all isometry residuals are below this.
inline constexpr double kFeasible = 1e-9;
/// Target for the feasibility projection.
inline constexpr double kProjection = 1e-12;

}  // namespace qbc::tol
