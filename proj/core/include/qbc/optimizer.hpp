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
#include <cstdint>
#include <vector>

#include "qbc/angle.hpp"
#include "qbc/cloner.hpp"
#include "qbc/errors.hpp"

namespace qbc::optimizer {

using cloner::CloneParams;
using cloner::XYParams;

struct OptimizerConfig {
    int n_starts = 32;
    int max_iters = 5000;
    double step_init = 0.1;
    /// Stop once the tangent-space gradient norm drops below this.
    double tol = 1e-10;
    std::uint64_t seed = 42;
    /// Starts are run on this many threads; results do not depend on it.
    int threads = 1;
};

struct StartOutcome {
    int index = 0;
    CloneParams params;
    double lambda = 0.0;
    double residual_max = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct OptimizationReport {
    CloneParams best_params;
    double lambda_max = 0.0;
    int starts_converged = 0;
    double residual_max = 0.0;
    int best_start = -1;
    std::vector<StartOutcome> starts;
};

class OptimizationFailure : public ConvergenceError {
public:
    OptimizationFailure(const std::string& what, OptimizationReport report)
        : ConvergenceError(what), report_(std::move(report)) {}

    const OptimizationReport& report() const { return report_; }

private:
    OptimizationReport report_;
};

/// Maximizes the Lambda objective over symmetric real parameters subject to
/// the isometry conditions at angle theta.
OptimizationReport maximize_lambda(const OverlapAngle& theta, const OptimizerConfig& config = {});

/// Maps near-feasible symmetric parameters onto the constraint manifold:
/// both rows are rescaled onto the unit (weighted) sphere, then mixed with a
/// scalar t found by Newton iteration so their overlap equals cos(theta).
/// Throws ConvergenceError outside the basin (a row norm outside [0.1, 10])
/// or when 200 rounds do not reach the target residual.
CloneParams project_to_feasible(const CloneParams& raw, const OverlapAngle& theta);

/// d Lambda / d(x0, y0, x1, y1, b0, b1), in XYParams field order.
std::array<double, 6> lambda_gradient(const XYParams& p);

/// Converged starts grouped by parameter distance; one representative each.
std::vector<StartOutcome> distinct_optima(const OptimizationReport& report, double distance = 1e-6);

}  // namespace qbc::optimizer
