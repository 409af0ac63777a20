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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace qbc::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Inclusive uniform grid: point k = start + k (stop - start) / (steps - 1).
struct SweepSpec {
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;

    /// Parses "start:stop:steps". Throws UsageError on malformed input.
    static SweepSpec parse(const std::string& text);
    double point(int k) const;
};

struct RunRecord {
    double theta = 0, phi = 0, epsilon = 0;
    double p_e = 0, lambda_max = 0, entanglement = 0, r1 = 0, r2 = 0;
    std::uint64_t seed = 42;
};

inline constexpr const char* kSweepCsvHeader = "theta,phi,epsilon,p_e,lambda_max,entanglement,r1,r2,seed";

nlohmann::json discriminate_report(double theta, std::uint64_t seed);
nlohmann::json clone_report(double theta, double phi, std::uint64_t seed);
nlohmann::json optimize_report(double theta, int n_starts, std::uint64_t seed, int threads);
nlohmann::json rates_report(double theta, double epsilon, double phi, std::uint64_t seed);

RunRecord evaluate_point(double theta, double phi, double epsilon, int n_starts, std::uint64_t seed);
std::vector<RunRecord> sweep(const SweepSpec& theta_grid, double phi, double epsilon, int n_starts,
                             std::uint64_t seed, int threads);
std::string sweep_csv(const std::vector<RunRecord>& records);
nlohmann::json sweep_json(const std::vector<RunRecord>& records);

/// Flat one-row CSV of the scalar fields of a point report.
std::string scalar_csv(const nlohmann::json& report);

/// Formats a double with 17 significant digits.
std::string format_number(double x);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbc::cli
