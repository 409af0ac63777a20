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
#include <string>
#include <vector>

namespace qbc::verify {

struct SuiteResult {
    std::string name;
    int count = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    /// Inputs of the first case that exceeded the tolerance, empty on success.
    std::string first_failure;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Multiplies every suite tolerance. Values <= 0 force failures; used as
    /// a negative control for the release gate.
    double tolerance_scale = 1.0;
};

/// Runs every invariant suite. Deterministic for a fixed seed.
std::vector<SuiteResult> run_all(const VerifyOptions& options = {});

}  // namespace qbc::verify
