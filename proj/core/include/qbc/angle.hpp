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

#include <cmath>
#include <numbers>
#include <string>

#include "qbc/errors.hpp"

namespace qbc {

/// Angle theta of the input pair, <1|0> = cos(theta), 0 <= theta <= pi/2.
class OverlapAngle {
public:
    explicit OverlapAngle(double theta) : theta_(theta) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
            throw UsageError("theta must lie in [0, pi/2], got " + std::to_string(theta));
        }
    }

    double radians() const { return theta_; }
    double overlap() const { return std::cos(theta_); }

private:
    double theta_;
};

}  // namespace qbc
