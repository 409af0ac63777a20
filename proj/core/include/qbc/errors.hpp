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

#include <stdexcept>
#include <string>

namespace qbc {

/// Caller broke a precondition (wrong dimension, argument out of range).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numeric data failed a structural check (non-Hermitian, negative spectrum, NaN).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cloning coefficients do not define an isometry.
class InfeasibleParamsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The |1> = cos(theta)|0> + sin(theta)|0-perp> expansion is singular at theta = 0.
class SingularExpansionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative numerical procedure gave up.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qbc
