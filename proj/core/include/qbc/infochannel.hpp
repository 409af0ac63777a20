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
#include <initializer_list>
#include <span>
#include <vector>

#include "qbc/angle.hpp"
#include "qbc/discrimination.hpp"

namespace qbc::info {

// All information quantities are in nats.

/// h(x) = -x ln x - (1 - x) ln(1 - x), with h(0) = h(1) = 0.
double binary_entropy(double x);

/// Crossover of two cascaded binary symmetric channels: (1 - b) a + b (1 - a).
double binary_convolution(double a, double b);

/// Column-stochastic 2x2 channel, entry (out, in) = p(out | in).
class BinaryChannel {
public:
    using Table = std::array<std::array<double, 2>, 2>;

    explicit BinaryChannel(const Table& p);

    static BinaryChannel symmetric(double crossover);
    static BinaryChannel identity() { return symmetric(0.0); }

    double operator()(int out, int in) const {
        return p_[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)];
    }
    const Table& table() const { return p_; }

private:
    Table p_;
};

/// second(first(.)): p(z|x) = sum_y second(z|y) first(y|x).
BinaryChannel compose(const BinaryChannel& second, const BinaryChannel& first);

/// p(y|x) = tr(rho_x pi_y).
BinaryChannel induced_channel(const discrimination::DensityMatrix& rho0, const discrimination::DensityMatrix& rho1,
                              const discrimination::BinaryPOVM& povm);

/// Channel seen by the receiver holding the system-side clone of the
/// optimal cloner at (theta, phi), measuring with `povm`.
BinaryChannel induced_channel(const OverlapAngle& theta, double phi, const discrimination::BinaryPOVM& povm);

/// p[x][y][z] = <sigma_x| pi_y (x) pi_z |sigma_x>, y measured on the system
/// clone and z on the blank clone.
using JointCloneChannel = std::array<std::array<std::array<double, 2>, 2>, 2>;
JointCloneChannel joint_clone_channel(const OverlapAngle& theta, double phi, const discrimination::BinaryPOVM& povm);

struct DegradationFit {
    BinaryChannel w;
    /// max over entries of |(w p1) - p2|
    double residual;
};

/// Column-stochastic w minimizing the max-entry residual of p2 = w p1.
/// Solved exactly as a three-variable linear program by vertex enumeration.
DegradationFit fit_degradation(const BinaryChannel& p1, const BinaryChannel& p2);
double check_degraded(const BinaryChannel& p1, const BinaryChannel& p2);

enum class Var { S, X, Y, Z };
char var_name(Var v);

/// Probability table over binary variables. The first variable in `vars` is
/// the most significant bit of the table index.
class JointDistribution {
public:
    JointDistribution(std::vector<Var> vars, std::vector<double> table);

    const std::vector<Var>& vars() const { return vars_; }
    std::span<const double> table() const { return table_; }
    bool contains(Var v) const;

    /// `values[k]` is the value of `vars()[k]`.
    double probability(std::span<const int> values) const;
    double probability(std::initializer_list<int> values) const {
        return probability(std::span<const int>(values.begin(), values.size()));
    }

    /// Marginal over `keep`, in the order given.
    JointDistribution marginal(const std::vector<Var>& keep) const;

private:
    std::size_t position(Var v) const;

    std::vector<Var> vars_;
    std::vector<double> table_;
};

/// Uniform S through the trade-off channel BSC(epsilon) to X, through the
/// receiver channel to Y, and through w to Z.
JointDistribution cascade_joint(double epsilon, const BinaryChannel& receiver, const BinaryChannel& w);
/// Receiver channel BSC(pe) and w = identity.
JointDistribution cascade_joint(double epsilon, double pe);

/// I(A:B) = sum p(a,b) ln(p(a|b) / p(a)).
double mutual_information(const JointDistribution& joint, Var a, Var b);
/// I(A:B|C) = sum p(a,b,c) ln(p(b|a,c) / p(b|c)).
double conditional_mutual_information(const JointDistribution& joint, Var a, Var b, Var cond);

/// Rate bounds R1 <= I(X:Y|S), R2 <= I(S:Z), nats per symbol.
struct RatePoint {
    double r1;
    double r2;
};

RatePoint rate_region_closed_form(double pe, double epsilon);
/// Same bounds by direct summation over a cascade joint distribution.
RatePoint rates_from_joint(const JointDistribution& cascade);

}  // namespace qbc::info
