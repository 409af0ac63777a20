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

#include "qbc/infochannel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qbc/cloner.hpp"
#include "qbc/errors.hpp"
#include "qbc/tolerances.hpp"

namespace qbc::info {
namespace {

void require_probability(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw UsageError(std::string(what) + " must lie in [0, 1]");
}

void require_half_range(double x, const char* what) {
    if (!(x >= 0.0 && x <= 0.5)) throw UsageError(std::string(what) + " must lie in [0, 0.5]");
}

// x ln(x / y) with the 0 ln 0 = 0 convention.
double plogq(double x, double ratio) { return x > 0.0 ? x * std::log(ratio) : 0.0; }

}  // namespace

double binary_entropy(double x) {
    require_probability(x, "binary entropy argument");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log(x);
    if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
    return h;
}

double binary_convolution(double a, double b) { return (1.0 - b) * a + b * (1.0 - a); }

BinaryChannel::BinaryChannel(const Table& p) : p_(p) {
    for (int in = 0; in < 2; ++in) {
        double col = 0.0;
        for (int out = 0; out < 2; ++out) {
            double& v = p_[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)];
            if (!(v >= -tol::kEquality && v <= 1.0 + tol::kEquality)) {
                throw ValidationError("channel entry outside [0, 1]");
            }
            col += v;
            // Round-off from trace evaluations.
            v = std::clamp(v, 0.0, 1.0);
        }
        if (std::abs(col - 1.0) > tol::kEquality) throw ValidationError("channel column does not sum to 1");
    }
}

BinaryChannel BinaryChannel::symmetric(double crossover) {
    require_probability(crossover, "crossover");
    return BinaryChannel(Table{{{1.0 - crossover, crossover}, {crossover, 1.0 - crossover}}});
}

BinaryChannel compose(const BinaryChannel& second, const BinaryChannel& first) {
    BinaryChannel::Table t{};
    for (int z = 0; z < 2; ++z) {
        for (int x = 0; x < 2; ++x) {
            t[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] =
                second(z, 0) * first(0, x) + second(z, 1) * first(1, x);
        }
    }
    return BinaryChannel(t);
}

BinaryChannel induced_channel(const discrimination::DensityMatrix& rho0, const discrimination::DensityMatrix& rho1,
                              const discrimination::BinaryPOVM& povm) {
    if (povm.dim() != 2 || rho0.dim() != 2 || rho1.dim() != 2) {
        throw UsageError("induced channel expects qubit states and measurement");
    }
    BinaryChannel::Table t{};
    const std::array<const discrimination::DensityMatrix*, 2> rho{&rho0, &rho1};
    for (int y = 0; y < 2; ++y) {
        for (int x = 0; x < 2; ++x) {
            t[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
                hilbert::trace_product(rho[static_cast<std::size_t>(x)]->op(), povm.element(y));
        }
    }
    return BinaryChannel(t);
}

BinaryChannel induced_channel(const OverlapAngle& theta, double phi, const discrimination::BinaryPOVM& povm) {
    const auto params = cloner::optimal_params(theta, phi);
    const auto m0 = cloner::marginals(cloner::clone_state(params, 0));
    const auto m1 = cloner::marginals(cloner::clone_state(params, 1));
    return induced_channel(m0.traced_blank, m1.traced_blank, povm);
}

JointCloneChannel joint_clone_channel(const OverlapAngle& theta, double phi, const discrimination::BinaryPOVM& povm) {
    if (povm.dim() != 2) throw UsageError("joint clone channel expects a qubit measurement");
    const auto params = cloner::optimal_params(theta, phi);
    JointCloneChannel p{};
    for (int x = 0; x < 2; ++x) {
        const auto sigma = cloner::clone_state(params, x);
        for (int y = 0; y < 2; ++y) {
            for (int z = 0; z < 2; ++z) {
                const auto effect = hilbert::kron(povm.element(y), povm.element(z));
                p[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] =
                    hilbert::expectation(sigma, effect);
            }
        }
    }
    return p;
}

DegradationFit fit_degradation(const BinaryChannel& p1, const BinaryChannel& p2) {
    // w = [[1 - w0, w1], [w0, 1 - w1]]. With f_x = (w p1)(0, x) - p2(0, x),
    // minimize t subject to |f_x| <= t and 0 <= w0, w1 <= 1. Each plane is
    // (alpha, beta, gamma, delta) meaning alpha w0 + beta w1 + gamma t = delta.
    struct Plane {
        double a, b, g, d;
    };
    std::vector<Plane> planes;
    for (int x = 0; x < 2; ++x) {
        const double alpha = -p1(0, x);
        const double beta = p1(1, x);
        const double delta = p2(0, x) - p1(0, x);
        planes.push_back({alpha, beta, -1.0, delta});
        planes.push_back({alpha, beta, 1.0, delta});
    }
    planes.push_back({1, 0, 0, 0});
    planes.push_back({1, 0, 0, 1});
    planes.push_back({0, 1, 0, 0});
    planes.push_back({0, 1, 0, 1});

    auto f = [&](int x, double w0, double w1) { return p1(0, x) - w0 * p1(0, x) + w1 * p1(1, x) - p2(0, x); };
    auto channel_of = [](double w0, double w1) {
        return BinaryChannel(BinaryChannel::Table{{{1.0 - w0, w1}, {w0, 1.0 - w1}}});
    };
    auto residual_of = [&](const BinaryChannel& w) {
        const auto wp = compose(w, p1);
        double r = 0.0;
        for (int z = 0; z < 2; ++z) {
            for (int x = 0; x < 2; ++x) r = std::max(r, std::abs(wp(z, x) - p2(z, x)));
        }
        return r;
    };

    constexpr double kSlack = 1e-12;
    double best_t = std::numeric_limits<double>::infinity();
    double best_w0 = 0.0;
    double best_w1 = 0.0;
    const std::size_t n = planes.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Plane& P = planes[i];
                const Plane& Q = planes[j];
                const Plane& R = planes[k];
                const double det = P.a * (Q.b * R.g - Q.g * R.b) - P.b * (Q.a * R.g - Q.g * R.a) +
                                   P.g * (Q.a * R.b - Q.b * R.a);
                if (std::abs(det) < 1e-14) continue;
                const double w0 = (P.d * (Q.b * R.g - Q.g * R.b) - P.b * (Q.d * R.g - Q.g * R.d) +
                                   P.g * (Q.d * R.b - Q.b * R.d)) / det;
                const double w1 = (P.a * (Q.d * R.g - Q.g * R.d) - P.d * (Q.a * R.g - Q.g * R.a) +
                                   P.g * (Q.a * R.d - Q.d * R.a)) / det;
                const double t = (P.a * (Q.b * R.d - Q.d * R.b) - P.b * (Q.a * R.d - Q.d * R.a) +
                                  P.d * (Q.a * R.b - Q.b * R.a)) / det;
                if (w0 < -kSlack || w0 > 1.0 + kSlack || w1 < -kSlack || w1 > 1.0 + kSlack) continue;
                if (std::abs(f(0, w0, w1)) > t + kSlack || std::abs(f(1, w0, w1)) > t + kSlack) continue;
                if (t < best_t) {
                    best_t = t;
                    best_w0 = std::clamp(w0, 0.0, 1.0);
                    best_w1 = std::clamp(w1, 0.0, 1.0);
                }
            }
        }
    }
    if (!std::isfinite(best_t)) throw ConvergenceError("degradation fit found no feasible vertex");
    const auto w = channel_of(best_w0, best_w1);
    return {w, residual_of(w)};
}

double check_degraded(const BinaryChannel& p1, const BinaryChannel& p2) { return fit_degradation(p1, p2).residual; }

char var_name(Var v) {
    switch (v) {
        case Var::S: return 'S';
        case Var::X: return 'X';
        case Var::Y: return 'Y';
        case Var::Z: return 'Z';
    }
    return '?';
}

JointDistribution::JointDistribution(std::vector<Var> vars, std::vector<double> table)
    : vars_(std::move(vars)), table_(std::move(table)) {
    if (vars_.empty() || vars_.size() > 4) throw UsageError("joint distribution needs 1 to 4 variables");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = i + 1; j < vars_.size(); ++j) {
            if (vars_[i] == vars_[j]) throw UsageError("joint distribution variables must be distinct");
        }
    }
    if (table_.size() != (std::size_t{1} << vars_.size())) throw UsageError("table size must be 2^n");
    double total = 0.0;
    for (double& p : table_) {
        if (!(p >= -tol::kEquality)) throw ValidationError("joint probability is negative or NaN");
        p = std::max(p, 0.0);
        total += p;
    }
    if (std::abs(total - 1.0) > tol::kEquality) throw ValidationError("joint distribution does not sum to 1");
}

bool JointDistribution::contains(Var v) const { return std::find(vars_.begin(), vars_.end(), v) != vars_.end(); }

std::size_t JointDistribution::position(Var v) const {
    const auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw UsageError(std::string("variable ") + var_name(v) + " not in distribution");
    return static_cast<std::size_t>(it - vars_.begin());
}

double JointDistribution::probability(std::span<const int> values) const {
    if (values.size() != vars_.size()) throw UsageError("assignment size does not match variable count");
    std::size_t index = 0;
    for (int v : values) {
        if (v != 0 && v != 1) throw UsageError("binary variable value must be 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(v);
    }
    return table_[index];
}

JointDistribution JointDistribution::marginal(const std::vector<Var>& keep) const {
    std::vector<std::size_t> pos;
    for (Var v : keep) pos.push_back(position(v));
    const std::size_t n = vars_.size();
    std::vector<double> out(std::size_t{1} << keep.size(), 0.0);
    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
        std::size_t target = 0;
        for (std::size_t p : pos) target = (target << 1) | ((idx >> (n - 1 - p)) & 1U);
        out[target] += table_[idx];
    }
    return JointDistribution(keep, std::move(out));
}

JointDistribution cascade_joint(double epsilon, const BinaryChannel& receiver, const BinaryChannel& w) {
    require_half_range(epsilon, "epsilon");
    const auto trade_off = BinaryChannel::symmetric(epsilon);
    std::vector<double> table(16, 0.0);
    for (int s = 0; s < 2; ++s) {
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                for (int z = 0; z < 2; ++z) {
                    table[static_cast<std::size_t>((s << 3) | (x << 2) | (y << 1) | z)] =
                        0.5 * trade_off(x, s) * receiver(y, x) * w(z, y);
                }
            }
        }
    }
    return JointDistribution({Var::S, Var::X, Var::Y, Var::Z}, std::move(table));
}

JointDistribution cascade_joint(double epsilon, double pe) {
    require_half_range(pe, "pe");
    return cascade_joint(epsilon, BinaryChannel::symmetric(pe), BinaryChannel::identity());
}

double mutual_information(const JointDistribution& joint, Var a, Var b) {
    if (a == b) throw UsageError("mutual information needs two distinct variables");
    const auto pab = joint.marginal({a, b});
    const auto pa = joint.marginal({a});
    const auto pb = joint.marginal({b});
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double p = pab.probability({i, j});
            if (p > 0.0) sum += plogq(p, p / (pa.probability({i}) * pb.probability({j})));
        }
    }
    return std::max(sum, 0.0);
}

double conditional_mutual_information(const JointDistribution& joint, Var a, Var b, Var cond) {
    if (a == b || a == cond || b == cond) throw UsageError("conditional mutual information needs distinct variables");
    const auto pabc = joint.marginal({a, b, cond});
    const auto pac = joint.marginal({a, cond});
    const auto pbc = joint.marginal({b, cond});
    const auto pc = joint.marginal({cond});
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const double p = pabc.probability({i, j, k});
                if (p <= 0.0) continue;
                // p(b|a,c) / p(b|c) = p(a,b,c) p(c) / (p(a,c) p(b,c))
                sum += plogq(p, p * pc.probability({k}) / (pac.probability({i, k}) * pbc.probability({j, k})));
            }
        }
    }
    return std::max(sum, 0.0);
}

RatePoint rate_region_closed_form(double pe, double epsilon) {
    require_half_range(pe, "pe");
    require_half_range(epsilon, "epsilon");
    const double smeared = binary_convolution(epsilon, pe);
    const double h_smeared = binary_entropy(smeared);
    return {h_smeared - binary_entropy(pe), std::numbers::ln2 - h_smeared};
}

RatePoint rates_from_joint(const JointDistribution& cascade) {
    return {conditional_mutual_information(cascade, Var::X, Var::Y, Var::S),
            mutual_information(cascade, Var::S, Var::Z)};
}

}  // namespace qbc::info
