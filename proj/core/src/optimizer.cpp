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

#include "qbc/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "qbc/tolerances.hpp"

namespace qbc::optimizer {
namespace {

using Vec3 = std::array<double, 3>;
using Vec6 = std::array<double, 6>;

// Working coordinates: v_i = (x_i, y_i, sqrt2 b_i). The isometry conditions
// read |v0| = |v1| = 1 and v0 . v1 = cos(theta).
struct Point {
    Vec3 v0;
    Vec3 v1;
};

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kProjectionRounds = 200;
constexpr double kBasinLow = 0.1;
constexpr double kBasinHigh = 10.0;
// Once no step improves Lambda in floating point, a start still counts as
// converged if its tangent gradient is this small.
constexpr double kStallGradient = 1e-6;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point to_point(const CloneParams& p) {
    const auto xy = XYParams::from_clone(p);
    return {{xy.x0, xy.y0, kSqrt2 * xy.b0}, {xy.x1, xy.y1, kSqrt2 * xy.b1}};
}

CloneParams to_params(const Point& w) {
    return XYParams{w.v0[0], w.v0[1], w.v1[0], w.v1[1], w.v0[2] / kSqrt2, w.v1[2] / kSqrt2}.to_clone();
}

Vec3 normalized(const Vec3& v) {
    const double n = std::sqrt(dot(v, v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

// Overlap of n(v0 + t v1) and n(v1 + t v0) for unit v0, v1 with overlap c.
double mixed_overlap(double c, double t) { return ((1.0 + t * t) * c + 2.0 * t) / (1.0 + 2.0 * t * c + t * t); }

double mixed_overlap_slope(double c, double t) {
    const double num = (1.0 + t * t) * c + 2.0 * t;
    const double den = 1.0 + 2.0 * t * c + t * t;
    return ((2.0 * t * c + 2.0) * den - num * (2.0 * c + 2.0 * t)) / (den * den);
}

// Solves mixed_overlap(c, t) = target for t in [-1, 1] by Newton with a
// bisection safeguard. The overlap rises monotonically from -1 to 1 on it.
double solve_mixing(double c, double target) {
    if (target >= 1.0) return 1.0;
    double lo = -1.0;
    double hi = 1.0;
    double t = 0.0;
    for (int it = 0; it < 100; ++it) {
        const double g = mixed_overlap(c, t) - target;
        if (g == 0.0) break;
        if (g > 0.0) hi = t; else lo = t;
        const double slope = mixed_overlap_slope(c, t);
        double next = slope > 0.0 ? t - g / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-17) {
            t = next;
            break;
        }
        t = next;
    }
    return t;
}

Point project(Point w, double target) {
    for (const Vec3* v : {&w.v0, &w.v1}) {
        const double n = std::sqrt(dot(*v, *v));
        if (!(n >= kBasinLow && n <= kBasinHigh)) {
            throw ConvergenceError("projection start outside basin: row norm " + std::to_string(n));
        }
    }
    for (int round = 0; round < kProjectionRounds; ++round) {
        w.v0 = normalized(w.v0);
        w.v1 = normalized(w.v1);
        const double c = dot(w.v0, w.v1);
        const double norm_err = std::max(std::abs(dot(w.v0, w.v0) - 1.0), std::abs(dot(w.v1, w.v1) - 1.0));
        if (std::abs(c - target) <= 0.1 * tol::kProjection && norm_err <= 0.1 * tol::kProjection) return w;
        if (target < 1.0 && 1.0 - c * c < 1e-24) {
            throw ConvergenceError("projection failed: rows are parallel");
        }
        const double t = solve_mixing(c, target);
        const Point prev = w;
        for (std::size_t k = 0; k < 3; ++k) {
            w.v0[k] = prev.v0[k] + t * prev.v1[k];
            w.v1[k] = prev.v1[k] + t * prev.v0[k];
        }
    }
    throw ConvergenceError("projection did not converge in 200 rounds");
}

double lambda_at(const Point& w) {
    const double b0 = w.v0[2] / kSqrt2;
    const double b1 = w.v1[2] / kSqrt2;
    const double p = b1 * w.v1[0] - b0 * w.v0[0];
    const double s0 = w.v0[0] + w.v0[1];
    const double s1 = w.v1[0] + w.v1[1];
    const double q = 0.5 * s1 * s1 + b1 * b1 - 0.5 * s0 * s0 - b0 * b0;
    return 2.0 * p * p + q * q;
}

// Gradient with respect to (v0, v1).
Vec6 gradient_at(const Point& w) {
    const XYParams xy{w.v0[0], w.v0[1], w.v1[0], w.v1[1], w.v0[2] / kSqrt2, w.v1[2] / kSqrt2};
    const auto g = lambda_gradient(xy);
    return {g[0], g[1], g[4] / kSqrt2, g[2], g[3], g[5] / kSqrt2};
}

// Removes the components of g along the constraint normals.
Vec6 tangent_part(const Point& w, Vec6 g) {
    std::array<Vec6, 3> normals{Vec6{w.v0[0], w.v0[1], w.v0[2], 0, 0, 0}, Vec6{0, 0, 0, w.v1[0], w.v1[1], w.v1[2]},
                                Vec6{w.v1[0], w.v1[1], w.v1[2], w.v0[0], w.v0[1], w.v0[2]}};
    std::vector<Vec6> basis;
    for (auto n : normals) {
        for (const auto& q : basis) {
            double d = 0.0;
            for (std::size_t k = 0; k < 6; ++k) d += n[k] * q[k];
            for (std::size_t k = 0; k < 6; ++k) n[k] -= d * q[k];
        }
        double len = 0.0;
        for (double x : n) len += x * x;
        len = std::sqrt(len);
        if (len < 1e-10) continue;
        for (double& x : n) x /= len;
        basis.push_back(n);
    }
    for (const auto& q : basis) {
        double d = 0.0;
        for (std::size_t k = 0; k < 6; ++k) d += g[k] * q[k];
        for (std::size_t k = 0; k < 6; ++k) g[k] -= d * q[k];
    }
    return g;
}

double norm6(const Vec6& g) {
    double s = 0.0;
    for (double x : g) s += x * x;
    return std::sqrt(s);
}

Point random_start(std::mt19937_64& rng, double target) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Point w{};
        for (auto& x : w.v0) x = gauss(rng);
        for (auto& x : w.v1) x = gauss(rng);
        try {
            return project(w, target);
        } catch (const ConvergenceError&) {
            continue;
        }
    }
    throw ConvergenceError("could not draw a feasible starting point");
}

StartOutcome run_start(int index, const OverlapAngle& theta, const OptimizerConfig& config) {
    StartOutcome out;
    out.index = index;
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed & 0xffffffffU),
                      static_cast<std::uint32_t>(config.seed >> 32), static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    const double target = theta.overlap();

    Point w;
    try {
        w = random_start(rng, target);
    } catch (const ConvergenceError&) {
        return out;
    }
    double value = lambda_at(w);
    double step = config.step_init;
    double gnorm = 0.0;
    bool stalled = false;
    int it = 0;
    for (; it < config.max_iters; ++it) {
        const auto g = tangent_part(w, gradient_at(w));
        gnorm = norm6(g);
        if (gnorm < config.tol) break;
        bool accepted = false;
        while (step > 1e-20) {
            Point trial = w;
            for (std::size_t k = 0; k < 3; ++k) {
                trial.v0[k] += step * g[k];
                trial.v1[k] += step * g[k + 3];
            }
            try {
                trial = project(trial, target);
            } catch (const ConvergenceError&) {
                step *= 0.5;
                continue;
            }
            const double trial_value = lambda_at(trial);
            if (trial_value > value) {
                w = trial;
                value = trial_value;
                accepted = true;
                step = std::min(2.0 * step, 1.0);
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            stalled = true;
            break;
        }
    }
    gnorm = norm6(tangent_part(w, gradient_at(w)));
    out.params = to_params(w);
    out.lambda = cloner::lambda_objective(out.params);
    out.residual_max = cloner::max_abs_residual(out.params, theta);
    out.gradient_norm = gnorm;
    out.iterations = it;
    out.converged = out.residual_max < tol::kFeasible &&
                    (gnorm < config.tol || (stalled && gnorm < kStallGradient));
    return out;
}

double params_distance(const CloneParams& a, const CloneParams& b) {
    const auto ra0 = a.row(0), ra1 = a.row(1), rb0 = b.row(0), rb1 = b.row(1);
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        d = std::max({d, std::abs(ra0[k] - rb0[k]), std::abs(ra1[k] - rb1[k])});
    }
    return d;
}

}  // namespace

std::array<double, 6> lambda_gradient(const XYParams& p) {
    // Lambda = 2 P^2 + Q^2 with P = b1 x1 - b0 x0 and
    // Q = (x1 + y1)^2 / 2 + b1^2 - (x0 + y0)^2 / 2 - b0^2.
    const double big_p = p.b1 * p.x1 - p.b0 * p.x0;
    const double s0 = p.x0 + p.y0;
    const double s1 = p.x1 + p.y1;
    const double big_q = 0.5 * s1 * s1 + p.b1 * p.b1 - 0.5 * s0 * s0 - p.b0 * p.b0;
    return {-4.0 * big_p * p.b0 - 2.0 * big_q * s0,
            -2.0 * big_q * s0,
            4.0 * big_p * p.b1 + 2.0 * big_q * s1,
            2.0 * big_q * s1,
            -4.0 * big_p * p.x0 - 4.0 * big_q * p.b0,
            4.0 * big_p * p.x1 + 4.0 * big_q * p.b1};
}

CloneParams project_to_feasible(const CloneParams& raw, const OverlapAngle& theta) {
    if (!raw.is_symmetric()) throw UsageError("projection expects symmetric parameters (c = b)");
    return to_params(project(to_point(raw), theta.overlap()));
}

OptimizationReport maximize_lambda(const OverlapAngle& theta, const OptimizerConfig& config) {
    if (config.n_starts < 1) throw UsageError("n_starts must be at least 1");
    if (config.max_iters < 0) throw UsageError("max_iters must be nonnegative");
    if (!(config.step_init > 0.0) || !(config.tol > 0.0)) throw UsageError("step_init and tol must be positive");

    OptimizationReport report;
    report.starts.resize(static_cast<std::size_t>(config.n_starts));
    const int threads = std::clamp(config.threads, 1, config.n_starts);
    if (threads == 1) {
        for (int i = 0; i < config.n_starts; ++i) report.starts[static_cast<std::size_t>(i)] = run_start(i, theta, config);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (int i = t; i < config.n_starts; i += threads) {
                    report.starts[static_cast<std::size_t>(i)] = run_start(i, theta, config);
                }
            });
        }
    }

    for (const auto& s : report.starts) {
        if (!s.converged) continue;
        ++report.starts_converged;
        if (report.best_start < 0 || s.lambda > report.starts[static_cast<std::size_t>(report.best_start)].lambda) {
            report.best_start = s.index;
        }
    }
    if (report.best_start < 0) {
        throw OptimizationFailure("no optimizer start converged at theta = " + std::to_string(theta.radians()),
                                  std::move(report));
    }
    const auto& best = report.starts[static_cast<std::size_t>(report.best_start)];
    report.best_params = best.params;
    report.lambda_max = cloner::lambda_objective(best.params);
    report.residual_max = best.residual_max;
    return report;
}

std::vector<StartOutcome> distinct_optima(const OptimizationReport& report, double distance) {
    std::vector<StartOutcome> out;
    for (const auto& s : report.starts) {
        if (!s.converged) continue;
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const StartOutcome& o) { return params_distance(o.params, s.params) <= distance; });
        if (!seen) out.push_back(s);
    }
    return out;
}

}  // namespace qbc::optimizer
