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

#include "qbc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "qbc/cloner.hpp"
#include "qbc/discrimination.hpp"
#include "qbc/hilbert.hpp"
#include "qbc/infochannel.hpp"
#include "qbc/optimizer.hpp"

namespace qbc::verify {
namespace {

using hilbert::Complex;
using hilbert::DensityMatrix;
using hilbert::HermitianOp;
using hilbert::Ket;
constexpr double kPi = std::numbers::pi;

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

class Suite {
public:
    Suite(std::string name, double tolerance, double scale) {
        result_.name = std::move(name);
        result_.tolerance = tolerance * scale;
    }

    void observe(double deviation, const std::function<std::string()>& describe) {
        ++result_.count;
        if (!(deviation <= result_.max_deviation)) result_.max_deviation = deviation;
        if (!(deviation <= result_.tolerance) && result_.passed) {
            result_.passed = false;
            result_.first_failure = describe() + fmt(" deviation=%.17g", deviation);
        }
    }

    SuiteResult done() { return std::move(result_); }

private:
    SuiteResult result_;
};

HermitianOp random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> e(static_cast<std::size_t>(dim * dim));
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            const Complex z = r == c ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
            e[static_cast<std::size_t>(r * dim + c)] = z;
            e[static_cast<std::size_t>(c * dim + r)] = std::conj(z);
        }
    }
    return HermitianOp(dim, e);
}

DensityMatrix random_qubit_state(std::mt19937_64& rng) {
    // Mixture of a random pure state with the identity.
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Ket psi = Ket{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))}.normalized();
    const double w = u(rng);
    const auto op = HermitianOp::projector(psi).scaled(w) + HermitianOp::identity(2).scaled(0.5 * (1.0 - w));
    return DensityMatrix(op.scaled(1.0 / op.trace()));
}

Ket random_qubit_ket(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return Ket{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))}.normalized();
}

cloner::CloneParams random_feasible(std::mt19937_64& rng, const OverlapAngle& theta) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        const auto raw = cloner::CloneParams::symmetric(g(rng), g(rng), g(rng), g(rng), g(rng), g(rng));
        try {
            return optimizer::project_to_feasible(raw, theta);
        } catch (const ConvergenceError&) {
        }
    }
}

double reconstruction_error(const HermitianOp& m) {
    const auto eig = hilbert::hermitian_eig(m);
    auto rebuilt = HermitianOp::zero(m.dim());
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        rebuilt = rebuilt + HermitianOp::projector(eig.eigenvectors[k]).scaled(eig.eigenvalues[k]);
    }
    double err = hilbert::max_abs_difference(rebuilt, m);
    for (std::size_t j = 0; j < eig.eigenvectors.size(); ++j) {
        for (std::size_t k = 0; k < eig.eigenvectors.size(); ++k) {
            const Complex ip = hilbert::inner_product(eig.eigenvectors[j], eig.eigenvectors[k]);
            err = std::max(err, std::abs(ip - (j == k ? 1.0 : 0.0)));
        }
    }
    return err;
}

SuiteResult hilbert_eigensolver(std::mt19937_64& rng, double scale) {
    Suite s("hilbert.eigensolver", 1e-10, scale);
    for (int i = 0; i < 1000; ++i) {
        const int dim = i % 2 == 0 ? 2 : 4;
        const auto m = random_hermitian(rng, dim);
        s.observe(reconstruction_error(m), [&] { return fmt("random hermitian dim=%g case=%g", dim, i); });
    }
    return s.done();
}

SuiteResult hilbert_entropy_and_trace(std::mt19937_64& rng, double scale) {
    Suite s("hilbert.entropy_additivity_and_trace", 1e-9, scale);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_qubit_state(rng);
        const auto b = random_qubit_state(rng);
        const DensityMatrix ab(hilbert::kron(a.op(), b.op()));
        const double dev = std::abs(hilbert::von_neumann_entropy(ab) - hilbert::von_neumann_entropy(a) -
                                    hilbert::von_neumann_entropy(b));
        s.observe(dev, [&] { return fmt("entropy additivity case=%g", i); });
        const auto h = random_hermitian(rng, 4);
        for (auto traced : {hilbert::Subsystem::First, hilbert::Subsystem::Second}) {
            const double tdev = std::abs(hilbert::partial_trace(h, traced).trace() - h.trace());
            s.observe(tdev, [&] { return fmt("partial trace preservation case=%g", i); });
        }
        const auto pa = random_qubit_ket(rng);
        const auto pb = random_qubit_ket(rng);
        const auto prod = hilbert::tensor(pa, pb);
        for (auto traced : {hilbert::Subsystem::First, hilbert::Subsystem::Second}) {
            s.observe(hilbert::von_neumann_entropy(hilbert::partial_trace(prod, traced)),
                      [&] { return fmt("product state marginal entropy case=%g", i); });
        }
    }
    return s.done();
}

SuiteResult discrimination_optimality(std::mt19937_64& rng, double scale) {
    Suite s("discrimination.optimality_and_symmetry", 1e-12, scale);
    std::uniform_real_distribution<double> th(0.0, kPi / 2);
    std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
    for (int i = 0; i < 1000; ++i) {
        const double theta = th(rng);
        const double phi = ph(rng);
        const auto pair = cloner::marginal_closed_form(OverlapAngle(theta), phi);
        const auto best = discrimination::helstrom(pair.rho0, pair.rho1);
        const auto povm = discrimination::BinaryPOVM::projective(random_qubit_ket(rng));
        const double gap = best.error_prob - discrimination::error_of_povm(pair.rho0, pair.rho1, povm);
        s.observe(std::max(gap, 0.0), [&] { return fmt("theta=%.17g phi=%.17g random projective POVM", theta, phi); });
        const double swapped = discrimination::helstrom(pair.rho1, pair.rho0).error_prob;
        s.observe(std::abs(swapped - best.error_prob), [&] { return fmt("swap theta=%.17g phi=%.17g", theta, phi); });
    }
    // Coarse-graining never helps: a random measure-and-prepare channel
    // applied to both states.
    for (int i = 0; i < 200; ++i) {
        const auto r0 = random_qubit_state(rng);
        const auto r1 = random_qubit_state(rng);
        const auto m = discrimination::BinaryPOVM::projective(random_qubit_ket(rng));
        const auto out0 = random_qubit_state(rng);
        const auto out1 = random_qubit_state(rng);
        auto apply = [&](const DensityMatrix& r) {
            const double p0 = hilbert::trace_product(r.op(), m.pi0());
            return DensityMatrix(out0.op().scaled(p0) + out1.op().scaled(1.0 - p0));
        };
        const double before = discrimination::helstrom(r0, r1).error_prob;
        const double after = discrimination::helstrom(apply(r0), apply(r1)).error_prob;
        s.observe(std::max(before - after, 0.0), [&] { return fmt("data processing case=%g", i); });
    }
    return s.done();
}

SuiteResult cloner_no_extra_error(double scale) {
    Suite s("cloner.no_extra_error", 1e-12, scale);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double theta = kPi / 2 * i / 9.0;
            const double phi = 2 * kPi * j / 5.0;
            const auto p = cloner::optimal_params(OverlapAngle(theta), phi);
            const auto m0 = cloner::marginals(cloner::clone_state(p, 0));
            const auto m1 = cloner::marginals(cloner::clone_state(p, 1));
            for (const auto& [a, b] : {std::pair{&m0.traced_blank, &m1.traced_blank},
                                       std::pair{&m0.traced_system, &m1.traced_system}}) {
                const double pe = discrimination::helstrom(*a, *b).error_prob;
                s.observe(std::abs(pe - discrimination::pure_pair_error(theta)),
                          [&] { return fmt("theta=%.17g phi=%.17g", theta, phi); });
            }
        }
    }
    return s.done();
}

SuiteResult cloner_marginals(double scale) {
    Suite s("cloner.marginals_closed_form", 1e-12, scale);
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double theta = kPi / 2 * i / 19.0;
            const double phi = 2 * kPi * j / 20.0;
            const OverlapAngle angle(theta);
            const auto p = cloner::optimal_params(angle, phi);
            const auto closed = cloner::marginal_closed_form(angle, phi);
            s.observe(cloner::max_abs_residual(p, angle), [&] { return fmt("residual theta=%.17g phi=%.17g", theta, phi); });
            for (int x = 0; x < 2; ++x) {
                const auto m = cloner::marginals(cloner::clone_state(p, x));
                const auto& ref = x == 0 ? closed.rho0 : closed.rho1;
                const double dev = std::max({hilbert::max_abs_difference(m.traced_blank.op(), ref.op()),
                                             hilbert::max_abs_difference(m.traced_system.op(), ref.op()),
                                             hilbert::max_abs_difference(m.traced_blank.op(), m.traced_system.op())});
                s.observe(dev, [&] { return fmt("theta=%.17g phi=%.17g input=%g", theta, phi, x); });
                const auto eig = hilbert::hermitian_eig(ref.op());
                const double sn = std::sin(theta);
                s.observe(std::max(std::abs(eig.eigenvalues[0] - 0.5 * (1 - sn)), std::abs(eig.eigenvalues[1] - 0.5 * (1 + sn))),
                          [&] { return fmt("spectrum theta=%.17g phi=%.17g input=%g", theta, phi, x); });
            }
        }
    }
    return s.done();
}

SuiteResult cloner_entanglement(double scale) {
    Suite s("cloner.entanglement", 1e-10, scale);
    for (int i = 0; i < 20; ++i) {
        const double theta = kPi / 2 * i / 19.0;
        const OverlapAngle angle(theta);
        const double expected = info::binary_entropy(0.5 * (1 - std::sin(theta)));
        for (int j = 0; j < 20; ++j) {
            const double phi = 2 * kPi * j / 20.0;
            const auto p = cloner::optimal_params(angle, phi);
            for (int x = 0; x < 2; ++x) {
                const auto m = cloner::marginals(cloner::clone_state(p, x));
                s.observe(std::abs(hilbert::von_neumann_entropy(m.traced_blank) - expected),
                          [&] { return fmt("theta=%.17g phi=%.17g input=%g", theta, phi, x); });
            }
            s.observe(std::abs(cloner::clone_entanglement(angle, phi) - expected),
                      [&] { return fmt("closed form theta=%.17g phi=%.17g", theta, phi); });
        }
    }
    return s.done();
}

SuiteResult cloner_lambda_oracle(std::mt19937_64& rng, double scale) {
    Suite s("cloner.lambda_eigenvalue_oracle", 1e-10, scale);
    std::uniform_real_distribution<double> th(0.0, kPi / 2);
    for (int i = 0; i < 1000; ++i) {
        const double theta = th(rng);
        const OverlapAngle angle(theta);
        const auto p = random_feasible(rng, angle);
        const auto m0 = cloner::marginals(cloner::clone_state(p, 0));
        const auto m1 = cloner::marginals(cloner::clone_state(p, 1));
        const double lmin = hilbert::hermitian_eig(m0.traced_blank.op() - m1.traced_blank.op()).eigenvalues.front();
        s.observe(std::abs(cloner::lambda_objective(p) - lmin * lmin), [&] { return fmt("theta=%.17g case=%g", theta, i); });
    }
    return s.done();
}

SuiteResult optimizer_upper_bound(std::mt19937_64& rng, double scale) {
    // Deviation is the excess of Lambda over sin^2(theta).
    Suite s("optimizer.upper_bound", 1e-9, scale);
    std::uniform_real_distribution<double> th(0.0, kPi / 2);
    for (int i = 0; i < 1000; ++i) {
        const double theta = th(rng);
        const auto p = random_feasible(rng, OverlapAngle(theta));
        const double excess = cloner::lambda_objective(p) - std::sin(theta) * std::sin(theta);
        s.observe(std::max(excess, 0.0), [&] { return fmt("theta=%.17g case=%g", theta, i); });
    }
    return s.done();
}

SuiteResult optimizer_recovery(std::uint64_t seed, double scale) {
    Suite s("optimizer.recovers_optimum", 1e-6, scale);
    optimizer::OptimizerConfig config;
    config.seed = seed;
    for (int i = 0; i < 25; ++i) {
        const double theta = kPi / 2 * i / 24.0;
        double dev = 0.0;
        try {
            const auto report = optimizer::maximize_lambda(OverlapAngle(theta), config);
            dev = std::abs(report.lambda_max - std::sin(theta) * std::sin(theta));
            dev = std::max(dev, report.residual_max > 1e-9 ? report.residual_max : 0.0);
        } catch (const optimizer::OptimizationFailure&) {
            dev = std::numeric_limits<double>::infinity();
        }
        s.observe(dev, [&] { return fmt("theta=%.17g n_starts=32 seed=%g", theta, static_cast<double>(seed)); });
    }
    return s.done();
}

SuiteResult info_rate_oracle(double scale) {
    Suite s("infochannel.rate_region_oracle", 1e-12, scale);
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double pe = 0.5 * i / 19.0;
            const double eps = 0.5 * j / 19.0;
            const auto closed = info::rate_region_closed_form(pe, eps);
            const auto brute = info::rates_from_joint(info::cascade_joint(eps, pe));
            s.observe(std::max(std::abs(closed.r1 - brute.r1), std::abs(closed.r2 - brute.r2)),
                      [&] { return fmt("pe=%.17g epsilon=%.17g", pe, eps); });
        }
    }
    return s.done();
}

SuiteResult info_channels(double scale) {
    Suite s("infochannel.degraded_and_end_to_end", 1e-12, scale);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double theta = kPi / 2 * i / 9.0;
            const double eps = 0.5 * j / 9.0;
            const double phi = 0.37 + 0.5 * j;
            const OverlapAngle angle(theta);
            const auto povm = discrimination::clone_povm_closed_form(phi);
            const auto p1 = info::induced_channel(angle, phi, povm);
            const auto joint = info::joint_clone_channel(angle, phi, povm);
            info::BinaryChannel::Table z_table{};
            for (int x = 0; x < 2; ++x) {
                for (int z = 0; z < 2; ++z) {
                    z_table[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] =
                        joint[static_cast<std::size_t>(x)][0][static_cast<std::size_t>(z)] +
                        joint[static_cast<std::size_t>(x)][1][static_cast<std::size_t>(z)];
                }
            }
            const info::BinaryChannel p2(z_table);
            s.observe(info::check_degraded(p1, p2), [&] { return fmt("degraded theta=%.17g phi=%.17g", theta, phi); });

            const double pe = discrimination::pure_pair_error(theta);
            const auto closed = info::rate_region_closed_form(pe, eps);
            const auto brute = info::rates_from_joint(info::cascade_joint(eps, p1, info::BinaryChannel::identity()));
            s.observe(std::max(std::abs(closed.r1 - brute.r1), std::abs(closed.r2 - brute.r2)),
                      [&] { return fmt("end to end theta=%.17g epsilon=%.17g phi=%.17g", theta, eps, phi); });
        }
    }
    return s.done();
}

}  // namespace

std::vector<SuiteResult> run_all(const VerifyOptions& options) {
    std::mt19937_64 rng(options.seed);
    const double k = options.tolerance_scale;
    std::vector<SuiteResult> out;
    out.push_back(hilbert_eigensolver(rng, k));
    out.push_back(hilbert_entropy_and_trace(rng, k));
    out.push_back(discrimination_optimality(rng, k));
    out.push_back(cloner_no_extra_error(k));
    out.push_back(cloner_marginals(k));
    out.push_back(cloner_entanglement(k));
    out.push_back(cloner_lambda_oracle(rng, k));
    out.push_back(optimizer_upper_bound(rng, k));
    out.push_back(optimizer_recovery(options.seed, k));
    out.push_back(info_rate_oracle(k));
    out.push_back(info_channels(k));
    return out;
}

}  // namespace qbc::verify
