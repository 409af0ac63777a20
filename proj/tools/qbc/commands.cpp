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

#include "qbc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qbc/cloner.hpp"
#include "qbc/discrimination.hpp"
#include "qbc/errors.hpp"
#include "qbc/infochannel.hpp"
#include "qbc/optimizer.hpp"
#include "qbc/verify.hpp"

namespace qbc::cli {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

json complex_json(const hilbert::Complex& z) { return json::array({z.real(), z.imag()}); }

json op_json(const hilbert::HermitianOp& op) {
    json rows = json::array();
    for (int r = 0; r < op.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < op.dim(); ++c) row.push_back(complex_json(op(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json ket_json(const hilbert::Ket& k) {
    json a = json::array();
    for (const auto& z : k.amplitudes()) a.push_back(complex_json(z));
    return a;
}

json params_json(const cloner::CloneParams& p) {
    return {{"a0", p.a0}, {"b0", p.b0}, {"c0", p.c0}, {"d0", p.d0},
            {"a1", p.a1}, {"b1", p.b1}, {"c1", p.c1}, {"d1", p.d1}};
}

void require_phi(double phi) {
    if (!(phi >= 0.0 && phi < 2 * kPi)) throw UsageError("phi must lie in [0, 2pi)");
}

void require_epsilon(double eps) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw UsageError("epsilon must lie in [0, 0.5]");
}

void require_starts(int n) {
    if (n < 1) throw UsageError("--n-starts must be at least 1");
}

template <typename F>
void parallel_for(int n, int threads, F&& body) {
    threads = std::clamp(threads, 1, std::max(n, 1));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) body(i);
        });
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output path: " + out_path);
    file << text;
    file.flush();
    if (!file) throw UsageError("failed writing output path: " + out_path);
}

std::string verify_table(const std::vector<verify::SuiteResult>& results, std::uint64_t seed) {
    std::ostringstream s;
    char line[256];
    std::snprintf(line, sizeof line, "%-40s %6s %14s %12s %6s\n", "suite", "count", "max_deviation", "tolerance",
                  "status");
    s << "qbc verify --seed " << seed << "\n" << line;
    int passed = 0;
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-40s %6d %14.6e %12.3e %6s\n", r.name.c_str(), r.count, r.max_deviation,
                      r.tolerance, r.passed ? "PASS" : "FAIL");
        s << line;
        passed += r.passed ? 1 : 0;
    }
    s << "result: " << (passed == static_cast<int>(results.size()) ? "PASS" : "FAIL") << " (" << passed << "/"
      << results.size() << " suites)\n";
    for (const auto& r : results) {
        if (!r.passed) {
            s << "first failure: " << r.name << ": " << r.first_failure << "\n";
            break;
        }
    }
    return s.str();
}

}  // namespace

SweepSpec SweepSpec::parse(const std::string& text) {
    SweepSpec spec;
    std::istringstream in(text);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) || c.find(':') != std::string::npos) {
        throw UsageError("grid must look like start:stop:steps, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        spec.start = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        spec.stop = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        spec.steps = std::stoi(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
    } catch (const std::logic_error&) {
        throw UsageError("grid must look like start:stop:steps, got '" + text + "'");
    }
    if (!(spec.start < spec.stop)) throw UsageError("grid start must be below stop");
    if (spec.steps < 2) throw UsageError("grid needs at least 2 steps");
    return spec;
}

double SweepSpec::point(int k) const {
    if (k == steps - 1) return stop;
    return start + k * (stop - start) / (steps - 1);
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json discriminate_report(double theta, std::uint64_t seed) {
    const OverlapAngle angle(theta);
    const auto [ket0, ket1] = discrimination::pure_pair(angle);
    const auto result =
        discrimination::helstrom(hilbert::DensityMatrix::pure(ket0), hilbert::DensityMatrix::pure(ket1));
    return {{"command", "discriminate"},
            {"theta", theta},
            {"seed", seed},
            {"p_e", result.error_prob},
            {"p_e_closed_form", discrimination::pure_pair_error(theta)},
            {"min_eigenvalue", result.min_eigenvalue},
            {"povm", {{"pi0", op_json(result.povm.pi0())}, {"pi1", op_json(result.povm.pi1())}}}};
}

json clone_report(double theta, double phi, std::uint64_t seed) {
    require_phi(phi);
    const OverlapAngle angle(theta);
    const auto params = cloner::optimal_params(angle, phi);
    const auto sigma0 = cloner::clone_state(params, 0);
    const auto sigma1 = cloner::clone_state(params, 1);
    const auto m0 = cloner::marginals(sigma0);
    const auto m1 = cloner::marginals(sigma1);
    const auto residuals = cloner::constraint_residuals(params, angle);
    const auto disc = discrimination::helstrom(m0.traced_blank, m1.traced_blank);
    return {{"command", "clone"},
            {"theta", theta},
            {"phi", phi},
            {"seed", seed},
            {"params", params_json(params)},
            {"sigma0", ket_json(sigma0)},
            {"sigma1", ket_json(sigma1)},
            {"marginals",
             {{"rho0", {{"traced_blank", op_json(m0.traced_blank.op())}, {"traced_system", op_json(m0.traced_system.op())}}},
              {"rho1", {{"traced_blank", op_json(m1.traced_blank.op())}, {"traced_system", op_json(m1.traced_system.op())}}}}},
            {"residuals", residuals},
            {"lambda", cloner::lambda_objective(params)},
            {"p_e", disc.error_prob},
            {"entanglement", cloner::clone_entanglement(angle, phi)}};
}

json optimize_report(double theta, int n_starts, std::uint64_t seed, int threads) {
    require_starts(n_starts);
    const OverlapAngle angle(theta);
    optimizer::OptimizerConfig config;
    config.n_starts = n_starts;
    config.seed = seed;
    config.threads = threads;
    const auto report = optimizer::maximize_lambda(angle, config);
    const double reference = std::sin(theta) * std::sin(theta);
    json starts = json::array();
    for (const auto& s : report.starts) {
        starts.push_back({{"index", s.index},
                          {"lambda", s.lambda},
                          {"residual_max", s.residual_max},
                          {"gradient_norm", s.gradient_norm},
                          {"iterations", s.iterations},
                          {"converged", s.converged}});
    }
    return {{"command", "optimize"},
            {"theta", theta},
            {"seed", seed},
            {"n_starts", n_starts},
            {"best_params", params_json(report.best_params)},
            {"lambda_max", report.lambda_max},
            {"reference", reference},
            {"gap", std::abs(report.lambda_max - reference)},
            {"starts_converged", report.starts_converged},
            {"residual_max", report.residual_max},
            {"best_start", report.best_start},
            {"distinct_optima", optimizer::distinct_optima(report).size()},
            {"starts", starts}};
}

json rates_report(double theta, double epsilon, double phi, std::uint64_t seed) {
    require_epsilon(epsilon);
    require_phi(phi);
    const OverlapAngle angle(theta);
    const double pe = discrimination::pure_pair_error(theta);
    const auto closed = info::rate_region_closed_form(pe, epsilon);
    const auto p1 = info::induced_channel(angle, phi, discrimination::clone_povm_closed_form(phi));
    const auto oracle = info::rates_from_joint(info::cascade_joint(epsilon, p1, info::BinaryChannel::identity()));
    return {{"command", "rates"},
            {"theta", theta},
            {"phi", phi},
            {"epsilon", epsilon},
            {"seed", seed},
            {"p_e", pe},
            {"r1", closed.r1},
            {"r2", closed.r2},
            {"oracle_r1", oracle.r1},
            {"oracle_r2", oracle.r2},
            {"oracle_max_deviation", std::max(std::abs(closed.r1 - oracle.r1), std::abs(closed.r2 - oracle.r2))}};
}

RunRecord evaluate_point(double theta, double phi, double epsilon, int n_starts, std::uint64_t seed) {
    require_phi(phi);
    require_epsilon(epsilon);
    const OverlapAngle angle(theta);
    RunRecord r;
    r.theta = theta;
    r.phi = phi;
    r.epsilon = epsilon;
    r.seed = seed;
    r.p_e = discrimination::pure_pair_error(theta);
    optimizer::OptimizerConfig config;
    config.n_starts = n_starts;
    config.seed = seed;
    r.lambda_max = optimizer::maximize_lambda(angle, config).lambda_max;
    r.entanglement = cloner::clone_entanglement(angle, phi);
    const auto rates = info::rate_region_closed_form(r.p_e, epsilon);
    r.r1 = rates.r1;
    r.r2 = rates.r2;
    return r;
}

std::vector<RunRecord> sweep(const SweepSpec& grid, double phi, double epsilon, int n_starts, std::uint64_t seed,
                             int threads) {
    require_starts(n_starts);
    require_phi(phi);
    require_epsilon(epsilon);
    for (double end : {grid.start, grid.stop}) OverlapAngle{end};
    std::vector<RunRecord> records(static_cast<std::size_t>(grid.steps));
    parallel_for(grid.steps, threads, [&](int k) {
        records[static_cast<std::size_t>(k)] = evaluate_point(grid.point(k), phi, epsilon, n_starts, seed);
    });
    return records;
}

std::string sweep_csv(const std::vector<RunRecord>& records) {
    std::string s = std::string(kSweepCsvHeader) + "\n";
    for (const auto& r : records) {
        for (double v : {r.theta, r.phi, r.epsilon, r.p_e, r.lambda_max, r.entanglement, r.r1, r.r2}) {
            s += format_number(v);
            s += ',';
        }
        s += std::to_string(r.seed);
        s += '\n';
    }
    return s;
}

json sweep_json(const std::vector<RunRecord>& records) {
    json rows = json::array();
    for (const auto& r : records) {
        rows.push_back({{"theta", r.theta}, {"phi", r.phi}, {"epsilon", r.epsilon}, {"p_e", r.p_e},
                        {"lambda_max", r.lambda_max}, {"entanglement", r.entanglement}, {"r1", r.r1},
                        {"r2", r.r2}, {"seed", r.seed}});
    }
    return {{"command", "sweep"}, {"records", rows}};
}

std::string scalar_csv(const json& report) {
    std::string header;
    std::string row;
    for (const auto& [key, value] : report.items()) {
        std::string cell;
        if (value.is_number_float()) {
            cell = format_number(value.get<double>());
        } else if (value.is_number_integer() || value.is_boolean()) {
            cell = value.dump();
        } else if (value.is_string()) {
            cell = value.get<std::string>();
        } else {
            continue;
        }
        header += (header.empty() ? "" : ",") + key;
        row += (row.empty() ? "" : ",") + cell;
    }
    return header + "\n" + row + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qbc: optimal cloning of two nonorthogonal qubit states for classical broadcast"};
    app.name(args.empty() ? "qbc" : args.front());
    app.require_subcommand(1);

    double theta = 0.0;
    std::optional<double> theta_deg;
    double phi = 0.0;
    double epsilon = 0.0;
    int n_starts = 32;
    std::uint64_t seed = 42;
    int threads = 1;
    std::string format = "json";
    std::string verify_format = "table";
    std::string out_path;
    std::string grid_text;
    double tolerance_scale = 1.0;

    auto add_theta = [&](CLI::App* cmd) {
        auto* rad = cmd->add_option("--theta", theta, "Overlap angle in radians, <1|0> = cos(theta), in [0, pi/2]");
        auto* deg = cmd->add_option("--theta-deg", theta_deg, "Overlap angle in degrees");
        rad->excludes(deg);
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Seed, echoed in the output")->capture_default_str();
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        cmd->add_option("--out", out_path, "Write output to PATH instead of standard output");
    };

    auto* discriminate = app.add_subcommand("discriminate", "Helstrom error for the input pair");
    add_theta(discriminate);
    add_common(discriminate);

    auto* clone = app.add_subcommand("clone", "Optimal cloner, clone states, marginals and entanglement");
    add_theta(clone);
    clone->add_option("--phi", phi, "Free parameter of the optimal family, in [0, 2pi)");
    add_common(clone);

    auto* optimize = app.add_subcommand("optimize", "Numerically maximize Lambda under the isometry constraints");
    add_theta(optimize);
    optimize->add_option("--n-starts", n_starts, "Number of random starts")->capture_default_str();
    optimize->add_option("--threads", threads, "Worker threads")->capture_default_str();
    add_common(optimize);

    auto* rates = app.add_subcommand("rates", "Broadcast rate bounds, closed form and joint-distribution oracle");
    add_theta(rates);
    rates->add_option("--epsilon", epsilon, "Trade-off channel crossover, in [0, 0.5]");
    rates->add_option("--phi", phi, "Free parameter of the cloner used by the oracle");
    add_common(rates);

    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a theta grid");
    sweep_cmd->add_option("--theta-grid", grid_text, "start:stop:steps (radians, inclusive)")->required();
    sweep_cmd->add_option("--phi", phi, "Free parameter of the cloner");
    sweep_cmd->add_option("--epsilon", epsilon, "Trade-off channel crossover");
    sweep_cmd->add_option("--n-starts", n_starts, "Optimizer starts per grid point")->capture_default_str();
    sweep_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    add_common(sweep_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
    verify_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    verify_cmd->add_option("--tolerance-scale", tolerance_scale, "Scale all tolerances (negative control)")
        ->group("Testing");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (theta_deg) theta = *theta_deg / 180.0 * kPi;
        auto point_output = [&](const json& report) {
            emit(format == "csv" ? scalar_csv(report) : dump(report), out_path, out);
        };
        if (discriminate->parsed()) {
            point_output(discriminate_report(theta, seed));
        } else if (clone->parsed()) {
            point_output(clone_report(theta, phi, seed));
        } else if (optimize->parsed()) {
            point_output(optimize_report(theta, n_starts, seed, threads));
        } else if (rates->parsed()) {
            point_output(rates_report(theta, epsilon, phi, seed));
        } else if (sweep_cmd->parsed()) {
            const auto records = sweep(SweepSpec::parse(grid_text), phi, epsilon, n_starts, seed, threads);
            emit(format == "csv" ? sweep_csv(records) : dump(sweep_json(records)), out_path, out);
        } else if (verify_cmd->parsed()) {
            const auto results = verify::run_all({seed, tolerance_scale});
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
            if (verify_format == "json") {
                json rows = json::array();
                for (const auto& r : results) {
                    rows.push_back({{"suite", r.name}, {"count", r.count}, {"max_deviation", r.max_deviation},
                                    {"tolerance", r.tolerance}, {"passed", r.passed}, {"first_failure", r.first_failure}});
                }
                out << dump({{"command", "verify"}, {"seed", seed}, {"passed", ok}, {"suites", rows}});
            } else {
                out << verify_table(results, seed);
            }
            if (!ok) {
                err << "verification failed\n";
                return kFailure;
            }
        }
    } catch (const optimizer::OptimizationFailure& e) {
        const auto& report = e.report();
        json starts = json::array();
        for (const auto& s : report.starts) {
            starts.push_back({{"index", s.index}, {"lambda", s.lambda}, {"residual_max", s.residual_max},
                              {"gradient_norm", s.gradient_norm}, {"iterations", s.iterations}});
        }
        out << dump({{"error", e.what()}, {"theta", theta}, {"seed", seed}, {"starts", starts}});
        err << "optimization failed: " << e.what() << "\n";
        return kFailure;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kOk;
}

}  // namespace qbc::cli
