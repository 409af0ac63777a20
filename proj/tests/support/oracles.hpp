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

// Test-only reference computations. These deliberately avoid the library's
// eigensolver, partial trace and information functionals.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <utility>

#include "qbc/cloner.hpp"
#include "qbc/hilbert.hpp"
#include "qbc/infochannel.hpp"

namespace qbc::testing {

using hilbert::Complex;

/// Eigenvalues of [[a, b], [conj b, d]] from the characteristic quadratic.
inline std::pair<double, double> eig2(double a, double d, Complex b) {
    const double mean = 0.5 * (a + d);
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    return {mean - radius, mean + radius};
}

inline std::pair<double, double> eig2(const hilbert::HermitianOp& m) {
    return eig2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
}

/// Closed-form marginal entries of the optimal clones, written out by hand.
inline std::array<double, 4> marginal_entries(double theta, double phi, int input) {
    const double sign = input == 0 ? 1.0 : -1.0;
    const double t = std::sin(theta) * std::cos(phi);
    const double u = std::sin(theta) * std::sin(phi);
    return {0.5 * (1 + sign * t), 0.5 * sign * u, 0.5 * sign * u, 0.5 * (1 - sign * t)};
}

inline long double entropy_ld(long double x) {
    long double h = 0;
    if (x > 0) h -= x * std::log(x);
    if (x < 1) h -= (1 - x) * std::log(1 - x);
    return h;
}

/// Shannon entropy of a probability table in nats.
template <typename Range>
double shannon(const Range& probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

/// Cascade S -> X -> Y -> Z built by explicit enumeration, keyed by
/// (s, x, y, z).
inline std::map<std::array<int, 4>, double> cascade_table(double eps, double pe) {
    std::map<std::array<int, 4>, double> t;
    for (int s = 0; s < 2; ++s)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    const double px = x == s ? 1 - eps : eps;
                    const double py = y == x ? 1 - pe : pe;
                    const double pz = z == y ? 1.0 : 0.0;
                    t[{s, x, y, z}] = 0.5 * px * py * pz;
                }
    return t;
}

/// Entropy of the marginal of `table` on the listed coordinates.
inline double marginal_entropy(const std::map<std::array<int, 4>, double>& table, std::initializer_list<int> coords) {
    std::map<std::array<int, 4>, double> m;
    for (const auto& [key, p] : table) {
        std::array<int, 4> k{-1, -1, -1, -1};
        for (int c : coords) k[static_cast<std::size_t>(c)] = key[static_cast<std::size_t>(c)];
        m[k] += p;
    }
    double h = 0.0;
    for (const auto& [key, p] : m) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

/// Rate bounds via entropies: I(X:Y|S) = H(XS) + H(YS) - H(XYS) - H(S),
/// I(S:Z) = H(S) + H(Z) - H(SZ).
inline info::RatePoint entropy_route_rates(double pe, double eps) {
    const auto t = cascade_table(eps, pe);
    constexpr int S = 0, X = 1, Y = 2, Z = 3;
    const double r1 = marginal_entropy(t, {X, S}) + marginal_entropy(t, {Y, S}) - marginal_entropy(t, {X, Y, S}) -
                      marginal_entropy(t, {S});
    const double r2 = marginal_entropy(t, {S}) + marginal_entropy(t, {Z}) - marginal_entropy(t, {S, Z});
    return {r1, r2};
}

inline hilbert::HermitianOp random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> e(static_cast<std::size_t>(dim * dim));
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            const Complex z = r == c ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
            e[static_cast<std::size_t>(r * dim + c)] = z;
            e[static_cast<std::size_t>(c * dim + r)] = std::conj(z);
        }
    }
    return hilbert::HermitianOp(dim, e);
}

inline hilbert::Ket random_ket(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> a(static_cast<std::size_t>(dim));
    for (auto& z : a) z = Complex(g(rng), g(rng));
    return hilbert::Ket(a).normalized();
}

inline hilbert::DensityMatrix random_density(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto op = hilbert::HermitianOp::zero(dim);
    for (int k = 0; k < dim; ++k) op = op + hilbert::HermitianOp::projector(random_ket(rng, dim)).scaled(u(rng));
    return hilbert::DensityMatrix(op.scaled(1.0 / op.trace()));
}

}  // namespace qbc::testing
