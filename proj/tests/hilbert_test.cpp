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

#include "qbc/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qbc/cloner.hpp"
#include "qbc/errors.hpp"
#include "support/oracles.hpp"

using namespace qbc;
using namespace qbc::hilbert;

namespace {

namespace oracle = qbc::testing;

constexpr double kPi = std::numbers::pi;
const Ket k0{1.0, 0.0};
const Ket k1{0.0, 1.0};

void expect_op_near(const HermitianOp& a, const HermitianOp& b, double tol) {
    ASSERT_EQ(a.dim(), b.dim());
    EXPECT_LE(max_abs_difference(a, b), tol);
}

}  // namespace

TEST(hilbert, ket_rejects_bad_dimension_and_nan) {
    EXPECT_THROW((Ket{1.0, 0.0, 0.0}), UsageError);
    EXPECT_THROW((Ket{std::nan(""), 0.0}), ValidationError);
    EXPECT_THROW((Ket{INFINITY, 0.0}), ValidationError);
    EXPECT_THROW(Ket::basis(2, 2), UsageError);
}

TEST(hilbert, inner_product_examples) {
    const Ket psi = Ket{Complex(0.6, 0.0), Complex(0.0, 0.8)};
    const auto self = inner_product(psi, psi);
    EXPECT_NEAR(self.real(), 1.0, 1e-15);
    EXPECT_NEAR(self.imag(), 0.0, 1e-15);
    EXPECT_EQ(inner_product(k0, k1), Complex(0.0, 0.0));
    const Ket tilted{std::cos(kPi / 3), std::sin(kPi / 3)};
    EXPECT_NEAR(inner_product(k0, tilted).real(), 0.5, 1e-15);
    EXPECT_THROW(inner_product(k0, Ket::basis(4, 0)), UsageError);
}

TEST(hilbert, inner_product_is_conjugate_symmetric) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto a = oracle::random_ket(rng, 4);
        const auto b = oracle::random_ket(rng, 4);
        const auto ab = inner_product(a, b);
        const auto ba = inner_product(b, a);
        EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-15);
    }
}

TEST(hilbert, tensor_examples) {
    const auto a = tensor(k0, k0);
    EXPECT_EQ(a[0], Complex(1.0));
    EXPECT_EQ(a[1] + a[2] + a[3], Complex(0.0));
    const auto b = tensor(k1, k0);
    EXPECT_EQ(b[2], Complex(1.0));
    EXPECT_EQ(b[0] + b[1] + b[3], Complex(0.0));
    const double r = 1.0 / std::sqrt(2.0);
    const auto c = tensor(Ket{r, r}, k1);
    EXPECT_NEAR(c[0].real(), 0.0, 1e-16);
    EXPECT_NEAR(c[1].real(), r, 1e-16);
    EXPECT_NEAR(c[2].real(), 0.0, 1e-16);
    EXPECT_NEAR(c[3].real(), r, 1e-16);
    EXPECT_THROW(tensor(Ket::basis(4, 0), k0), UsageError);
}

TEST(hilbert, partial_trace_examples) {
    const auto kept_first = partial_trace(tensor(k0, k1), Subsystem::Second);
    expect_op_near(kept_first.op(), HermitianOp::projector(k0), 1e-15);
    const auto kept_second = partial_trace(tensor(k0, k1), Subsystem::First);
    expect_op_near(kept_second.op(), HermitianOp::projector(k1), 1e-15);

    const double r = 1.0 / std::sqrt(2.0);
    const Ket bell{r, 0.0, 0.0, r};
    for (auto s : {Subsystem::First, Subsystem::Second}) {
        expect_op_near(partial_trace(bell, s).op(), HermitianOp::identity(2).scaled(0.5), 1e-15);
    }
}

TEST(hilbert, partial_trace_of_optimal_clone_matches_hand_written_marginal) {
    const double theta = kPi / 3;
    const double phi = kPi / 5;
    const auto p = cloner::optimal_params(OverlapAngle(theta), phi);
    const auto rho = partial_trace(cloner::clone_state(p, 0), Subsystem::Second);
    const auto expected = oracle::marginal_entries(theta, phi, 0);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            EXPECT_NEAR(rho(r, c).real(), expected[static_cast<std::size_t>(2 * r + c)], 1e-12);
            EXPECT_NEAR(rho(r, c).imag(), 0.0, 1e-15);
        }
    }
}

TEST(hilbert, partial_trace_preserves_trace_of_hermitian_ops) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto h = oracle::random_hermitian(rng, 4);
        for (auto s : {Subsystem::First, Subsystem::Second}) {
            EXPECT_NEAR(partial_trace(h, s).trace(), h.trace(), 1e-12);
        }
    }
}

TEST(hilbert, product_state_marginals_are_pure) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto a = oracle::random_ket(rng, 2);
        const auto b = oracle::random_ket(rng, 2);
        const auto ab = tensor(a, b);
        const auto ra = partial_trace(ab, Subsystem::Second);
        const auto rb = partial_trace(ab, Subsystem::First);
        expect_op_near(ra.op(), HermitianOp::projector(a), 1e-14);
        expect_op_near(rb.op(), HermitianOp::projector(b), 1e-14);
        EXPECT_NEAR(von_neumann_entropy(ra), 0.0, 1e-12);
        EXPECT_NEAR(von_neumann_entropy(rb), 0.0, 1e-12);
        const auto eig = hermitian_eig(ra.op());
        EXPECT_NEAR(eig.eigenvalues[0], 0.0, 1e-14);
        EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-14);
    }
}

TEST(hilbert, hermitian_op_validation) {
    const std::array<Complex, 4> skew{1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0};
    EXPECT_THROW(HermitianOp(2, skew), ValidationError);
    const std::array<Complex, 4> almost{1.0, Complex(0.5, 1e-11), Complex(0.5, 0.0), 1.0};
    const HermitianOp h(2, almost);
    EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
    const std::array<Complex, 3> wrong_size{1.0, 0.0, 1.0};
    EXPECT_THROW(HermitianOp(2, wrong_size), UsageError);
}

TEST(hilbert, density_matrix_validation) {
    EXPECT_THROW(DensityMatrix(HermitianOp::identity(2)), ValidationError);
    const std::array<double, 2> negative{1.5, -0.5};
    EXPECT_THROW(DensityMatrix(HermitianOp::diagonal(negative)), ValidationError);
    EXPECT_THROW(DensityMatrix::pure(Ket{1.0, 1.0}), ValidationError);
}

TEST(hilbert, eig_examples) {
    const auto id = hermitian_eig(HermitianOp::identity(2));
    EXPECT_EQ(id.eigenvalues, (std::vector<double>{1.0, 1.0}));

    const double s = std::sin(0.4);
    const std::array<Complex, 4> flip{0.0, s, s, 0.0};
    const auto e = hermitian_eig(HermitianOp(2, flip));
    EXPECT_NEAR(e.eigenvalues[0], -s, 1e-15);
    EXPECT_NEAR(e.eigenvalues[1], s, 1e-15);

    const auto pair = cloner::marginal_closed_form(OverlapAngle(0.7), 1.1);
    const auto diff = pair.rho0.op() - pair.rho1.op();
    const auto [lo, hi] = oracle::eig2(diff);
    const auto d = hermitian_eig(diff);
    EXPECT_NEAR(d.eigenvalues[0], lo, 1e-14);
    EXPECT_NEAR(d.eigenvalues[1], hi, 1e-14);
    EXPECT_NEAR(d.eigenvalues[0], -std::sin(0.7), 1e-14);
    EXPECT_NEAR(d.eigenvalues[1], std::sin(0.7), 1e-14);
}

TEST(hilbert, eig_reconstructs_random_hermitian_matrices) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const int dim = i % 2 == 0 ? 2 : 4;
        const auto m = oracle::random_hermitian(rng, dim);
        const auto eig = hermitian_eig(m);
        ASSERT_EQ(eig.eigenvalues.size(), static_cast<std::size_t>(dim));
        EXPECT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
        auto rebuilt = HermitianOp::zero(dim);
        for (int k = 0; k < dim; ++k) {
            rebuilt = rebuilt + HermitianOp::projector(eig.eigenvectors[static_cast<std::size_t>(k)])
                                    .scaled(eig.eigenvalues[static_cast<std::size_t>(k)]);
        }
        EXPECT_LT(max_abs_difference(rebuilt, m), 1e-10) << "case " << i;
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                const auto ip = inner_product(eig.eigenvectors[static_cast<std::size_t>(j)],
                                              eig.eigenvectors[static_cast<std::size_t>(k)]);
                EXPECT_LT(std::abs(ip - Complex(j == k ? 1.0 : 0.0)), 1e-10);
            }
        }
        if (dim == 2) {
            const auto [lo, hi] = oracle::eig2(m);
            EXPECT_NEAR(eig.eigenvalues[0], lo, 1e-12);
            EXPECT_NEAR(eig.eigenvalues[1], hi, 1e-12);
        }
    }
}

TEST(hilbert, eigenvector_phase_convention) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        const auto eig = hermitian_eig(oracle::random_hermitian(rng, 4));
        for (const auto& v : eig.eigenvectors) {
            int best = 0;
            for (int k = 1; k < 4; ++k) {
                if (std::abs(v[k]) > std::abs(v[best])) best = k;
            }
            EXPECT_GT(v[best].real(), 0.0);
            EXPECT_NEAR(v[best].imag(), 0.0, 1e-15);
        }
    }
}

TEST(hilbert, eig_is_deterministic_and_sign_symmetric) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto m = oracle::random_hermitian(rng, i % 2 == 0 ? 2 : 4);
        const auto a = hermitian_eig(m);
        const auto b = hermitian_eig(m);
        EXPECT_EQ(a.eigenvalues, b.eigenvalues);
        const auto neg = hermitian_eig(-m);
        for (std::size_t k = 0; k < a.eigenvalues.size(); ++k) {
            EXPECT_EQ(neg.eigenvalues[k], -a.eigenvalues[a.eigenvalues.size() - 1 - k]);
        }
    }
}

TEST(hilbert, entropy_examples) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::pure(Ket{0.6, 0.8})), 0.0, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), std::numbers::ln2, 1e-15);
    const std::array<double, 2> diag{0.25, 0.75};
    // 0.5623351446188083 from a 40-digit evaluation of -sum(l ln l).
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(HermitianOp::diagonal(diag))), 0.5623351446188083, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(4)), 2 * std::numbers::ln2, 1e-15);
}

TEST(hilbert, entropy_is_additive_on_products) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
        const auto a = oracle::random_density(rng, 2);
        const auto b = oracle::random_density(rng, 2);
        const DensityMatrix ab(kron(a.op(), b.op()));
        EXPECT_NEAR(von_neumann_entropy(ab), von_neumann_entropy(a) + von_neumann_entropy(b), 1e-9);
        const double s = von_neumann_entropy(a);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, std::numbers::ln2 + 1e-15);
        const auto [lo, hi] = oracle::eig2(a.op());
        const double expected = -(lo > 0 ? lo * std::log(lo) : 0.0) - hi * std::log(hi);
        EXPECT_NEAR(s, expected, 1e-12);
    }
}
