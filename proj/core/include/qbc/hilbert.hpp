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
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace qbc::hilbert {

using Complex = std::complex<double>;

inline constexpr int kMaxDim = 4;

// Basis convention: index 0 is |0>, index 1 is |0-perp>. On the two-qubit
// space the index is 2 * (first factor) + (second factor); the first factor
// is the system and the second the blank.
enum class Subsystem { First, Second };

/// Pure-state amplitude vector on a 2- or 4-dimensional space.
class Ket {
public:
    Ket(std::initializer_list<Complex> amplitudes);
    explicit Ket(std::span<const Complex> amplitudes);

    static Ket basis(int dim, int index);

    int dim() const { return dim_; }
    const Complex& operator[](int k) const { return amp_[static_cast<std::size_t>(k)]; }
    std::span<const Complex> amplitudes() const { return {amp_.data(), static_cast<std::size_t>(dim_)}; }

    double norm_squared() const;
    bool is_normalized(double tolerance) const;
    Ket normalized() const;

private:
    int dim_ = 0;
    std::array<Complex, kMaxDim> amp_{};
};

/// Hermitian operator on a 2- or 4-dimensional space, stored row-major.
///
/// Construction accepts entries that are Hermitian within the validation
/// tolerance and stores their Hermitian part, so every stored value satisfies
/// entries[j][k] == conj(entries[k][j]) exactly.
class HermitianOp {
public:
    HermitianOp(int dim, std::span<const Complex> row_major);

    static HermitianOp zero(int dim);
    static HermitianOp identity(int dim);
    static HermitianOp projector(const Ket& ket);
    static HermitianOp diagonal(std::span<const double> values);

    int dim() const { return dim_; }
    const Complex& operator()(int row, int col) const {
        return e_[static_cast<std::size_t>(row * dim_ + col)];
    }
    std::span<const Complex> entries() const {
        return {e_.data(), static_cast<std::size_t>(dim_ * dim_)};
    }

    double trace() const;

    HermitianOp operator+(const HermitianOp& other) const;
    HermitianOp operator-(const HermitianOp& other) const;
    HermitianOp operator-() const;
    HermitianOp scaled(double factor) const;

private:
    HermitianOp() = default;

    int dim_ = 0;
    std::array<Complex, kMaxDim * kMaxDim> e_{};
};

/// Unit-trace positive semidefinite Hermitian operator.
class DensityMatrix {
public:
    explicit DensityMatrix(HermitianOp op);

    static DensityMatrix pure(const Ket& ket);
    static DensityMatrix maximally_mixed(int dim);

    const HermitianOp& op() const { return op_; }
    int dim() const { return op_.dim(); }
    const Complex& operator()(int row, int col) const { return op_(row, col); }

private:
    HermitianOp op_;
};

/// Eigenvalues ascending; eigenvectors[k] belongs to eigenvalues[k]. Each
/// eigenvector has its largest-magnitude component real and positive.
struct EigDecomposition {
    std::vector<double> eigenvalues;
    std::vector<Ket> eigenvectors;
};

Complex inner_product(const Ket& a, const Ket& b);

/// a (x) b, with amp[2j + k] = a_j b_k. Both factors must be qubits.
Ket tensor(const Ket& a, const Ket& b);
HermitianOp kron(const HermitianOp& a, const HermitianOp& b);

/// Reduced state after tracing out `traced` from a two-qubit state.
DensityMatrix partial_trace(const Ket& state, Subsystem traced);
DensityMatrix partial_trace(const DensityMatrix& state, Subsystem traced);
HermitianOp partial_trace(const HermitianOp& op, Subsystem traced);

/// Cyclic complex Jacobi diagonalization.
EigDecomposition hermitian_eig(const HermitianOp& m);

/// S = -sum(lambda ln lambda) in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Re tr(a b); exact for Hermitian a, b up to rounding.
double trace_product(const HermitianOp& a, const HermitianOp& b);
/// <v|m|v>, real for Hermitian m.
double expectation(const Ket& v, const HermitianOp& m);

double max_abs_difference(const HermitianOp& a, const HermitianOp& b);

}  // namespace qbc::hilbert
