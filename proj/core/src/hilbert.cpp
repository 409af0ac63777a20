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
#include <numeric>
#include <string>

#include "qbc/errors.hpp"
#include "qbc/tolerances.hpp"

namespace qbc::hilbert {
namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw UsageError("dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

using Dense = std::array<Complex, kMaxDim * kMaxDim>;

double off_diagonal_norm(const Dense& a, int n) {
    double s = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r != c) s += std::norm(a[static_cast<std::size_t>(r * n + c)]);
        }
    }
    return std::sqrt(s);
}

// Scales v so that its largest-magnitude component is real and positive.
Ket fix_phase(std::span<const Complex> v) {
    int best = 0;
    double best_mag = -1.0;
    for (int k = 0; k < static_cast<int>(v.size()); ++k) {
        const double mag = std::abs(v[static_cast<std::size_t>(k)]);
        if (mag > best_mag + 1e-12) {
            best = k;
            best_mag = mag;
        }
    }
    std::array<Complex, kMaxDim> out{};
    const Complex pivot = v[static_cast<std::size_t>(best)];
    const Complex unphase = std::conj(pivot) / std::abs(pivot);
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * unphase;
    out[static_cast<std::size_t>(best)] = Complex(std::abs(pivot), 0.0);
    return Ket(std::span<const Complex>(out.data(), v.size()));
}

}  // namespace

Ket::Ket(std::initializer_list<Complex> amplitudes)
    : Ket(std::span<const Complex>(amplitudes.begin(), amplitudes.size())) {}

Ket::Ket(std::span<const Complex> amplitudes) : dim_(static_cast<int>(amplitudes.size())) {
    require_dim(dim_);
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        if (!is_finite(amplitudes[k])) throw ValidationError("ket amplitude is not finite");
        amp_[k] = amplitudes[k];
    }
}

Ket Ket::basis(int dim, int index) {
    require_dim(dim);
    if (index < 0 || index >= dim) throw UsageError("basis index out of range");
    std::array<Complex, kMaxDim> a{};
    a[static_cast<std::size_t>(index)] = 1.0;
    return Ket(std::span<const Complex>(a.data(), static_cast<std::size_t>(dim)));
}

double Ket::norm_squared() const {
    double s = 0.0;
    for (const auto& z : amplitudes()) s += std::norm(z);
    return s;
}

bool Ket::is_normalized(double tolerance) const { return std::abs(norm_squared() - 1.0) <= tolerance; }

Ket Ket::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) throw ValidationError("cannot normalize the zero ket");
    std::array<Complex, kMaxDim> a{};
    for (int k = 0; k < dim_; ++k) a[static_cast<std::size_t>(k)] = (*this)[k] / n;
    return Ket(std::span<const Complex>(a.data(), static_cast<std::size_t>(dim_)));
}

HermitianOp::HermitianOp(int dim, std::span<const Complex> row_major) : dim_(dim) {
    require_dim(dim);
    if (row_major.size() != static_cast<std::size_t>(dim * dim)) {
        throw UsageError("operator entry count does not match dimension");
    }
    for (const auto& z : row_major) {
        if (!is_finite(z)) throw ValidationError("operator entry is not finite");
    }
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            const Complex upper = row_major[static_cast<std::size_t>(r * dim + c)];
            const Complex lower = row_major[static_cast<std::size_t>(c * dim + r)];
            if (std::abs(upper - std::conj(lower)) > tol::kValidation) {
                throw ValidationError("operator is not Hermitian");
            }
            const Complex h = 0.5 * (upper + std::conj(lower));
            if (r == c) {
                e_[static_cast<std::size_t>(r * dim + c)] = Complex(h.real(), 0.0);
            } else {
                e_[static_cast<std::size_t>(r * dim + c)] = h;
                e_[static_cast<std::size_t>(c * dim + r)] = std::conj(h);
            }
        }
    }
}

HermitianOp HermitianOp::zero(int dim) {
    require_dim(dim);
    HermitianOp op;
    op.dim_ = dim;
    return op;
}

HermitianOp HermitianOp::identity(int dim) {
    HermitianOp op = zero(dim);
    for (int k = 0; k < dim; ++k) op.e_[static_cast<std::size_t>(k * dim + k)] = 1.0;
    return op;
}

HermitianOp HermitianOp::projector(const Ket& ket) {
    HermitianOp op = zero(ket.dim());
    const int n = ket.dim();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            op.e_[static_cast<std::size_t>(r * n + c)] = ket[r] * std::conj(ket[c]);
        }
        op.e_[static_cast<std::size_t>(r * n + r)] = std::norm(ket[r]);
    }
    return op;
}

HermitianOp HermitianOp::diagonal(std::span<const double> values) {
    HermitianOp op = zero(static_cast<int>(values.size()));
    const int n = op.dim_;
    for (int k = 0; k < n; ++k) {
        if (!std::isfinite(values[static_cast<std::size_t>(k)])) {
            throw ValidationError("operator entry is not finite");
        }
        op.e_[static_cast<std::size_t>(k * n + k)] = values[static_cast<std::size_t>(k)];
    }
    return op;
}

double HermitianOp::trace() const {
    double t = 0.0;
    for (int k = 0; k < dim_; ++k) t += (*this)(k, k).real();
    return t;
}

HermitianOp HermitianOp::operator+(const HermitianOp& other) const {
    if (other.dim_ != dim_) throw UsageError("operator dimension mismatch");
    HermitianOp out = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] += other.e_[k];
    return out;
}

HermitianOp HermitianOp::operator-(const HermitianOp& other) const {
    if (other.dim_ != dim_) throw UsageError("operator dimension mismatch");
    HermitianOp out = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] -= other.e_[k];
    return out;
}

HermitianOp HermitianOp::operator-() const {
    HermitianOp out = *this;
    for (auto& z : out.e_) z = -z;
    return out;
}

HermitianOp HermitianOp::scaled(double factor) const {
    if (!std::isfinite(factor)) throw ValidationError("scale factor is not finite");
    HermitianOp out = *this;
    for (auto& z : out.e_) z *= factor;
    return out;
}

DensityMatrix::DensityMatrix(HermitianOp op) : op_(std::move(op)) {
    if (std::abs(op_.trace() - 1.0) > tol::kEquality) {
        throw ValidationError("density matrix trace is not 1");
    }
    const auto eig = hermitian_eig(op_);
    if (eig.eigenvalues.front() < -tol::kNegativeEigenvalue) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const Ket& ket) {
    if (!ket.is_normalized(tol::kValidation)) throw ValidationError("ket is not normalized");
    return DensityMatrix(HermitianOp::projector(ket.normalized()));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(HermitianOp::identity(dim).scaled(1.0 / dim));
}

Complex inner_product(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw UsageError("inner product of kets with different dimensions");
    Complex s = 0.0;
    for (int k = 0; k < a.dim(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

Ket tensor(const Ket& a, const Ket& b) {
    if (a.dim() != 2 || b.dim() != 2) throw UsageError("tensor product is defined for qubit factors");
    return Ket{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

HermitianOp kron(const HermitianOp& a, const HermitianOp& b) {
    if (a.dim() != 2 || b.dim() != 2) throw UsageError("kron is defined for qubit factors");
    std::array<Complex, 16> e{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    e[static_cast<std::size_t>((2 * i + k) * 4 + (2 * j + l))] = a(i, j) * b(k, l);
                }
            }
        }
    }
    return HermitianOp(4, e);
}

HermitianOp partial_trace(const HermitianOp& op, Subsystem traced) {
    if (op.dim() != 4) throw UsageError("partial trace needs a two-qubit operator");
    std::array<Complex, 4> e{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += traced == Subsystem::Second ? op(2 * i + k, 2 * j + k) : op(2 * k + i, 2 * k + j);
            }
            e[static_cast<std::size_t>(i * 2 + j)] = s;
        }
    }
    return HermitianOp(2, e);
}

DensityMatrix partial_trace(const DensityMatrix& state, Subsystem traced) {
    return DensityMatrix(partial_trace(state.op(), traced));
}

DensityMatrix partial_trace(const Ket& state, Subsystem traced) {
    if (state.dim() != 4) throw UsageError("partial trace needs a two-qubit state");
    const double n2 = state.norm_squared();
    if (std::abs(n2 - 1.0) > tol::kValidation) throw ValidationError("state is not normalized");
    std::array<Complex, 4> e{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += traced == Subsystem::Second ? state[2 * i + k] * std::conj(state[2 * j + k])
                                                 : state[2 * k + i] * std::conj(state[2 * k + j]);
            }
            e[static_cast<std::size_t>(i * 2 + j)] = s / n2;
        }
    }
    return DensityMatrix(HermitianOp(2, e));
}

EigDecomposition hermitian_eig(const HermitianOp& m) {
    const int n = m.dim();
    Dense a{};
    Dense v{};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r * n + c)] = m(r, c);
        v[static_cast<std::size_t>(r * n + r)] = 1.0;
    }
    auto at = [n](Dense& d, int r, int c) -> Complex& { return d[static_cast<std::size_t>(r * n + c)]; };

    double scale = 0.0;
    for (const auto& z : m.entries()) scale += std::norm(z);
    const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, std::sqrt(scale));

    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = at(a, p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // J = diag(1, conj(phase)) * real rotation; A <- J^H A J, V <- V J.
                const Complex phase = apq / r;
                const double tau = (at(a, q, q).real() - at(a, p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sq = s * std::conj(phase);
                const Complex cq = c * std::conj(phase);
                for (int k = 0; k < n; ++k) {
                    const Complex akp = at(a, k, p);
                    const Complex akq = at(a, k, q);
                    at(a, k, p) = c * akp - sq * akq;
                    at(a, k, q) = s * akp + cq * akq;
                    const Complex vkp = at(v, k, p);
                    const Complex vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - sq * vkq;
                    at(v, k, q) = s * vkp + cq * vkq;
                }
                const Complex sp = s * phase;
                const Complex cp = c * phase;
                for (int k = 0; k < n; ++k) {
                    const Complex apk = at(a, p, k);
                    const Complex aqk = at(a, q, k);
                    at(a, p, k) = c * apk - sp * aqk;
                    at(a, q, k) = s * apk + cp * aqk;
                }
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                at(a, p, p) = at(a, p, p).real();
                at(a, q, q) = at(a, q, q).real();
            }
        }
    }
    if (off_diagonal_norm(a, n) > threshold) {
        throw ConvergenceError("Jacobi eigensolver did not converge");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return at(a, x, x).real() < at(a, y, y).real(); });

    EigDecomposition out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.eigenvectors.reserve(static_cast<std::size_t>(n));
    for (int k : order) {
        out.eigenvalues.push_back(at(a, k, k).real());
        std::array<Complex, kMaxDim> col{};
        for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = at(v, r, k);
        out.eigenvectors.push_back(fix_phase(std::span<const Complex>(col.data(), static_cast<std::size_t>(n))));
    }
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto eig = hermitian_eig(rho.op());
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -tol::kNegativeEigenvalue) throw ValidationError("negative eigenvalue in entropy");
        if (lambda > 0.0) s -= lambda * std::log(lambda);
    }
    return s;
}

double trace_product(const HermitianOp& a, const HermitianOp& b) {
    if (a.dim() != b.dim()) throw UsageError("operator dimension mismatch");
    const int n = a.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) s += (a(i, k) * b(k, i)).real();
    }
    return s;
}

double expectation(const Ket& v, const HermitianOp& m) {
    if (v.dim() != m.dim()) throw UsageError("operator dimension mismatch");
    const int n = v.dim();
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) s += std::conj(v[i]) * m(i, k) * v[k];
    }
    return s.real();
}

double max_abs_difference(const HermitianOp& a, const HermitianOp& b) {
    if (a.dim() != b.dim()) throw UsageError("operator dimension mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return d;
}

}  // namespace qbc::hilbert
