// Copyright 2026 The qecgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QECGATE_LINALG_H
#define QECGATE_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qecgate/tolerance.h"

/// Dense complex linear algebra for the handful of qubits this library needs.
///
/// Index convention (used everywhere in qecgate): tensor products are
/// big-endian. For a ⊗ b the composite index is `index_a * dim_b + index_b`,
/// so the leftmost factor is the most significant. A two-qubit amplitude
/// vector is therefore ordered |00>, |01>, |10>, |11>.
namespace qecgate {

using Complex = std::complex<double>;

class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries_(dim) {
    }
    ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {
    }
    explicit ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    }

    /// Computational basis vector e_k of dimension `dim`.
    static ComplexVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const {
        return entries_.size();
    }
    Complex &operator[](std::size_t k) {
        return entries_[k];
    }
    const Complex &operator[](std::size_t k) const {
        return entries_[k];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    double norm() const;
    double norm_squared() const;
    ComplexVector scaled(Complex c) const;
    /// Returns v / norm(v). Throws DomainError on the zero vector.
    ComplexVector normalized() const;

    bool operator==(const ComplexVector &) const = default;

   private:
    std::vector<Complex> entries_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const ComplexVector &a, const ComplexVector &b);

/// |<a|b>|^2 for unit vectors.
double overlap(const ComplexVector &a, const ComplexVector &b);

/// Largest entrywise |a_k - b_k|. Dimensions must agree.
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);

/// Row-major dense complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    }
    /// Builds from nested rows; all rows must have equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// Matrix whose columns are the given vectors.
    static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    ComplexVector column(std::size_t c) const;
    ComplexMatrix adjoint() const;

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);

/// Matrix-vector product. Throws DomainError when m.cols() != v.dim().
ComplexVector apply(const ComplexMatrix &m, const ComplexVector &v);

/// Kronecker products with the big-endian index convention above.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor(const ComplexVector &a, const ComplexVector &b);

/// Largest entrywise modulus.
double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |m^dagger m - I| < tol. Non-square matrices are never unitary.
bool is_unitary(const ComplexMatrix &m, double tol = kDefaultTolerances.algebra);

/// m = u * diag(singular) * v^dagger with singular[0] >= singular[1] >= 0.
///
/// Each column of u has its first nonzero component real and nonnegative
/// (the matching column of v carries the compensating phase).
struct Svd2x2 {
    ComplexMatrix u;
    std::array<double, 2> singular{};
    ComplexMatrix v;

    ComplexMatrix reconstruct() const;
};

/// Analytic SVD of a 2x2 complex matrix via the eigenvectors of m^dagger m.
/// The zero matrix yields u = v = I and singular values (0, 0).
Svd2x2 svd2x2(const ComplexMatrix &m);

}  // namespace qecgate

#endif
