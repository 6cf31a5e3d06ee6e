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

#include "qecgate/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qecgate/errors.h"

namespace qecgate {

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DomainError("basis index " + std::to_string(k) + " out of range for dimension " + std::to_string(dim));
    }
    ComplexVector v(dim);
    v[k] = 1.0;
    return v;
}

double ComplexVector::norm_squared() const {
    double total = 0;
    for (const auto &c : entries_) {
        total += std::norm(c);
    }
    return total;
}

double ComplexVector::norm() const {
    return std::sqrt(norm_squared());
}

ComplexVector ComplexVector::scaled(Complex c) const {
    ComplexVector out(*this);
    for (auto &e : out.entries_) {
        e *= c;
    }
    return out;
}

ComplexVector ComplexVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw DomainError("cannot normalize the zero vector");
    }
    return scaled(1.0 / n);
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("inner product of vectors with different dimensions");
    }
    Complex total = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double overlap(const ComplexVector &a, const ComplexVector &b) {
    return std::norm(inner(a, b));
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("vector dimensions differ");
    }
    double worst = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DomainError("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
    if (columns.empty()) {
        return {};
    }
    std::size_t rows = columns.front().dim();
    ComplexMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); c++) {
        if (columns[c].dim() != rows) {
            throw DomainError("columns of differing dimension");
        }
        for (std::size_t r = 0; r < rows; r++) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector v(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DomainError("matrix product dimension mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex f = a(r, k);
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += f * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("matrix difference dimension mismatch");
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c) - b(r, c);
        }
    }
    return out;
}

ComplexVector apply(const ComplexMatrix &m, const ComplexVector &v) {
    if (m.cols() != v.dim()) {
        throw DomainError(
            "cannot apply a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix to a vector of dimension " +
            std::to_string(v.dim()));
    }
    ComplexVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex total = 0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            total += m(r, c) * v[c];
        }
        out[r] = total;
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ra++) {
        for (std::size_t ca = 0; ca < a.cols(); ca++) {
            Complex f = a(ra, ca);
            for (std::size_t rb = 0; rb < b.rows(); rb++) {
                for (std::size_t cb = 0; cb < b.cols(); cb++) {
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexVector tensor(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

double max_abs(const ComplexMatrix &m) {
    double worst = 0;
    for (const auto &e : m.entries()) {
        worst = std::max(worst, std::abs(e));
    }
    return worst;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return max_abs(a - b);
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) < tol;
}

ComplexMatrix Svd2x2::reconstruct() const {
    std::array<Complex, 2> diag{singular[0], singular[1]};
    return u * ComplexMatrix::diagonal(diag) * v.adjoint();
}

namespace {

using Pair = std::array<Complex, 2>;

double pair_norm(const Pair &p) {
    return std::hypot(std::abs(p[0]), std::abs(p[1]));
}

// Unit vector orthogonal to a unit vector p.
Pair orthogonal_complement(const Pair &p) {
    return {-std::conj(p[1]), std::conj(p[0])};
}

// Rotates (u, v) by the phase that makes the first nonzero component of u
// real and nonnegative. That component is then stored exactly as |u_k|.
void fix_phase(Pair &u, Pair &v) {
    for (auto &lead : u) {
        double a = std::abs(lead);
        if (a == 0) {
            continue;
        }
        Complex phase = std::conj(lead) / a;
        for (std::size_t k = 0; k < 2; k++) {
            u[k] *= phase;
            v[k] *= phase;
        }
        lead = a;
        return;
    }
}

Pair times(const ComplexMatrix &m, const Pair &p) {
    return {m(0, 0) * p[0] + m(0, 1) * p[1], m(1, 0) * p[0] + m(1, 1) * p[1]};
}

}  // namespace

Svd2x2 svd2x2(const ComplexMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw DomainError("svd2x2 requires a 2x2 matrix");
    }

    // h = m^dagger m = [[a, b], [conj(b), d]], Hermitian positive semidefinite.
    double a = std::norm(m(0, 0)) + std::norm(m(1, 0));
    double d = std::norm(m(0, 1)) + std::norm(m(1, 1));
    Complex b = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
    double half_gap = std::hypot(0.5 * (a - d), std::abs(b));
    double top = 0.5 * (a + d) + half_gap;

    // Eigenvector of the largest eigenvalue, taken from whichever row of
    // (h - top I) keeps the larger diagonal difference.
    Pair v0 = a >= d ? Pair{top - d, std::conj(b)} : Pair{b, top - a};
    double v0_norm = pair_norm(v0);
    if (v0_norm == 0) {
        v0 = {1.0, 0.0};
    } else {
        v0 = {v0[0] / v0_norm, v0[1] / v0_norm};
    }
    Pair v1 = orthogonal_complement(v0);

    // Columns of u come from m v_k; singular values are their lengths. This keeps
    // the small singular value accurate instead of taking sqrt of a tiny eigenvalue.
    Pair mv0 = times(m, v0);
    double s0 = pair_norm(mv0);
    Pair u0 = s0 > 0 ? Pair{mv0[0] / s0, mv0[1] / s0} : Pair{1.0, 0.0};
    Pair u1 = orthogonal_complement(u0);
    Pair mv1 = times(m, v1);
    Complex c1 = std::conj(u1[0]) * mv1[0] + std::conj(u1[1]) * mv1[1];
    double s1 = std::abs(c1);
    if (s1 > 0) {
        Complex phase = c1 / s1;
        u1 = {u1[0] * phase, u1[1] * phase};
    }

    // Simultaneous phase on (u_k, v_k) leaves the product unchanged.
    fix_phase(u0, v0);
    fix_phase(u1, v1);

    Svd2x2 out;
    out.u = ComplexMatrix{{u0[0], u1[0]}, {u0[1], u1[1]}};
    out.v = ComplexMatrix{{v0[0], v1[0]}, {v0[1], v1[1]}};
    out.singular = {s0, std::min(s1, s0)};
    return out;
}

}  // namespace qecgate
