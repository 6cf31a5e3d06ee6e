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

#include <gtest/gtest.h>

#include <random>

#include "qecgate/errors.h"
#include "support/test_util.h"

using namespace qecgate;
using namespace qecgate::testing;

TEST(linalg, tensor_identities) {
    EXPECT_EQ(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    EXPECT_EQ(tensor(ComplexVector::basis(2, 0), ComplexVector::basis(2, 1)), ComplexVector::basis(4, 1));
    EXPECT_EQ(tensor(ComplexVector::basis(2, 1), ComplexVector::basis(2, 0)), ComplexVector::basis(4, 2));
}

TEST(linalg, tensor_x_identity_swaps_blocks) {
    ComplexMatrix x{{0, 1}, {1, 0}};
    ComplexMatrix expected{
        {0, 0, 1, 0},
        {0, 0, 0, 1},
        {1, 0, 0, 0},
        {0, 1, 0, 0},
    };
    EXPECT_EQ(tensor(x, ComplexMatrix::identity(2)), expected);
}

TEST(linalg, tensor_is_associative) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; k++) {
        ComplexMatrix a = random_matrix2(rng);
        ComplexMatrix b = random_matrix2(rng);
        ComplexMatrix c = random_matrix2(rng);
        EXPECT_LT(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-14);

        ComplexVector u = random_state(rng, 2);
        ComplexVector v = random_state(rng, 3);
        ComplexVector w = random_state(rng, 2);
        EXPECT_LT(max_abs_diff(tensor(tensor(u, v), w), tensor(u, tensor(v, w))), 1e-15);
    }
    // Integer entries multiply exactly, so the index relabeling is all that differs.
    ComplexMatrix a{{1, Complex(0, 2)}, {3, -1}};
    ComplexMatrix b{{2, 0, 1}, {Complex(1, 1), 4, 0}};
    ComplexMatrix c{{-1}, {5}};
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

TEST(linalg, apply) {
    std::mt19937_64 rng(5);
    ComplexVector v = random_state(rng, 4);
    EXPECT_EQ(apply(ComplexMatrix::identity(4), v), v);

    std::array<Complex, 4> d{2, 0, 0, 0};
    EXPECT_EQ(apply(ComplexMatrix::diagonal(d), ComplexVector::basis(4, 0)), ComplexVector::basis(4, 0).scaled(2));

    EXPECT_THROW(apply(ComplexMatrix::identity(3), v), DomainError);

    for (int k = 0; k < 100; k++) {
        ComplexMatrix u = tensor(random_unitary2(rng), random_unitary2(rng));
        ComplexVector w = random_state(rng, 4).scaled(3.5);
        EXPECT_NEAR(apply(u, w).norm(), w.norm(), 1e-12);
    }
}

TEST(linalg, norm_scales) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; k++) {
        ComplexVector v = random_state(rng, 4).scaled(random_complex(rng));
        Complex c = random_complex(rng);
        EXPECT_GE(v.norm(), 0);
        EXPECT_NEAR(v.scaled(c).norm(), std::abs(c) * v.norm(), 1e-12);
    }
    EXPECT_THROW(ComplexVector(3).normalized(), DomainError);
}

TEST(linalg, adjoint_involution_and_unitarity) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; k++) {
        ComplexMatrix m = random_matrix2(rng);
        EXPECT_EQ(m.adjoint().adjoint(), m);
        ComplexMatrix u = random_unitary2(rng);
        EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)), 1e-12);
        EXPECT_TRUE(is_unitary(u));
    }
    EXPECT_FALSE(is_unitary(ComplexMatrix{{1, 1}, {0, 1}}));
    EXPECT_FALSE(is_unitary(ComplexMatrix(2, 3)));
}

TEST(svd2x2, diagonal_cases) {
    Svd2x2 a = svd2x2(ComplexMatrix{{3, 0}, {0, 1}});
    EXPECT_EQ(a.singular[0], 3);
    EXPECT_EQ(a.singular[1], 1);
    EXPECT_LT(max_abs_diff(a.u, ComplexMatrix::identity(2)), 1e-15);
    EXPECT_LT(max_abs_diff(a.v, ComplexMatrix::identity(2)), 1e-15);

    Svd2x2 b = svd2x2(ComplexMatrix{{1, 0}, {0, 3}});
    EXPECT_EQ(b.singular[0], 3);
    EXPECT_EQ(b.singular[1], 1);
    ComplexMatrix swap{{0, 1}, {1, 0}};
    EXPECT_LT(max_abs_diff(b.u, swap), 1e-15);
    EXPECT_LT(max_abs_diff(b.v, swap), 1e-15);
}

TEST(svd2x2, zero_matrix) {
    Svd2x2 z = svd2x2(ComplexMatrix(2, 2));
    EXPECT_EQ(z.singular[0], 0);
    EXPECT_EQ(z.singular[1], 0);
    EXPECT_EQ(z.u, ComplexMatrix::identity(2));
    EXPECT_EQ(z.v, ComplexMatrix::identity(2));
}

TEST(svd2x2, rejects_non_2x2) {
    EXPECT_THROW(svd2x2(ComplexMatrix::identity(3)), DomainError);
}

TEST(svd2x2, random_reconstruction_and_phase_convention) {
    std::mt19937_64 rng(2026);
    for (int k = 0; k < 1000; k++) {
        ComplexMatrix m = random_matrix2(rng);
        Svd2x2 svd = svd2x2(m);
        ASSERT_LT(max_abs_diff(svd.reconstruct(), m), 1e-10);
        ASSERT_GE(svd.singular[0], svd.singular[1]);
        ASSERT_GE(svd.singular[1], 0);
        ASSERT_TRUE(is_unitary(svd.u));
        ASSERT_TRUE(is_unitary(svd.v));
        for (std::size_t c = 0; c < 2; c++) {
            Complex lead = std::abs(svd.u(0, c)) > 0 ? svd.u(0, c) : svd.u(1, c);
            ASSERT_EQ(lead.imag(), 0);
            ASSERT_GE(lead.real(), 0);
        }
    }
}

TEST(svd2x2, rank_deficient_and_near_degenerate) {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 200; k++) {
        ComplexVector a = random_state(rng, 2);
        ComplexVector b = random_state(rng, 2);
        // Rank one, plus a tiny second component.
        ComplexMatrix m(2, 2);
        ComplexMatrix tiny = random_matrix2(rng);
        for (std::size_t r = 0; r < 2; r++) {
            for (std::size_t c = 0; c < 2; c++) {
                m(r, c) = a[r] * std::conj(b[c]) + (k % 2 ? 1e-9 : 0.0) * tiny(r, c);
            }
        }
        Svd2x2 svd = svd2x2(m);
        ASSERT_LT(max_abs_diff(svd.reconstruct(), m), 1e-12);
        ASSERT_NEAR(svd.singular[0], 1, 1e-8);

        // Multiple of a unitary: both singular values equal.
        ComplexMatrix u = random_unitary2(rng);
        Svd2x2 deg = svd2x2(u);
        ASSERT_NEAR(deg.singular[0], 1, 1e-12);
        ASSERT_NEAR(deg.singular[1], 1, 1e-12);
        ASSERT_LT(max_abs_diff(deg.reconstruct(), u), 1e-12);
    }
}

TEST(svd2x2, singular_values_invariant_under_unitaries) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; k++) {
        ComplexMatrix m = random_matrix2(rng);
        auto s = svd2x2(m).singular;
        auto t = svd2x2(random_unitary2(rng) * m * random_unitary2(rng)).singular;
        ASSERT_NEAR(s[0], t[0], 1e-10);
        ASSERT_NEAR(s[1], t[1], 1e-10);
    }
}
