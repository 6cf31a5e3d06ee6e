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

#include "qecgate/states.h"

#include <gtest/gtest.h>

#include <random>

#include "qecgate/errors.h"
#include "support/test_util.h"

using namespace qecgate;
using namespace qecgate::testing;

TEST(schmidt_decompose, product_and_bell) {
    EXPECT_NEAR(schmidt_decompose(ComplexVector{1, 0, 0, 0}).theta, 0, 1e-15);
    EXPECT_NEAR(schmidt_decompose(ComplexVector{0, 1, 0, 0}).theta, 0, 1e-15);
    double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(schmidt_decompose(ComplexVector{r, 0, 0, r}).theta, kPi / 4, 1e-12);
    EXPECT_NEAR(schmidt_decompose(ComplexVector{0, r, Complex(0, -r), 0}).theta, kPi / 4, 1e-12);
}

TEST(schmidt_decompose, already_canonical_keeps_identity_frames) {
    SchmidtState s = schmidt_decompose(schmidt_form(0.3));
    EXPECT_NEAR(s.theta, 0.3, 1e-14);
    EXPECT_LT(max_abs_diff(s.frame_a, ComplexMatrix::identity(2)), 1e-14);
    EXPECT_LT(max_abs_diff(s.frame_b, ComplexMatrix::identity(2)), 1e-14);
}

TEST(schmidt_decompose, rejects_bad_input) {
    EXPECT_THROW(schmidt_decompose(ComplexVector{1, 0, 0}), DomainError);
    EXPECT_THROW(schmidt_decompose(ComplexVector{1, 1, 0, 0}), DomainError);
    EXPECT_THROW(schmidt_decompose(ComplexVector{1 + 1e-6, 0, 0, 0}), DomainError);
    // Within the 1e-9 input tolerance: accepted and renormalized.
    SchmidtState s = schmidt_decompose(ComplexVector{1 + 1e-10, 0, 0, 0});
    EXPECT_NEAR(reconstruct(s).norm(), 1, 1e-12);
}

TEST(reconstruct, identity_frames) {
    SchmidtState bell{kPi / 4};
    double r = 1 / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(reconstruct(bell), ComplexVector{r, 0, 0, r}), 1e-15);
    // cos(0)|11> + sin(0)|00> is the product state |11>.
    EXPECT_LT(max_abs_diff(reconstruct(SchmidtState{0}), ComplexVector{0, 0, 0, 1}), 1e-15);
}

TEST(schmidt_decompose, random_round_trip) {
    std::mt19937_64 rng(123);
    for (int k = 0; k < 1000; k++) {
        ComplexVector psi = random_state(rng, 4);
        SchmidtState s = schmidt_decompose(psi);
        ASSERT_GE(s.theta, 0);
        ASSERT_LE(s.theta, kPi / 4 + 1e-15);
        ASSERT_TRUE(is_unitary(s.frame_a));
        ASSERT_TRUE(is_unitary(s.frame_b));
        ComplexVector back = reconstruct(s);
        ASSERT_NEAR(back.norm(), 1, 1e-12);
        ASSERT_GT(overlap(back, psi), 1 - 1e-10);
        // Frames absorb all phases, so the match is amplitude-exact.
        ASSERT_LT(max_abs_diff(back, psi), 1e-10);
    }
}

TEST(schmidt_decompose, theta_invariant_under_local_unitaries) {
    std::mt19937_64 rng(321);
    for (int k = 0; k < 500; k++) {
        ComplexVector psi = random_state(rng, 4);
        ComplexMatrix local = tensor(random_unitary2(rng), random_unitary2(rng));
        ASSERT_NEAR(schmidt_decompose(apply(local, psi)).theta, schmidt_decompose(psi).theta, 1e-10);
    }
}

TEST(entanglement, known_values) {
    EXPECT_NEAR(entanglement(kPi / 4).entropy, 1, 1e-15);
    EXPECT_EQ(entanglement(0).entropy, 0);
    EXPECT_NEAR(entanglement(kPi / 2).entropy, 0, 1e-15);
    // Direct evaluation of the binary entropy at cos² = 3/4.
    double expected = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
    EXPECT_NEAR(entanglement(kPi / 6).entropy, expected, 1e-14);
    EXPECT_NEAR(expected, 0.81127812445913283, 1e-15);
    EXPECT_LT(entanglement(kPi / 6).entropy, entanglement(kPi / 4).entropy);
}

TEST(entanglement, domain) {
    EXPECT_THROW(entanglement(-1e-3), DomainError);
    EXPECT_THROW(entanglement(kPi / 2 + 1e-3), DomainError);
}

TEST(entanglement, strictly_increasing_below_quarter_pi) {
    double prev = -1;
    for (int k = 1; k <= 100; k++) {
        double e = entanglement(kPi / 4 * k / 101.0).entropy;
        ASSERT_GT(e, prev);
        ASSERT_LE(e, 1);
        prev = e;
    }
}

TEST(entanglement, symmetric_about_quarter_pi) {
    for (int k = 0; k <= 50; k++) {
        double theta = kPi / 2 * k / 50.0;
        ASSERT_NEAR(entanglement(theta).entropy, entanglement(kPi / 2 - theta).entropy, 1e-13);
    }
}

TEST(parse_amplitudes, formats) {
    EXPECT_EQ(parse_complex("0.5+0.25j"), Complex(0.5, 0.25));
    EXPECT_EQ(parse_complex(" -0.5-0.25j "), Complex(-0.5, -0.25));
    EXPECT_EQ(parse_complex("1e-3+2E-2j"), Complex(1e-3, 2e-2));
    EXPECT_EQ(parse_complex("0.7"), Complex(0.7, 0));
    EXPECT_EQ(parse_complex("-2j"), Complex(0, -2));
    EXPECT_EQ(parse_complex("1-j"), Complex(1, -1));
    EXPECT_EQ(parse_complex("+1e+2"), Complex(100, 0));

    ComplexVector v = parse_amplitudes("0.7071067811865476+0j,0,0+0j,0.7071067811865476");
    ASSERT_EQ(v.dim(), 4u);
    EXPECT_EQ(v[0], Complex(0.7071067811865476, 0));
    EXPECT_EQ(v[3], Complex(0.7071067811865476, 0));

    EXPECT_THROW(parse_amplitudes("1,0,0"), DomainError);
    EXPECT_THROW(parse_amplitudes("1,0,0,0,0"), DomainError);
    EXPECT_THROW(parse_complex("abc"), DomainError);
    EXPECT_THROW(parse_complex(""), DomainError);
    EXPECT_THROW(parse_complex("1+2jj"), DomainError);
}
