// Copyright 2026 The bgcs Authors
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

#include "bgcs/fock.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bgcs/error.hpp"

using namespace bgcs;

TEST(fock, space_layout) {
    SpaceConfig sp(3, 4);
    ASSERT_EQ(sp.dim(), 125u);
    ASSERT_EQ(sp.stride(0), 25u);
    ASSERT_EQ(sp.stride(2), 1u);
    TruncatedState s(sp);
    std::size_t k = s.index({1, 2, 3});
    ASSERT_EQ(k, 25u + 10u + 3u);
    ASSERT_EQ(s.occupations(k), (std::vector<int>{1, 2, 3}));
    ASSERT_EQ(s.total_occupation(k), 6);
    ASSERT_THROW(SpaceConfig(0, 3), Error);
    ASSERT_THROW(SpaceConfig(30, 30), Error);
    ASSERT_THROW(s.index({5, 0, 0}), Error);
}

TEST(fock, adaptive_cutoff) {
    ASSERT_EQ(adaptive_cutoff(0.0), 15);
    ASSERT_EQ(adaptive_cutoff(1.0), 24);
    ASSERT_EQ(adaptive_cutoff(3.0), 48);
    ASSERT_EQ(adaptive_space(2, 1.0).n_max(), 24);
}

TEST(fock, coherent_state_is_normalized_poisson) {
    CVec a{cplx(0.7, -0.4)};
    TruncatedState s = coherent_state(a, adaptive_space(1, std::abs(a[0])));
    ASSERT_NEAR(s.norm2(), 1.0, 1e-14);
    double m = std::norm(a[0]);
    for (int n = 0; n < 6; ++n) {
        double pn = std::norm(s[n]);
        ASSERT_NEAR(pn, std::exp(-m) * std::pow(m, n) / std::tgamma(n + 1.0), 1e-15);
    }
    try {
        coherent_state({cplx(2.0, 0.0)}, SpaceConfig(1, 10));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), Errc::cutoff);
    }
    ASSERT_THROW(coherent_state({1.0, 1.0}, SpaceConfig(1, 30)), Error);
}

TEST(fock, ladder_operators) {
    SpaceConfig sp(2, 6);
    TruncatedState s = fock_state({2, 3}, sp);
    TruncatedState a0 = annihilate(s, 0);
    ASSERT_NEAR(std::abs(a0[a0.index({1, 3})]), std::sqrt(2.0), 1e-15);
    TruncatedState c1 = create(s, 1);
    ASSERT_NEAR(std::abs(c1[c1.index({2, 4})]), 2.0, 1e-15);
    TruncatedState n1 = apply_number(s, 1);
    ASSERT_NEAR(std::abs(inner(s, n1)), 3.0, 1e-15);
    TruncatedState pair = apply_pair_lowering(s, 0, 1);
    ASSERT_NEAR(std::abs(pair[pair.index({1, 2})]), std::sqrt(6.0), 1e-14);
    ASSERT_THROW(annihilate(s, 2), Error);
}

TEST(fock, creation_at_cutoff_records_loss) {
    SpaceConfig sp(1, 3);
    TruncatedState s = fock_state({3}, sp);
    TruncatedState c = create(s, 0);
    ASSERT_EQ(c.norm2(), 0.0);
    ASSERT_NEAR(c.truncation_loss(), 4.0, 1e-14);
}

TEST(fock, canonical_commutator_below_cutoff) {
    SpaceConfig sp(1, 20);
    TruncatedState s = fock_state({4}, sp);
    s += cplx(0.0, 0.5) * fock_state({7}, sp);
    s = s.normalized();
    TruncatedState comm = annihilate(create(s, 0), 0) - create(annihilate(s, 0), 0);
    ASSERT_LT((comm - s).norm(), 1e-14);
}

TEST(fock, expectation_words_apply_right_to_left) {
    CVec a{cplx(0.3, 0.2)};
    TruncatedState s = coherent_state(a, adaptive_space(1, std::abs(a[0])));
    ASSERT_LT(std::abs(expectation(s, {lower(0)}) - a[0]), 1e-14);
    ASSERT_NEAR(expectation(s, {bgcs::raise(0), lower(0)}).real(), std::norm(a[0]), 1e-14);
    // a a^+ = a^+ a + 1.
    ASSERT_NEAR(expectation(s, {lower(0), bgcs::raise(0)}).real(), std::norm(a[0]) + 1.0, 1e-13);
    ASSERT_THROW(expectation(s, {lower(0), lower(0), lower(0), lower(0), lower(0)}), Error);
}

TEST(fock, inner_requires_same_space) {
    TruncatedState a = fock_state({1}, SpaceConfig(1, 4));
    TruncatedState b = fock_state({1}, SpaceConfig(1, 5));
    try {
        inner(a, b);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), Errc::space_mismatch);
    }
    ASSERT_THROW(a += b, Error);
}

TEST(fock, normalize_zero_is_degenerate) {
    TruncatedState z(SpaceConfig(1, 3));
    try {
        z.normalized();
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), Errc::degenerate);
    }
}

TEST(fock, parity_projection_and_eigen_residual) {
    CVec a{cplx(0.9, 0.0)};
    TruncatedState cs = coherent_state(a, adaptive_space(1, 0.9));
    TruncatedState even = project_parity(cs, true);
    TruncatedState odd = project_parity(cs, false);
    ASSERT_NEAR(even.norm2() + odd.norm2(), 1.0, 1e-14);
    ASSERT_NEAR(even.norm2(), std::exp(-0.81) * std::cosh(0.81), 1e-14);
    ASSERT_LT(eigen_residual(cs, {lower(0)}, a[0]), 1e-12);
    ASSERT_LT(eigen_residual(even, {lower(0), lower(0)}, a[0] * a[0]), 1e-12);
    ASSERT_GT(eigen_residual(even, {lower(0)}, a[0]), 0.1);
}
