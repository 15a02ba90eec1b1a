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

#include "bgcs/su11.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bgcs/error.hpp"
#include "bgcs/special_fns.hpp"

using namespace bgcs;

TEST(su11, label_validation) {
    ASSERT_NO_THROW(validate(BgLabel{0.3, 0.25, Realization::one_mode}));
    ASSERT_THROW(validate(BgLabel{0.3, 0.5, Realization::one_mode}), Error);
    ASSERT_THROW(validate(BgLabel{0.3, 0.75, Realization::two_mode}), Error);
    ASSERT_THROW(validate(BgLabel{0.3, 0.5, Realization::two_mode, Branch::first_excess}), Error);
    ASSERT_THROW(validate(BgLabel{0.3, -1.0, Realization::abstract}), Error);
}

TEST(su11, normalization_forms_agree) {
    for (double k : {0.25, 0.5, 0.75, 1.0, 2.5}) {
        for (double r : {0.0, 0.1, 1.0, 3.0}) {
            double n = bg_normalization(r, k);
            ASSERT_NEAR(n * n * bg_norm2_unnormalized(r, k), 1.0, 1e-13);
        }
    }
    // k = 1/2: N^2 = 1 / I_0(2r).
    ASSERT_NEAR(std::pow(bg_normalization(1.3, 0.5), -2), std::cyl_bessel_i(0.0, 2.6), 1e-11);
}

TEST(su11, coefficients_are_normalized) {
    BgLabel label{cplx(0.8, 0.5), 1.5, Realization::abstract};
    CVec c = bg_coefficients(label, 60);
    double s = 0.0;
    for (const auto &v : c) s += std::norm(v);
    ASSERT_NEAR(s, 1.0, 1e-13);
}

TEST(su11, one_mode_states_are_pair_lowering_eigenstates) {
    for (double k : {0.25, 0.75}) {
        cplx z(0.6, -0.3);
        SpaceConfig sp(1, 60);
        TruncatedState s = bg_state(BgLabel{z, k, Realization::one_mode}, sp);
        ASSERT_NEAR(s.norm2(), 1.0, 1e-12);
        // K_- = a^2 / 2.
        TruncatedState km = su11_apply(s, Su11Op::k_minus, Realization::one_mode);
        ASSERT_LT((km - z * s).norm(), 1e-12);
    }
}

TEST(su11, two_mode_branches) {
    cplx z(0.5, 0.4);
    SpaceConfig sp(2, 40);
    for (Branch b : {Branch::second_excess, Branch::first_excess}) {
        TruncatedState s = bg_state(BgLabel{z, 1.5, Realization::two_mode, b}, sp);
        TruncatedState km = su11_apply(s, Su11Op::k_minus, Realization::two_mode);
        ASSERT_LT((km - z * s).norm(), 1e-12);
        // Charge l = +-2 only.
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (std::abs(s[i]) > 0.0) ASSERT_EQ(charge_of(s, i, 1), b == Branch::first_excess ? 2 : -2);
        }
    }
    ASSERT_THROW(bg_state(BgLabel{z, 1.0, Realization::two_mode}, SpaceConfig(1, 10)), Error);
}

TEST(su11, casimir_in_two_mode_realization) {
    // C = K_3^2 - (K_+K_- + K_-K_+)/2 = k(k-1) on every ladder state.
    SpaceConfig sp(2, 12);
    for (double k : {0.5, 1.0, 2.0}) {
        BgLabel label{cplx(0.2, 0.1), k, Realization::two_mode};
        TruncatedState s = bg_state(label, sp);
        auto apply = [&](const TruncatedState &v, Su11Op op) { return su11_apply(v, op, Realization::two_mode); };
        TruncatedState k3k3 = apply(apply(s, Su11Op::k_3), Su11Op::k_3);
        TruncatedState pm = apply(apply(s, Su11Op::k_minus), Su11Op::k_plus);
        TruncatedState mp = apply(apply(s, Su11Op::k_plus), Su11Op::k_minus);
        TruncatedState c = k3k3 - 0.5 * (pm + mp);
        // Ignore the cutoff layer where K_+ loses amplitude.
        ASSERT_NEAR(inner(s, c).real(), k * (k - 1.0), 1e-10);
    }
}

TEST(su11, overlap) {
    double k = 1.0;
    cplx z1(0.3, 0.2), z2(-0.4, 0.7);
    BgLabel l1{z1, k, Realization::abstract}, l2{z2, k, Realization::abstract};
    CVec c1 = bg_coefficients(l1, 80), c2 = bg_coefficients(l2, 80);
    cplx direct = 0.0;
    for (int n = 0; n < 80; ++n) direct += std::conj(c1[n]) * c2[n];
    ASSERT_LT(std::abs(bg_overlap(z1, z2, k) - direct), 1e-13);
    ASSERT_NEAR(std::abs(bg_overlap(z1, z1, k)), 1.0, 1e-14);
}

TEST(su11, measure_density_moments) {
    // 4 int r^{2k+2n} K_{2k-1}(2r) dr = n! Gamma(2k+n).
    for (double k : {0.5, 1.25}) {
        for (int n : {0, 2, 5}) {
            auto nodes = tanh_sinh_nodes(0.0, 80.0, 801);
            double s = 0.0;
            for (const auto &nd : nodes) s += nd.w * 2.0 * kPi * nd.x * bg_measure_density(nd.x, k) * std::pow(nd.x, 2 * n);
            ASSERT_NEAR(s / (std::tgamma(n + 1.0) * std::tgamma(2.0 * k + n)), 1.0, 1e-10);
        }
    }
    ASSERT_THROW(bg_measure_density(0.0, 0.5), Error);
}

TEST(su11, analytic_representation_of_generators) {
    // <z-bar| K_- |psi> acts as 2k d/dz + z d^2/dz^2; two-mode states |n, n> carry k = 1/2.
    double k = 0.5;
    SpaceConfig sp(2, 20);
    TruncatedState psi = fock_state({2, 2}, sp) + cplx(0.3, 0.1) * fock_state({4, 4}, sp);
    CVec poly(8, 0.0);
    poly[2] = std::exp(-0.5 * (std::lgamma(3.0) + std::lgamma(2.0 * k + 2.0)));
    poly[4] = cplx(0.3, 0.1) * std::exp(-0.5 * (std::lgamma(5.0) + std::lgamma(2.0 * k + 4.0)));
    TruncatedState km = su11_apply(psi, Su11Op::k_minus, Realization::two_mode);
    CVec dpoly = bg_diffop_apply(Su11Op::k_minus, poly, k);
    cplx z(0.4, -0.2);
    cplx expect = 0.0, zn = 1.0;
    for (const auto &c : dpoly) {
        expect += c * zn;
        zn *= z;
    }
    ASSERT_LT(std::abs(bg_analytic(km, z, k, Realization::two_mode) - expect), 1e-13);
}

TEST(su11, two_mode_reconstruction) {
    cplx a1(0.6, 0.0), a2(0.3, 0.0);
    SpaceConfig sp(2, 30);
    TruncatedState cs = coherent_state({a1, a2}, sp);
    TruncatedState rec = reconstruct_two_mode_cs(a1, a2, 6.0, sp);
    ASSERT_GT(std::norm(inner(cs, rec)) / rec.norm2(), 1.0 - 1e-8);
    // Too few components lose fidelity.
    TruncatedState poor = reconstruct_two_mode_cs(a1, a2, 1.0, sp);
    ASSERT_LT(std::norm(inner(cs, poor)), 0.99);
}

TEST(su11, ccs_from_bg_matches_ccs_analytic) {
    SpaceConfig sp(2, 10);
    TruncatedState psi = fock_state({3, 1}, sp) + cplx(0.0, 0.4) * fock_state({1, 2}, sp);
    psi += 0.2 * fock_state({0, 0}, sp);
    cplx a1(0.5, 0.2), a2(-0.3, 0.4);
    std::vector<BgComponent> comps;
    comps.push_back({0.5, 0.0, bg_analytic(psi, a1 * a2, 0.5, Realization::two_mode)});
    for (int l = 1; l <= 6; ++l) {
        double k = 0.5 * (1.0 + l);
        comps.push_back({k, bg_analytic(psi, a1 * a2, k, Realization::two_mode, Branch::first_excess),
                         bg_analytic(psi, a1 * a2, k, Realization::two_mode, Branch::second_excess)});
    }
    ASSERT_LT(std::abs(ccs_from_bg_two_mode(comps, a1, a2) - ccs_analytic(psi, {a1, a2})), 1e-13);
}

TEST(su11, ccs_from_bg_one_mode) {
    SpaceConfig sp(1, 12);
    TruncatedState psi = fock_state({2}, sp) + cplx(0.5, 0.0) * fock_state({3}, sp);
    cplx a(0.7, -0.2);
    cplx z = a * a / 2.0;
    cplx fq = bg_analytic(psi, z, 0.25, Realization::one_mode);
    cplx ftq = bg_analytic(psi, z, 0.75, Realization::one_mode);
    ASSERT_LT(std::abs(ccs_from_bg_one_mode(fq, ftq, a) - ccs_analytic(psi, {a})), 1e-13);
}

TEST(su11, charge_projection) {
    SpaceConfig sp = adaptive_space(2, 0.5);
    TruncatedState cs = coherent_state({0.4, 0.3}, sp);
    double total = 0.0;
    for (int l = -sp.n_max(); l <= sp.n_max(); ++l) total += project_charge_sector(cs, l, 1, 1).norm2();
    ASSERT_NEAR(total, cs.norm2(), 1e-14);
    ASSERT_THROW(project_charge_sector(cs, 0, 1, 2), Error);
}
