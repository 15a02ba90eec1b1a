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

#include "bgcs/unity.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bgcs/error.hpp"

using namespace bgcs;

namespace {

UnityOptions small(int n_check, bool parallel = true) {
    UnityOptions o;
    o.n_check = n_check;
    o.parallel = parallel;
    return o;
}

}  // namespace

TEST(unity, canonical_one_mode) {
    UnityReport r = resolve_unity(FamilySpec{}, MeasureDensity::gaussian, small(10));
    ASSERT_LT(r.defect, 1e-10);
    ASSERT_EQ(r.dim, 11);
    ASSERT_GT(r.nodes, 0u);
}

TEST(unity, phi_family_resolves_identity) {
    for (double phi : {0.4, 1.9, 5.0}) {
        FamilySpec spec;
        spec.family = UnityFamily::phi;
        spec.phi = phi;
        ASSERT_LT(resolve_unity(spec, MeasureDensity::gaussian, small(8)).defect, 1e-10) << phi;
    }
}

TEST(unity, one_angle_and_two_angle_families) {
    FamilySpec spec;
    spec.family = UnityFamily::n_angle;
    spec.angles = {0.7};
    ASSERT_LT(resolve_unity(spec, MeasureDensity::gaussian, small(8)).defect, 1e-10);
    // With two angles the phases no longer cancel in the angular average:
    // the defect equals |sin 2 phi_2|.
    spec.angles = {0.3, 1.1};
    UnityReport r = resolve_unity(spec, MeasureDensity::gaussian, small(8));
    ASSERT_NEAR(r.defect, std::abs(std::sin(2.2)), 1e-8);
    spec.angles = {0.3, kPi / 2};
    ASSERT_LT(resolve_unity(spec, MeasureDensity::gaussian, small(8)).defect, 1e-10);
}

TEST(unity, bg_kernel_measure) {
    for (double k : {0.25, 0.5, 1.5}) {
        FamilySpec spec;
        spec.family = UnityFamily::bg_su11;
        spec.k = k;
        ASSERT_LT(resolve_unity(spec, MeasureDensity::bg_kernel, small(6)).defect, 1e-8) << k;
    }
}

TEST(unity, upq_z_measures) {
    for (int l : {0, -1, 2}) {
        FamilySpec spec;
        spec.family = UnityFamily::upq_z;
        spec.label = UpqLabel{1, 1, l};
        spec.k = 0.5 * (1 + std::abs(l));
        ASSERT_LT(resolve_unity(spec, MeasureDensity::upq_F, small(5)).defect, 1e-8) << l;
        ASSERT_LT(resolve_unity(spec, MeasureDensity::upq_F_prime, small(5)).defect, 1e-8) << l;
    }
}

TEST(unity, upq_alpha_sector) {
    FamilySpec spec;
    spec.family = UnityFamily::upq_alpha;
    spec.label = UpqLabel{1, 1, -1};
    spec.radial_count = 81;
    ASSERT_LT(resolve_unity(spec, MeasureDensity::gaussian, small(3)).defect, 1e-8);
}

TEST(unity, serial_and_parallel_agree) {
    FamilySpec spec;
    spec.family = UnityFamily::n_angle;
    spec.angles = {0.4, 2.0};
    spec.modes = 2;
    spec.radial_count = 61;
    Eigen::MatrixXcd par = assemble_gram(spec, MeasureDensity::gaussian, small(2, true));
    Eigen::MatrixXcd ser = assemble_gram(spec, MeasureDensity::gaussian, small(2, false));
    ASSERT_EQ(par.rows(), 9);
    ASSERT_LT((par - ser).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(unity, gram_is_hermitian) {
    FamilySpec spec;
    spec.family = UnityFamily::phi;
    spec.phi = 0.9;
    Eigen::MatrixXcd g = assemble_gram(spec, MeasureDensity::gaussian, small(6));
    ASSERT_LT((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(unity, errors) {
    FamilySpec spec;
    auto code_of = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.code();
        }
        return Errc::invalid_argument;
    };
    spec.r_max = 0.5;
    ASSERT_EQ(code_of([&] { resolve_unity(spec, MeasureDensity::gaussian, small(6)); }), Errc::domain_too_small);
    spec.r_max = 0.0;
    ASSERT_THROW(resolve_unity(spec, MeasureDensity::bg_kernel, small(4)), Error);
    spec.family = UnityFamily::upq_z;
    spec.label = UpqLabel{2, 1, 0};
    ASSERT_THROW(resolve_unity(spec, MeasureDensity::upq_F, small(4)), Error);
    ASSERT_THROW(theorem_a2_check(2, {0.1}, 1, 1, small(4)), Error);
}

TEST(unity, theorem_a2_seeded_angles) {
    UnityReport a = theorem_a2_check(1, {}, 42, 1, small(6));
    UnityReport b = theorem_a2_check(1, {}, 42, 1, small(6));
    ASSERT_EQ(a.angles, b.angles);
    ASSERT_EQ(a.seed, 42u);
    ASSERT_LT(a.defect, 1e-10);
}
