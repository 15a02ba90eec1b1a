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

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "bgcs/types.hpp"
#include "bgcs/upq.hpp"

namespace bgcs {

enum class UnityFamily { canonical, phi, n_angle, bg_su11, upq_alpha, upq_z };

/// Which weight multiplies d^2(parameters).
enum class MeasureDensity {
    gaussian,     // pi^{-N} d^2 alpha over the normalized-envelope states
    bg_kernel,    // (2/pi) r^{2k-1} K_{2k-1}(2r) for unnormalized BG states
    upq_F,        // F(|z|) by numerical radial integration
    upq_F_prime,  // closed-form F'
};

struct FamilySpec {
    UnityFamily family = UnityFamily::canonical;
    int modes = 1;
    double phi = 0.0;
    std::vector<double> angles;
    double k = 0.5;
    UpqLabel label;

    double r_max = 0.0;    // 0 picks a radius from n_check
    int radial_count = 400;
    int angular_count = 0;  // 0 picks 2 n_check + 2
};

struct UnityOptions {
    int n_check = 12;
    double tol = 1e-6;  // domain check fails when a radial moment is below 1 - 10 tol
    bool parallel = true;
};

struct UnityReport {
    double defect = 0.0;  // max |G - 1| over the checked sub-basis
    double diag_min = 0.0;
    double diag_max = 0.0;
    double offdiag_max = 0.0;
    int dim = 0;
    std::size_t nodes = 0;
    double r_max = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> angles;
};

/// Gram operator sum_nodes w |psi><psi| restricted to the checked sub-basis (a charge sector for u(p,q)).
Eigen::MatrixXcd assemble_gram(const FamilySpec &spec, MeasureDensity measure, const UnityOptions &opt,
                               UnityReport *report = nullptr);

UnityReport resolve_unity(const FamilySpec &spec, MeasureDensity measure, const UnityOptions &opt = {});

/// resolve_unity for the n-angle family. Draws n angles from seed when `angles` is empty.
UnityReport theorem_a2_check(int n, std::vector<double> angles, std::uint64_t seed, int modes,
                             const UnityOptions &opt = {});

}  // namespace bgcs
