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

#include <vector>

#include "bgcs/fock.hpp"
#include "bgcs/special_fns.hpp"
#include "bgcs/types.hpp"

namespace bgcs {

enum class Realization { one_mode, two_mode, abstract };

/// Which two-mode embedding of |n+k,k> is meant. second_excess is |n, n+|l|>
/// (charge l <= 0), first_excess is |n+|l|, n> (charge l > 0).
enum class Branch { second_excess, first_excess };

struct BgLabel {
    cplx z = 0.0;
    double k = 0.5;
    Realization realization = Realization::abstract;
    Branch branch = Branch::second_excess;
};

void validate(const BgLabel &label);

/// sum_n r^{2n} / (n! Gamma(2k+n)), the squared norm of ||z;k>.
double bg_norm2_unnormalized(double r, double k, const SeriesControl &ctl = {});

/// N_BG from the 0F1 form, cross-checked against r^{k-1/2} / sqrt(I_{2k-1}(2r)).
double bg_normalization(double r, double k, const SeriesControl &ctl = {});

CVec bg_coefficients(const BgLabel &label, int n_terms);
TruncatedState bg_state(const BgLabel &label, const SpaceConfig &space);

cplx bg_overlap(cplx z1, cplx z2, double k, const SeriesControl &ctl = {});

/// Weight of d^2z resolving the unity with the unnormalized states ||z;k>.
double bg_measure_density(double r, double k);

enum class Su11Op { k_plus, k_minus, k_3 };

/// Action on analytic functions given by Taylor coefficients in z.
CVec bg_diffop_apply(Su11Op op, const CVec &poly, double k);

/// Generators in the boson realizations, applied to oracle states.
TruncatedState su11_apply(const TruncatedState &s, Su11Op op, Realization realization);

/// sum_n z^n / sqrt(n! Gamma(2k+n)) psi_n over the chosen embedding.
cplx bg_analytic(const TruncatedState &s, cplx z, double k, Realization realization,
                 Branch branch = Branch::second_excess);

/// sum over multi-indices of prod alpha_i^{n_i} / sqrt(n_i!) psi_n.
cplx ccs_analytic(const TruncatedState &s, const CVec &alpha);

struct BgComponent {
    double k;
    cplx first_excess;
    cplx second_excess;
};

/// F_CCS(a1, a2) = F_{1/2} + sum_{k >= 1} (a1^{2k-1} F_k^{first} + a2^{2k-1} F_k^{second}), z = a1 a2.
cplx ccs_from_bg_two_mode(const std::vector<BgComponent> &components, cplx a1, cplx a2);

/// F_CCS(a) = pi^{1/4} [F_{1/4}(a^2/2) + a/sqrt(2) F_{3/4}(a^2/2)].
cplx ccs_from_bg_one_mode(cplx f_quarter, cplx f_three_quarter, cplx alpha);

/// |a1, a2> rebuilt from BG components with Bargman index up to k_max.
TruncatedState reconstruct_two_mode_cs(cplx a1, cplx a2, double k_max, const SpaceConfig &space);

int charge_of(const TruncatedState &s, std::size_t flat, int p);
TruncatedState project_charge_sector(const TruncatedState &s, int l, int p, int q);

}  // namespace bgcs
