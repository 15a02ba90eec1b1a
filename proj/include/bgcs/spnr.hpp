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
#include "bgcs/types.hpp"

namespace bgcs {

/// C+|alpha> + C-|-alpha>.
struct SpnrCoeffs {
    cplx c_plus = 1.0;
    cplx c_minus = 0.0;

    /// |C+|^2 + |C-|^2 + 2 Re(C- C+^*) e^{-2|alpha|^2}.
    double norm2(const CVec &alpha) const;

    /// Rescales (c_plus, c_minus) by the common factor that makes norm2 == 1.
    static SpnrCoeffs normalized(cplx c_plus, cplx c_minus, const CVec &alpha);
};

/// Parameters of the cat families. angles drive the 2^n family, phi and psi
/// the two cat angles.
struct CatParams {
    CVec alpha;
    std::vector<double> angles;
    double phi = 0.0;
    double psi = 0.0;

    double r_tilde() const;
};

double amplitude(const CVec &alpha);
CVec scaled(const CVec &alpha, cplx factor);

TruncatedState spnr_bg_state(const CVec &alpha, const SpnrCoeffs &coeffs, const SpaceConfig &space);

/// cos(phi)|alpha> + i sin(phi)|-alpha>.
TruncatedState phi_state(const CVec &alpha, double phi, const SpaceConfig &space);

/// Recursive 2^n superposition: level n adds cos(phi_n)|prev(alpha)> +
/// i sin(phi_n)|prev(alpha e^{i pi / 2^{n-1}})>.
TruncatedState multi_angle_state(const CVec &alpha, const std::vector<double> &angles, const SpaceConfig &space);

/// Coefficient multiplying the coherent amplitude at total occupation n.
cplx multi_angle_factor(const std::vector<double> &angles, int n_total);

/// exp(i (-1)^{n_tot} phi).
TruncatedState s_phi_apply(const TruncatedState &s, double phi);

/// [2 (1 + cos(phi) e^{-2 r^2})]^{-1/2}.
double cat_phi_norm(double r_tilde, double phi);

/// Normalization of N(|alpha,phi> + e^{i psi}|i alpha,-phi>).
double cat_phi_psi_norm(double r_tilde, double phi, double psi);

TruncatedState cat_phi(const CVec &alpha, double phi, const SpaceConfig &space);

/// Four-component cat: components |alpha>, e^{i phi}|-alpha>, e^{i psi}|i alpha>,
/// e^{i(psi - phi)}|-i alpha>.
TruncatedState cat_phi_psi(const CatParams &params, const SpaceConfig &space);

/// D+|{a_i a_j}; C+, C-> + D-|{-a_i a_j}; C+, C->, the second label realized
/// at the representative -i alpha.
TruncatedState sa_cat(const CVec &alpha, const SpnrCoeffs &inner_coeffs, cplx d_plus, cplx d_minus,
                      const SpaceConfig &space);

/// Degeneracy threshold on the squared pre-normalization norm.
inline constexpr double kDegenerateNorm2 = 1e-12;

}  // namespace bgcs
