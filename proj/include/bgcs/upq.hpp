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
#include "bgcs/quadrature.hpp"
#include "bgcs/spnr.hpp"
#include "bgcs/types.hpp"

namespace bgcs {

/// Signature (p, q) and eigenvalue l of L = sum_{a <= p} n_a - sum_{m > p} n_m.
struct UpqLabel {
    int p = 1;
    int q = 1;
    int l = 0;

    int modes() const { return p + q; }
};

void validate(const UpqLabel &label, const SpaceConfig &space);

/// z_i = alpha_i alpha_N for i <= p, alpha_i / alpha_N for p < i < N.
CVec z_from_alpha(const CVec &alpha, int p);

/// Normalized sector-l part of the unnormalized canonical CS.
TruncatedState upq_state_alpha(const CVec &alpha, const UpqLabel &label, const SpaceConfig &space);

/// Unnormalized ||z;l,p,q>, with n_N fixed by the sector condition.
TruncatedState upq_state_z_unnormalized(const CVec &z, const UpqLabel &label, const SpaceConfig &space);
TruncatedState upq_state_z(const CVec &z, const UpqLabel &label, const SpaceConfig &space);

/// pi^{-N} int d^2 a_N |a_N|^{2(q-1-p-l)} exp(-(rp^2/|a_N|^2 + rq^2 |a_N|^2 + |a_N|^2)),
/// reduced to one radial integral.
double measure_F(double rp, double rq, const UpqLabel &label, const QuadratureSpec &quad = {});

/// Closed form 2 r^{-l-p+1} K_{-l-p+1}(2r) / pi^p, valid for q = 1.
double measure_F_prime(double r, const UpqLabel &label);

/// max over grid of |F - F'| / F' for q = 1.
double measure_compare(const UpqLabel &label, const std::vector<double> &grid, const QuadratureSpec &quad = {});

struct SectorTerm {
    int l;
    cplx weight;
    TruncatedState state;
};

/// C+|alpha> + C-|-alpha> split into charge sectors |l| <= l_max of u(1,1),
/// each carried by a normalized two-mode BG state of index k = (1+|l|)/2.
std::vector<SectorTerm> decompose_spnr(const CVec &alpha, const SpnrCoeffs &coeffs, int l_max,
                                       const SpaceConfig &space);

TruncatedState resum(const std::vector<SectorTerm> &terms);

/// D+|z;l,p,q> + D-|-z;l,p,q>, normalized.
TruncatedState upq_cat(const CVec &z, const UpqLabel &label, cplx d_plus, cplx d_minus, const SpaceConfig &space);

}  // namespace bgcs
