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

#include "bgcs/spnr.hpp"

#include <cmath>

#include "bgcs/error.hpp"

namespace bgcs {

namespace {

const cplx kI(0.0, 1.0);

double amplitude2(const CVec &alpha) {
    double r2 = 0.0;
    for (const auto &a : alpha) r2 += std::norm(a);
    return r2;
}

}  // namespace

double SpnrCoeffs::norm2(const CVec &alpha) const {
    double overlap = std::exp(-2.0 * amplitude2(alpha));
    return std::norm(c_plus) + std::norm(c_minus) + 2.0 * std::real(c_minus * std::conj(c_plus)) * overlap;
}

SpnrCoeffs SpnrCoeffs::normalized(cplx c_plus, cplx c_minus, const CVec &alpha) {
    SpnrCoeffs raw{c_plus, c_minus};
    double n2 = raw.norm2(alpha);
    if (n2 < kDegenerateNorm2) {
        throw Error(Errc::degenerate, "the two components cancel");
    }
    double s = 1.0 / std::sqrt(n2);
    return SpnrCoeffs{c_plus * s, c_minus * s};
}

double CatParams::r_tilde() const {
    return amplitude(alpha);
}

double amplitude(const CVec &alpha) {
    return std::sqrt(amplitude2(alpha));
}

CVec scaled(const CVec &alpha, cplx factor) {
    CVec out = alpha;
    for (auto &a : out) a *= factor;
    return out;
}

TruncatedState spnr_bg_state(const CVec &alpha, const SpnrCoeffs &coeffs, const SpaceConfig &space) {
    double n2 = coeffs.norm2(alpha);
    if (n2 < kDegenerateNorm2) {
        throw Error(Errc::degenerate, "spnr_bg_state: the two components cancel");
    }
    if (std::abs(n2 - 1.0) > 1e-10) {
        throw Error(Errc::normalization, "spnr_bg_state: coefficients violate the normalization condition");
    }
    TruncatedState s = coeffs.c_plus * coherent_state(alpha, space);
    s += coeffs.c_minus * coherent_state(scaled(alpha, -1.0), space);
    return s;
}

TruncatedState phi_state(const CVec &alpha, double phi, const SpaceConfig &space) {
    TruncatedState s = std::cos(phi) * coherent_state(alpha, space);
    s += kI * std::sin(phi) * coherent_state(scaled(alpha, -1.0), space);
    return s;
}

TruncatedState multi_angle_state(const CVec &alpha, const std::vector<double> &angles, const SpaceConfig &space) {
    if (angles.empty()) {
        return coherent_state(alpha, space);
    }
    std::vector<double> head(angles.begin(), angles.end() - 1);
    const int n = int(angles.size());
    const double phi_n = angles.back();
    cplx rot = std::polar(1.0, kPi / std::ldexp(1.0, n - 1));
    TruncatedState s = std::cos(phi_n) * multi_angle_state(alpha, head, space);
    s += kI * std::sin(phi_n) * multi_angle_state(scaled(alpha, rot), head, space);
    return s;
}

cplx multi_angle_factor(const std::vector<double> &angles, int n_total) {
    cplx f = 1.0;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        cplx rot_n = std::polar(1.0, n_total * kPi / std::ldexp(1.0, int(k)));
        f = std::cos(angles[k]) * f + kI * std::sin(angles[k]) * rot_n * f;
    }
    return f;
}

TruncatedState s_phi_apply(const TruncatedState &s, double phi) {
    TruncatedState out = s;
    cplx even = std::polar(1.0, phi);
    cplx odd = std::conj(even);
    for (std::size_t k = 0; k < s.size(); ++k) out[k] *= s.total_occupation(k) % 2 == 0 ? even : odd;
    return out;
}

double cat_phi_norm(double r_tilde, double phi) {
    double d = 2.0 * (1.0 + std::cos(phi) * std::exp(-2.0 * r_tilde * r_tilde));
    if (d < kDegenerateNorm2) {
        throw Error(Errc::degenerate, "cat_phi: degenerate superposition");
    }
    return 1.0 / std::sqrt(d);
}

double cat_phi_psi_norm(double r_tilde, double phi, double psi) {
    double r2 = r_tilde * r_tilde;
    double nt = cat_phi_norm(r_tilde, phi);
    double a = r2 - phi + psi;
    double b = r2 + phi - psi;
    double d = 2.0 * (1.0 + 2.0 * nt * nt * std::exp(-r2) * (std::cos(phi) * std::cos(a) + std::cos(b)));
    if (d < kDegenerateNorm2) {
        throw Error(Errc::degenerate, "cat_phi_psi: degenerate superposition");
    }
    return 1.0 / std::sqrt(d);
}

TruncatedState cat_phi(const CVec &alpha, double phi, const SpaceConfig &space) {
    double nt = cat_phi_norm(amplitude(alpha), phi);
    TruncatedState s = coherent_state(alpha, space);
    s += std::polar(1.0, phi) * coherent_state(scaled(alpha, -1.0), space);
    s *= nt;
    return s;
}

TruncatedState cat_phi_psi(const CatParams &params, const SpaceConfig &space) {
    const CVec &a = params.alpha;
    double r = amplitude(a);
    double nn = cat_phi_psi_norm(r, params.phi, params.psi) * cat_phi_norm(r, params.phi);
    TruncatedState s = coherent_state(a, space);
    s += std::polar(1.0, params.phi) * coherent_state(scaled(a, -1.0), space);
    s += std::polar(1.0, params.psi) * coherent_state(scaled(a, kI), space);
    s += std::polar(1.0, params.psi - params.phi) * coherent_state(scaled(a, -kI), space);
    s *= nn;
    return s;
}

TruncatedState sa_cat(const CVec &alpha, const SpnrCoeffs &inner_coeffs, cplx d_plus, cplx d_minus,
                      const SpaceConfig &space) {
    TruncatedState up = spnr_bg_state(alpha, inner_coeffs, space);
    TruncatedState down = spnr_bg_state(scaled(alpha, -kI), inner_coeffs, space);
    // Normalization condition with the overlaps taken from the oracle.
    cplx ov = inner(up, down);
    double n2 = std::norm(d_plus) + std::norm(d_minus) + 2.0 * std::real(std::conj(d_plus) * d_minus * ov);
    if (n2 < kDegenerateNorm2) {
        throw Error(Errc::degenerate, "sa_cat: the two components cancel");
    }
    if (std::abs(n2 - 1.0) > 1e-10) {
        throw Error(Errc::normalization, "sa_cat: (D+, D-) violate the normalization condition");
    }
    TruncatedState s = d_plus * up;
    s += d_minus * down;
    return s;
}

}  // namespace bgcs
