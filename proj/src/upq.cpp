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

#include "bgcs/upq.hpp"

#include <cmath>
#include <string>

#include "bgcs/error.hpp"
#include "bgcs/special_fns.hpp"
#include "bgcs/su11.hpp"

namespace bgcs {

namespace {

double log_factorial(int n) {
    return std::lgamma(n + 1.0);
}

void require_nonempty(const TruncatedState &s, const UpqLabel &label) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (charge_of(s, k, label.p) == label.l) return;
    }
    throw Error(Errc::empty_sector, "no basis state of the truncation has charge " + std::to_string(label.l));
}

}  // namespace

void validate(const UpqLabel &label, const SpaceConfig &space) {
    if (label.p < 1 || label.q < 1) {
        throw Error(Errc::invalid_argument, "u(p,q) needs p, q >= 1");
    }
    if (label.modes() != space.modes()) {
        throw Error(Errc::space_mismatch, "p + q differs from the mode count");
    }
}

CVec z_from_alpha(const CVec &alpha, int p) {
    const int n = int(alpha.size());
    if (p < 1 || p >= n) {
        throw Error(Errc::invalid_argument, "z_from_alpha needs 1 <= p < N");
    }
    cplx an = alpha[n - 1];
    if (std::abs(an) < 1e-12) {
        throw Error(Errc::singular_parametrization, "alpha_N vanishes; the z chart is undefined");
    }
    CVec z(n - 1);
    for (int i = 0; i < n - 1; ++i) z[i] = i < p ? alpha[i] * an : alpha[i] / an;
    return z;
}

TruncatedState upq_state_alpha(const CVec &alpha, const UpqLabel &label, const SpaceConfig &space) {
    validate(label, space);
    if (int(alpha.size()) != space.modes()) {
        throw Error(Errc::space_mismatch, "alpha length differs from the mode count");
    }
    if (std::abs(alpha.back()) < 1e-12) {
        throw Error(Errc::singular_parametrization, "alpha_N vanishes; use upq_state_z");
    }
    TruncatedState s(space);
    require_nonempty(s, label);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (charge_of(s, k, label.p) != label.l) continue;
        cplx v = 1.0;
        for (int m = 0; m < space.modes(); ++m) {
            int n = s.occupation(k, m);
            v *= std::pow(alpha[m], n) * std::exp(-0.5 * log_factorial(n));
        }
        s[k] = v;
    }
    if (s.norm2() < 1e-300) {
        throw Error(Errc::degenerate, "sector component vanishes for these amplitudes");
    }
    return s.normalized();
}

TruncatedState upq_state_z_unnormalized(const CVec &z, const UpqLabel &label, const SpaceConfig &space) {
    validate(label, space);
    if (int(z.size()) != space.modes() - 1) {
        throw Error(Errc::space_mismatch, "z must have N-1 components");
    }
    TruncatedState s(space);
    require_nonempty(s, label);
    const int last = space.modes() - 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (charge_of(s, k, label.p) != label.l) continue;
        cplx v = std::exp(-0.5 * log_factorial(s.occupation(k, last)));
        for (int m = 0; m < last; ++m) {
            int n = s.occupation(k, m);
            v *= std::pow(z[m], n) * std::exp(-0.5 * log_factorial(n));
        }
        s[k] = v;
    }
    return s;
}

TruncatedState upq_state_z(const CVec &z, const UpqLabel &label, const SpaceConfig &space) {
    TruncatedState s = upq_state_z_unnormalized(z, label, space);
    if (s.norm2() < 1e-300) {
        throw Error(Errc::degenerate, "sector component vanishes for these parameters");
    }
    return s.normalized();
}

double measure_F(double rp, double rq, const UpqLabel &label, const QuadratureSpec &quad) {
    validate(quad);
    if (label.p < 1 || label.q < 1) {
        throw Error(Errc::invalid_argument, "u(p,q) needs p, q >= 1");
    }
    if (rp < 0.0 || rq < 0.0) {
        throw Error(Errc::domain, "measure_F: radii must be nonnegative");
    }
    const int nu = label.q - label.p - label.l;
    if (rp == 0.0 && nu <= 0) {
        throw Error(Errc::divergence, "measure_F: integral diverges at |alpha_N| -> 0");
    }
    const double c = 1.0 + rq * rq;
    const double rp2 = rp * rp;
    // x = |alpha_N|^2 = e^t; the angular integral contributes pi.
    auto g = [&](double t) { return std::exp(nu * t - rp2 * std::exp(-t) - c * std::exp(t)); };
    LineOptions opt;
    opt.rel_tol = quad.rel_tol;
    opt.initial_intervals = quad.node_count;
    double integral = quad.scheme == Scheme::tanh_sinh ? integrate_line_sinh(g, opt) : integrate_line(g, opt);
    return std::pow(kPi, 1 - label.modes()) * integral;
}

double measure_F_prime(double r, const UpqLabel &label) {
    if (label.q != 1) {
        throw Error(Errc::invalid_argument, "the closed form F' needs q = 1");
    }
    if (!(r > 0.0)) {
        throw Error(Errc::domain, "measure_F_prime: |z| must be positive");
    }
    const int nu = -label.l - label.p + 1;
    return 2.0 * std::pow(r, nu) * bessel_k(nu, 2.0 * r) / std::pow(kPi, label.p);
}

double measure_compare(const UpqLabel &label, const std::vector<double> &grid, const QuadratureSpec &quad) {
    if (label.q != 1) {
        throw Error(Errc::invalid_argument, "measure_compare needs q = 1");
    }
    double worst = 0.0;
    for (double r : grid) {
        double f = measure_F(r, 0.0, label, quad);
        double fp = measure_F_prime(r, label);
        worst = std::max(worst, std::abs(f - fp) / fp);
    }
    return worst;
}

std::vector<SectorTerm> decompose_spnr(const CVec &alpha, const SpnrCoeffs &coeffs, int l_max,
                                       const SpaceConfig &space) {
    if (alpha.size() != 2 || space.modes() != 2) {
        throw Error(Errc::space_mismatch, "decompose_spnr is defined for two modes");
    }
    const cplx a1 = alpha[0];
    const cplx a2 = alpha[1];
    const cplx z = a1 * a2;
    const double envelope = std::exp(-0.5 * (std::norm(a1) + std::norm(a2)));
    std::vector<SectorTerm> terms;
    for (int l = -l_max; l <= l_max; ++l) {
        int la = std::abs(l);
        double k = 0.5 * (1.0 + la);
        cplx c_tilde = coeffs.c_plus + (la % 2 == 0 ? 1.0 : -1.0) * coeffs.c_minus;
        // Mode 1 carries the excess for l > 0 (weight a1^l), mode 2 for l < 0.
        cplx lead = l > 0 ? std::pow(a1, la) : std::pow(a2, la);
        Branch b = l > 0 ? Branch::first_excess : Branch::second_excess;
        double norm_b = std::sqrt(bg_norm2_unnormalized(std::abs(z), k));
        TruncatedState st = bg_state(BgLabel{z, k, Realization::two_mode, b}, space);
        terms.push_back({l, envelope * c_tilde * lead * norm_b, std::move(st)});
    }
    return terms;
}

TruncatedState resum(const std::vector<SectorTerm> &terms) {
    if (terms.empty()) {
        throw Error(Errc::invalid_argument, "resum: no terms");
    }
    TruncatedState out(terms.front().state.space());
    for (const auto &t : terms) out += t.weight * t.state;
    return out;
}

TruncatedState upq_cat(const CVec &z, const UpqLabel &label, cplx d_plus, cplx d_minus, const SpaceConfig &space) {
    TruncatedState s = d_plus * upq_state_z(z, label, space);
    s += d_minus * upq_state_z(scaled(z, -1.0), label, space);
    if (s.norm2() < kDegenerateNorm2) {
        throw Error(Errc::degenerate, "upq_cat: the two components cancel");
    }
    return s.normalized();
}

}  // namespace bgcs
