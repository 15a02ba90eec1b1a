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
#include <string>

#include "bgcs/error.hpp"

namespace bgcs {

namespace {

bool is_integer(double x) {
    return x == std::floor(x);
}

int l_abs_of(double k) {
    return int(std::lround(2.0 * k - 1.0));
}

// Fock index of the n-th ladder state in the chosen embedding, or -1 if it
// falls outside the truncation.
long embed_index(const SpaceConfig &space, Realization r, Branch b, double k, int n) {
    if (r == Realization::one_mode) {
        int m = 2 * n + (k > 0.5 ? 1 : 0);
        return m <= space.n_max() ? long(m) : -1;
    }
    int l = l_abs_of(k);
    int n1 = b == Branch::first_excess ? n + l : n;
    int n2 = b == Branch::first_excess ? n : n + l;
    if (n1 > space.n_max() || n2 > space.n_max()) return -1;
    return long(n1 * space.stride(0) + n2 * space.stride(1));
}

void require_realization(const BgLabel &label, const SpaceConfig &space) {
    if (label.realization == Realization::abstract) {
        throw Error(Errc::space_mismatch, "abstract BG labels have no Fock embedding");
    }
    int want = label.realization == Realization::one_mode ? 1 : 2;
    if (space.modes() != want) {
        throw Error(Errc::space_mismatch, "realization needs " + std::to_string(want) + " mode(s)");
    }
}

double log_monomial_weight(int n, double k) {
    return -0.5 * (std::lgamma(n + 1.0) + std::lgamma(2.0 * k + n));
}

}  // namespace

void validate(const BgLabel &label) {
    switch (label.realization) {
        case Realization::one_mode:
            if (label.k != 0.25 && label.k != 0.75) {
                throw Error(Errc::invalid_argument, "one-mode realization needs k = 1/4 or 3/4");
            }
            break;
        case Realization::two_mode:
            if (!(label.k >= 0.5) || !is_integer(2.0 * label.k)) {
                throw Error(Errc::invalid_argument, "two-mode realization needs k in {1/2, 1, 3/2, ...}");
            }
            if (label.k == 0.5 && label.branch == Branch::first_excess) {
                throw Error(Errc::invalid_argument, "k = 1/2 has only the l = 0 embedding");
            }
            break;
        case Realization::abstract:
            if (!(label.k > 0.0)) {
                throw Error(Errc::invalid_argument, "Bargman index must be positive");
            }
            break;
    }
}

double bg_norm2_unnormalized(double r, double k, const SeriesControl &ctl) {
    return hyp0f1(2.0 * k, r * r, ctl) / gamma_fn(2.0 * k);
}

double bg_normalization(double r, double k, const SeriesControl &ctl) {
    double series = 1.0 / std::sqrt(bg_norm2_unnormalized(r, k, ctl));
    if (r > 0.0) {
        double bessel = std::pow(r, k - 0.5) / std::sqrt(bessel_i(2.0 * k - 1.0, 2.0 * r, ctl));
        if (std::abs(series - bessel) > 1e-8 * std::abs(series)) {
            throw Error(Errc::normalization, "0F1 and Bessel forms of N_BG disagree");
        }
    }
    return series;
}

CVec bg_coefficients(const BgLabel &label, int n_terms) {
    validate(label);
    if (n_terms < 1) {
        throw Error(Errc::invalid_argument, "bg_coefficients: n_terms must be >= 1");
    }
    double r = std::abs(label.z);
    double theta = std::arg(label.z);
    double nbg = bg_normalization(r, label.k);
    CVec c(n_terms);
    c[0] = nbg * std::exp(log_monomial_weight(0, label.k));
    for (int n = 1; n < n_terms; ++n) {
        if (r == 0.0) {
            c[n] = 0.0;
            continue;
        }
        double mag = std::exp(n * std::log(r) + log_monomial_weight(n, label.k));
        c[n] = nbg * mag * std::polar(1.0, n * theta);
    }
    return c;
}

TruncatedState bg_state(const BgLabel &label, const SpaceConfig &space) {
    validate(label);
    require_realization(label, space);
    // Enough terms to reach past the cutoff along the embedding.
    int n_terms = space.n_max() + 1;
    CVec c = bg_coefficients(label, n_terms);
    TruncatedState s(space);
    double kept = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        long idx = embed_index(space, label.realization, label.branch, label.k, n);
        if (idx < 0) break;
        s[std::size_t(idx)] = c[n];
        kept += std::norm(c[n]);
    }
    s.add_truncation_loss(std::max(0.0, 1.0 - kept));
    return s;
}

cplx bg_overlap(cplx z1, cplx z2, double k, const SeriesControl &ctl) {
    cplx num = hyp0f1(2.0 * k, std::conj(z1) * z2, ctl);
    double den = std::sqrt(hyp0f1(2.0 * k, std::norm(z1), ctl) * hyp0f1(2.0 * k, std::norm(z2), ctl));
    return num / den;
}

double bg_measure_density(double r, double k) {
    if (!(r > 0.0)) {
        throw Error(Errc::domain, "bg_measure_density: |z| must be positive");
    }
    return 2.0 / kPi * std::pow(r, 2.0 * k - 1.0) * bessel_k(2.0 * k - 1.0, 2.0 * r);
}

CVec bg_diffop_apply(Su11Op op, const CVec &poly, double k) {
    CVec out;
    switch (op) {
        case Su11Op::k_plus:
            out.assign(poly.size() + 1, 0.0);
            for (std::size_t n = 0; n < poly.size(); ++n) out[n + 1] = poly[n];
            break;
        case Su11Op::k_minus:
            // 2k d/dz + z d^2/dz^2 sends z^n to n (2k + n - 1) z^{n-1}.
            out.assign(poly.empty() ? 0 : poly.size() - 1, 0.0);
            for (std::size_t n = 1; n < poly.size(); ++n) out[n - 1] = double(n) * (2.0 * k + n - 1.0) * poly[n];
            break;
        case Su11Op::k_3:
            out = poly;
            for (std::size_t n = 0; n < poly.size(); ++n) out[n] *= k + double(n);
            break;
    }
    return out;
}

TruncatedState su11_apply(const TruncatedState &s, Su11Op op, Realization realization) {
    if (realization == Realization::one_mode) {
        if (s.space().modes() != 1) throw Error(Errc::space_mismatch, "one-mode realization on a multimode space");
        switch (op) {
            case Su11Op::k_minus:
                return 0.5 * annihilate(annihilate(s, 0), 0);
            case Su11Op::k_plus:
                return 0.5 * create(create(s, 0), 0);
            case Su11Op::k_3: {
                TruncatedState out = apply_number(s, 0);
                out += 0.5 * s;
                return 0.5 * out;
            }
        }
    }
    if (realization == Realization::two_mode) {
        if (s.space().modes() != 2) throw Error(Errc::space_mismatch, "two-mode realization needs two modes");
        switch (op) {
            case Su11Op::k_minus:
                return apply_pair_lowering(s, 0, 1);
            case Su11Op::k_plus:
                return create(create(s, 1), 0);
            case Su11Op::k_3: {
                TruncatedState out = apply_number(s, 0);
                out += apply_number(s, 1);
                out += s;
                return 0.5 * out;
            }
        }
    }
    throw Error(Errc::invalid_argument, "su11_apply needs a boson realization");
}

cplx bg_analytic(const TruncatedState &s, cplx z, double k, Realization realization, Branch branch) {
    BgLabel label{z, k, realization, branch};
    validate(label);
    require_realization(label, s.space());
    cplx acc = 0.0;
    cplx zn = 1.0;
    for (int n = 0;; ++n) {
        long idx = embed_index(s.space(), realization, branch, k, n);
        if (idx < 0) break;
        acc += zn * std::exp(log_monomial_weight(n, k)) * s[std::size_t(idx)];
        zn *= z;
    }
    return acc;
}

cplx ccs_analytic(const TruncatedState &s, const CVec &alpha) {
    if (int(alpha.size()) != s.space().modes()) {
        throw Error(Errc::space_mismatch, "alpha length differs from the mode count");
    }
    const int nm = s.space().n_max();
    std::vector<CVec> pw(alpha.size(), CVec(nm + 1));
    for (std::size_t m = 0; m < alpha.size(); ++m) {
        pw[m][0] = 1.0;
        for (int n = 1; n <= nm; ++n) pw[m][n] = pw[m][n - 1] * alpha[m] / std::sqrt(double(n));
    }
    cplx acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        cplx w = 1.0;
        for (int m = 0; m < s.space().modes(); ++m) w *= pw[m][s.occupation(k, m)];
        acc += w * s[k];
    }
    return acc;
}

cplx ccs_from_bg_two_mode(const std::vector<BgComponent> &components, cplx a1, cplx a2) {
    cplx acc = 0.0;
    for (const auto &c : components) {
        if (c.k == 0.5) {
            acc += c.second_excess;
            continue;
        }
        int l = l_abs_of(c.k);
        acc += std::pow(a1, l) * c.first_excess + std::pow(a2, l) * c.second_excess;
    }
    return acc;
}

cplx ccs_from_bg_one_mode(cplx f_quarter, cplx f_three_quarter, cplx alpha) {
    return std::pow(kPi, 0.25) * (f_quarter + alpha / std::sqrt(2.0) * f_three_quarter);
}

TruncatedState reconstruct_two_mode_cs(cplx a1, cplx a2, double k_max, const SpaceConfig &space) {
    if (space.modes() != 2) {
        throw Error(Errc::space_mismatch, "two-mode reconstruction needs two modes");
    }
    cplx z = a1 * a2;
    TruncatedState out(space);
    auto add_branch = [&](double k, Branch b, cplx weight) {
        for (int n = 0;; ++n) {
            long idx = embed_index(space, Realization::two_mode, b, k, n);
            if (idx < 0) break;
            out[std::size_t(idx)] += weight * std::pow(z, n) * std::exp(log_monomial_weight(n, k));
        }
    };
    add_branch(0.5, Branch::second_excess, 1.0);
    for (int l = 1; 0.5 * (1.0 + l) <= k_max + 1e-12; ++l) {
        double k = 0.5 * (1.0 + l);
        add_branch(k, Branch::first_excess, std::pow(a1, l));
        add_branch(k, Branch::second_excess, std::pow(a2, l));
    }
    out *= std::exp(-0.5 * (std::norm(a1) + std::norm(a2)));
    return out;
}

int charge_of(const TruncatedState &s, std::size_t flat, int p) {
    int l = 0;
    for (int m = 0; m < s.space().modes(); ++m) l += m < p ? s.occupation(flat, m) : -s.occupation(flat, m);
    return l;
}

TruncatedState project_charge_sector(const TruncatedState &s, int l, int p, int q) {
    if (p < 1 || q < 1 || p + q != s.space().modes()) {
        throw Error(Errc::space_mismatch, "project_charge_sector needs p + q equal to the mode count");
    }
    TruncatedState out(s.space());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (charge_of(s, k, p) == l) out[k] = s[k];
    }
    return out;
}

}  // namespace bgcs
