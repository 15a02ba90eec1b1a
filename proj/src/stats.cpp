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

#include "bgcs/stats.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "bgcs/error.hpp"

namespace bgcs {

namespace {

const cplx kI(0.0, 1.0);

struct CatAngles {
    double r2;
    double nt2;  // Ntilde^2
    double n2;   // N^2
    double a;    // r2 - phi + psi
    double b;    // r2 + phi - psi
};

CatAngles cat_angles(const CatParams &params) {
    double rt = params.r_tilde();
    CatAngles c;
    c.r2 = rt * rt;
    double nt = cat_phi_norm(rt, params.phi);
    double n = cat_phi_psi_norm(rt, params.phi, params.psi);
    c.nt2 = nt * nt;
    c.n2 = n * n;
    c.a = c.r2 - params.phi + params.psi;
    c.b = c.r2 + params.phi - params.psi;
    return c;
}

void check_mode(const CVec &alpha, int i) {
    if (i < 0 || i >= int(alpha.size())) {
        throw Error(Errc::out_of_range, "mode index " + std::to_string(i) + " out of range");
    }
}

double log_poisson_weight(double r2, int n) {
    if (r2 == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return -r2 + n * std::log(r2) - std::lgamma(n + 1.0);
}

Distribution finish(std::vector<double> p) {
    Distribution d;
    double sum = 0.0;
    for (double v : p) sum += v;
    d.p = std::move(p);
    d.tail_mass = std::max(0.0, 1.0 - sum);
    return d;
}

bool near_multiple(double x, double step) {
    return std::abs(std::remainder(x, step)) < 1e-9;
}

using Observable = std::vector<std::pair<cplx, Word>>;

TruncatedState apply_observable(const TruncatedState &s, const Observable &obs) {
    TruncatedState out(s.space());
    for (const auto &[c, w] : obs) out += c * apply_word(s, w);
    return out;
}

std::pair<Observable, Observable> observables_of(const QuadraturePair &qp, int modes) {
    const double h = 1.0 / std::sqrt(2.0);
    auto check = [&](int m) {
        if (m < 0 || m >= modes) throw Error(Errc::out_of_range, "quadrature mode index out of range");
    };
    check(qp.i);
    if (qp.target == QuadTarget::amplitude) {
        Observable q{{h, {lower(qp.i)}}, {h, {raise(qp.i)}}};
        Observable p{{-kI * h, {lower(qp.i)}}, {kI * h, {raise(qp.i)}}};
        return {p, q};
    }
    int j = qp.target == QuadTarget::squared_amplitude ? qp.i : qp.j;
    check(j);
    Word low{lower(qp.i), lower(j)};
    Word up{raise(qp.i), raise(j)};
    Observable x{{h, low}, {h, up}};
    Observable y{{-kI * h, low}, {kI * h, up}};
    return {x, y};
}

}  // namespace

Moments moments_closed_form(const CatParams &params, int i) {
    check_mode(params.alpha, i);
    const CatAngles c = cat_angles(params);
    const cplx ai = params.alpha[i];
    const double ri2 = std::norm(ai);
    const double e1 = std::exp(-c.r2);
    const double e2 = std::exp(-2.0 * c.r2);
    const double cp = std::cos(params.phi);
    const double k = c.n2 * c.nt2;
    Moments m;
    m.a = -2.0 * ai * k * e1 * std::sin(params.phi) * cplx(1.0, 1.0) * (e1 + std::cos(c.a) + std::sin(c.a));
    m.ada = 4.0 * ri2 * k * (1.0 - cp * e2 - e1 * (cp * std::sin(c.a) + std::sin(c.b)));
    m.a2 = -4.0 * kI * ai * ai * k * e1 * (cp * std::sin(c.a) - std::sin(c.b));
    m.ad2a2 = 2.0 * ri2 * ri2 * c.n2 * (1.0 - 2.0 * c.nt2 * e1 * (cp * std::cos(c.a) + std::cos(c.b)));
    m.a4 = ai * ai * ai * ai;
    return m;
}

double total_intensity_closed_form(const CatParams &params) {
    const CatAngles c = cat_angles(params);
    const double cp = std::cos(params.phi);
    const double e1 = std::exp(-c.r2);
    return 4.0 * c.r2 * c.n2 * c.nt2 * (1.0 - cp * e1 * e1 - e1 * (cp * std::sin(c.a) + std::sin(c.b)));
}

Moments phi_family_moments(const CVec &alpha, double phi, int i) {
    check_mode(alpha, i);
    const cplx ai = alpha[i];
    const double rt = amplitude(alpha);
    Moments m;
    m.a = ai * cplx(std::cos(2.0 * phi), -std::sin(2.0 * phi) * std::exp(-2.0 * rt * rt));
    m.ada = std::norm(ai);
    m.a2 = ai * ai;
    m.ad2a2 = m.ada * m.ada;
    m.a4 = m.a2 * m.a2;
    return m;
}

Moments cat_phi_moments(const CVec &alpha, double phi, int i) {
    check_mode(alpha, i);
    const cplx ai = alpha[i];
    const double rt = amplitude(alpha);
    const double nt = cat_phi_norm(rt, phi);
    const double e2 = std::exp(-2.0 * rt * rt);
    Moments m;
    m.a = -2.0 * kI * nt * nt * ai * std::sin(phi) * e2;
    m.ada = 2.0 * nt * nt * std::norm(ai) * (1.0 - std::cos(phi) * e2);
    m.a2 = ai * ai;
    m.ad2a2 = std::norm(ai) * std::norm(ai);
    m.a4 = m.a2 * m.a2;
    return m;
}

Moments coherent_moments(const CVec &alpha, int i) {
    check_mode(alpha, i);
    const cplx ai = alpha[i];
    return {ai, std::norm(ai), ai * ai, std::norm(ai) * std::norm(ai), ai * ai * ai * ai};
}

Moments moments_from_state(const TruncatedState &s, int i) {
    if (i < 0 || i >= s.space().modes()) {
        throw Error(Errc::out_of_range, "mode index out of range");
    }
    Moments m;
    m.a = expectation(s, {lower(i)});
    m.ada = expectation(s, {raise(i), lower(i)}).real();
    m.a2 = expectation(s, {lower(i), lower(i)});
    m.ad2a2 = expectation(s, {raise(i), raise(i), lower(i), lower(i)}).real();
    m.a4 = expectation(s, {lower(i), lower(i), lower(i), lower(i)});
    return m;
}

PqVariance variance_pq(const Moments &m) {
    return {0.5 + m.ada - m.a2.real() - 2.0 * m.a.imag() * m.a.imag(),
            0.5 + m.ada + m.a2.real() - 2.0 * m.a.real() * m.a.real()};
}

XyVariance variance_XY(const Moments &m) {
    double common = 1.0 + 2.0 * m.ada + m.ad2a2;
    return {common + m.a4.real() - 2.0 * m.a2.real() * m.a2.real(),
            common - m.a4.real() - 2.0 * m.a2.imag() * m.a2.imag()};
}

PqVariance variance_pq(const CatParams &params, int i) {
    return variance_pq(moments_closed_form(params, i));
}

XyVariance variance_XY(const CatParams &params, int i) {
    return variance_XY(moments_closed_form(params, i));
}

double s_n(int n, double phi) {
    return 2.0 * (1.0 + (n % 2 == 0 ? 1.0 : -1.0) * std::cos(phi));
}

double s_n(int n, double phi, double psi) {
    static const cplx pow_i[4] = {1.0, kI, -1.0, -kI};
    int r = n % 4;
    cplx sign = r % 2 == 0 ? 1.0 : -1.0;
    cplx v = 1.0 + sign * std::polar(1.0, phi) + pow_i[r] * std::polar(1.0, psi) +
             pow_i[(4 - r) % 4] * std::polar(1.0, psi - phi);
    return std::norm(v);
}

double Distribution::mean() const {
    double m = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) m += n * p[n];
    return m;
}

double Distribution::variance() const {
    double m = mean();
    double v = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) v += (n - m) * (n - m) * p[n];
    return v;
}

Distribution poisson_distribution(double mean, int n_max) {
    if (mean < 0.0 || n_max < 0) {
        throw Error(Errc::invalid_argument, "poisson_distribution: bad arguments");
    }
    std::vector<double> p(n_max + 1);
    for (int n = 0; n <= n_max; ++n) p[n] = std::exp(log_poisson_weight(mean, n));
    return finish(std::move(p));
}

Distribution photon_distribution_cat_phi(double r_tilde, double phi, int n_max) {
    double nt = cat_phi_norm(r_tilde, phi);
    if (n_max < 0) n_max = adaptive_cutoff(r_tilde);
    std::vector<double> p(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        p[n] = nt * nt * std::exp(log_poisson_weight(r_tilde * r_tilde, n)) * s_n(n, phi);
    }
    return finish(std::move(p));
}

Distribution photon_distribution_cat_phi_psi(double r_tilde, double phi, double psi, int n_max) {
    double nt = cat_phi_norm(r_tilde, phi);
    double nn = cat_phi_psi_norm(r_tilde, phi, psi);
    if (n_max < 0) n_max = adaptive_cutoff(r_tilde);
    std::vector<double> p(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        p[n] = nn * nn * nt * nt * std::exp(log_poisson_weight(r_tilde * r_tilde, n)) * s_n(n, phi, psi);
    }
    return finish(std::move(p));
}

Distribution total_distribution(const TruncatedState &s) {
    std::vector<double> p(s.space().modes() * s.space().n_max() + 1, 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) p[s.total_occupation(k)] += std::norm(s[k]);
    return finish(std::move(p));
}

Distribution marginal_distribution(const TruncatedState &s, int mode) {
    if (mode < 0 || mode >= s.space().modes()) {
        throw Error(Errc::out_of_range, "mode index out of range");
    }
    std::vector<double> p(s.space().n_max() + 1, 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) p[s.occupation(k, mode)] += std::norm(s[k]);
    return finish(std::move(p));
}

Distribution conditional_distribution(const TruncatedState &s, int mode, const std::vector<int> &fixed) {
    const SpaceConfig &sp = s.space();
    if (mode < 0 || mode >= sp.modes()) {
        throw Error(Errc::out_of_range, "mode index out of range");
    }
    if (int(fixed.size()) != sp.modes()) {
        throw Error(Errc::space_mismatch, "fixed occupations must list every mode");
    }
    std::vector<int> n = fixed;
    std::vector<double> p(sp.n_max() + 1);
    double sum = 0.0;
    for (int k = 0; k <= sp.n_max(); ++k) {
        n[mode] = k;
        p[k] = std::norm(s[s.index(n)]);
        sum += p[k];
    }
    if (sum <= 0.0) {
        throw Error(Errc::degenerate, "conditional distribution has zero weight");
    }
    for (double &v : p) v /= sum;
    Distribution d;
    d.p = std::move(p);
    return d;
}

double mandel_q(const Distribution &d) {
    double m = d.mean();
    if (m <= 0.0) {
        throw Error(Errc::vacuum, "Mandel Q undefined for zero mean occupation");
    }
    return (d.variance() - m) / m;
}

double mandel_q(const Moments &m) {
    if (m.ada <= 0.0) {
        throw Error(Errc::vacuum, "Mandel Q undefined for zero mean occupation");
    }
    return (m.ad2a2 - m.ada * m.ada) / m.ada;
}

std::vector<double> l_n_sequence(const Distribution &d) {
    std::vector<double> l;
    for (std::size_t n = 1; n + 1 < d.p.size(); ++n) {
        l.push_back((n + 1) * d.p[n - 1] * d.p[n + 1] - n * d.p[n] * d.p[n]);
    }
    return l;
}

bool is_oscillating(const Distribution &d, double rel_floor) {
    double peak = 0.0;
    for (double v : d.p) peak = std::max(peak, v);
    // Everything up to the last significant entry, zeros included.
    std::size_t end = 0;
    for (std::size_t n = 0; n < d.p.size(); ++n) {
        if (d.p[n] >= rel_floor * peak) end = n + 1;
    }
    std::vector<double> kept(d.p.begin(), d.p.begin() + end);
    int changes = 0;
    int last = 0;
    for (std::size_t n = 1; n < kept.size(); ++n) {
        double diff = kept[n] - kept[n - 1];
        int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
        if (sign == 0) continue;
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    return changes > 1;
}

const char *to_string(Family f) {
    switch (f) {
        case Family::canonical: return "canonical";
        case Family::phi_family: return "phi";
        case Family::cat_phi: return "cat_phi";
        case Family::cat_phi_psi: return "cat_phi_psi";
        case Family::n_angle: return "n_angle";
        case Family::spnr_bg: return "spnr_bg";
        case Family::sa_cat: return "sa_cat";
    }
    return "?";
}

const char *to_string(NcClass c) {
    switch (c) {
        case NcClass::classical: return "classical";
        case NcClass::weak: return "weak";
        case NcClass::strong: return "strong";
        case NcClass::undetermined: return "undetermined";
    }
    return "?";
}

Family family_from_string(const std::string &name) {
    for (Family f : {Family::canonical, Family::phi_family, Family::cat_phi, Family::cat_phi_psi, Family::n_angle,
                     Family::spnr_bg, Family::sa_cat}) {
        if (name == to_string(f)) return f;
    }
    throw Error(Errc::unknown_family, "unknown family '" + name + "'");
}

NcClass classify(Family family, const CatParams &params) {
    switch (family) {
        case Family::canonical:
            return NcClass::classical;
        case Family::phi_family:
            return near_multiple(params.phi, kPi / 2) ? NcClass::classical : NcClass::weak;
        case Family::cat_phi:
            // At phi = +-pi/2 the cat is a phi-family member with varphi = +-pi/4.
            return near_multiple(params.phi - kPi / 2, kPi) ? NcClass::weak : NcClass::strong;
        case Family::cat_phi_psi:
            return NcClass::strong;
        case Family::n_angle:
        case Family::spnr_bg:
        case Family::sa_cat:
            return NcClass::undetermined;
    }
    throw Error(Errc::unknown_family, "classify: unknown family");
}

RobertsonResult robertson_matrices(const TruncatedState &s, const std::vector<QuadraturePair> &pairs) {
    const int modes = s.space().modes();
    std::vector<TruncatedState> v;
    std::vector<double> mean;
    for (const auto &qp : pairs) {
        auto [first, second] = observables_of(qp, modes);
        for (const auto *obs : {&first, &second}) {
            v.push_back(apply_observable(s, *obs));
            mean.push_back(inner(s, v.back()).real());
        }
    }
    const int m = int(v.size());
    Eigen::MatrixXd sig(m, m), com(m, m);
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            cplx g = inner(v[k], v[l]);
            sig(k, l) = g.real() - mean[k] * mean[l];
            com(k, l) = g.imag();
        }
    }
    RobertsonResult r;
    r.sigma.assign(m, std::vector<double>(m));
    r.c.assign(m, std::vector<double>(m));
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            r.sigma[k][l] = sig(k, l);
            r.c[k][l] = com(k, l);
        }
    }
    r.det_sigma = sig.determinant();
    r.det_c = com.determinant();
    return r;
}

std::vector<QuadraturePair> all_pair_quadratures(int modes) {
    std::vector<QuadraturePair> out;
    for (int i = 0; i < modes; ++i) {
        for (int j = i; j < modes; ++j) out.push_back({QuadTarget::pair, i, j});
    }
    return out;
}

StatsReport stats_report(Family family, const CatParams &params) {
    if (family != Family::cat_phi && family != Family::cat_phi_psi) {
        throw Error(Errc::unknown_family, "stats_report covers cat_phi and cat_phi_psi");
    }
    StatsReport rep;
    const double rt = params.r_tilde();
    const int modes = int(params.alpha.size());
    for (int i = 0; i < modes; ++i) {
        Moments m = family == Family::cat_phi_psi ? moments_closed_form(params, i)
                                                   : cat_phi_moments(params.alpha, params.phi, i);
        rep.moments.push_back(m);
        rep.pq.push_back(variance_pq(m));
        rep.xy.push_back(variance_XY(m));
        rep.q_mode.push_back(m.ada > 0.0 ? mandel_q(m) : std::numeric_limits<double>::quiet_NaN());
    }
    if (family == Family::cat_phi_psi) {
        rep.n_total = total_intensity_closed_form(params);
        rep.distribution = photon_distribution_cat_phi_psi(rt, params.phi, params.psi);
    } else {
        rep.distribution = photon_distribution_cat_phi(rt, params.phi);
        rep.n_total = rep.distribution.mean();
    }
    rep.q_total = rep.n_total > 0.0 ? mandel_q(rep.distribution) : std::numeric_limits<double>::quiet_NaN();
    rep.q_near_zero = std::abs(rep.q_total) < 1e-3;
    rep.l_n = l_n_sequence(rep.distribution);
    rep.cls = classify(family, params);
    return rep;
}

}  // namespace bgcs
