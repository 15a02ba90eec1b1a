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

// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail=i,j,...]
//
// Exits 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "bgcs/error.hpp"
#include "bgcs/fock.hpp"
#include "bgcs/spnr.hpp"
#include "bgcs/stats.hpp"
#include "bgcs/su11.hpp"
#include "bgcs/upq.hpp"
#include "bgcs/verify.hpp"

using namespace bgcs;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

/// Grid minimum followed by Brent refinement in the neighbouring cells.
std::pair<double, double> minimize(const std::function<double(double)> &f, double lo, double hi, int points) {
    double step = (hi - lo) / (points - 1);
    int best = 0;
    double fbest = f(lo);
    for (int k = 1; k < points; ++k) {
        double v = f(lo + k * step);
        if (v < fbest) fbest = v, best = k;
    }
    double a = std::max(lo, lo + (best - 1) * step), b = std::min(hi, lo + (best + 1) * step);
    auto [x, fx] = boost::math::tools::brent_find_minima(f, a, b, 40);
    return {x, fx};
}

double round_to(double v, int digits) {
    double s = std::pow(10.0, digits);
    return std::round(v * s) / s;
}

CatParams one_mode(double r, double theta, double phi, double psi) {
    return CatParams{{std::polar(r, theta)}, {}, phi, psi};
}

std::string summarize(const std::vector<Check> &checks, bool *all) {
    std::ostringstream s;
    *all = true;
    int failed = 0;
    for (const auto &c : checks) {
        if (!c.pass) {
            *all = false;
            ++failed;
            s << " [" << c.suite << ": " << c.name << " = " << c.value << "]";
        }
    }
    return fmt("%d/%d checks pass", int(checks.size()) - failed, int(checks.size())) + s.str();
}

Outcome criterion_1() {
    auto dp = [](double psi) { return variance_pq(one_mode(0.05, kPi / 4, 0.0, psi), 0).p; };
    auto dq = [](double psi) { return variance_pq(one_mode(0.05, kPi / 4, 0.0, psi), 0).q; };
    auto [xp, fp] = minimize(dp, 0.0, 2.0 * kPi, 2000);
    auto [xq, fq] = minimize(dq, 0.0, 2.0 * kPi, 2000);
    bool ok = std::abs(fp - 0.275) <= 0.005 && std::abs(xp - 3.131) <= 0.02 && std::abs(xq - 3.153) <= 0.02;
    return {ok, fmt("min d2p = %.4f at psi = %.4f; min d2q = %.4f at psi = %.4f", fp, xp, fq, xq)};
}

Outcome criterion_2() {
    // Delta^2 of the phi family at |alpha| = 0.5, minimized over theta and varphi.
    const int n = 721;
    double best = 1e300, bt = 0, bv = 0;
    for (int i = 0; i < n; ++i) {
        double theta = kPi * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            double varphi = kPi * j / (n - 1);
            PqVariance v = variance_pq(phi_family_moments({std::polar(0.5, theta)}, varphi, 0));
            double m = std::min(v.p, v.q);
            if (m < best) best = m, bt = theta, bv = varphi;
        }
    }
    return {std::abs(best - 0.316) <= 0.005, fmt("min = %.4f at theta = %.4f, varphi = %.4f", best, bt, bv)};
}

Outcome criterion_3() {
    auto dx = [](double psi) { return variance_XY(one_mode(0.88, kPi / 4, 0.0, psi), 0).x; };
    auto [x, fx] = minimize(dx, 0.0, 2.0 * kPi, 2000);
    return {std::abs(fx - 0.69) <= 0.01, fmt("min d2X = %.4f at psi = %.4f", fx, x)};
}

Outcome criterion_4() {
    const double lo = -1.0, hi = 8.0;
    const int n = 9001;
    std::vector<std::pair<double, double>> windows;
    bool inside = false;
    double start = 0.0, prev = lo;
    for (int k = 0; k < n; ++k) {
        double psi = lo + (hi - lo) * k / (n - 1);
        CatParams p = one_mode(0.8, kPi / 4, 0.0, psi);
        bool joint = variance_XY(p, 0).x < 1.0 && 2.0 * variance_pq(p, 0).p < 1.0;
        if (joint && !inside) start = psi;
        if (!joint && inside) windows.push_back({start, prev});
        inside = joint;
        prev = psi;
    }
    if (inside) windows.push_back({start, hi});
    const std::pair<double, double> variants[] = {{6.4, 7.4}, {-0.72, -0.1}};
    std::string found;
    bool ok = false;
    for (auto [a, b] : windows) {
        found += fmt(" [%.3f, %.3f]", a, b);
        for (auto [va, vb] : variants) {
            if (std::abs(a - va) <= 0.1 && std::abs(b - vb) <= 0.1) {
                ok = true;
                found += fmt(" matches %.2f..%.2f", va, vb);
            }
        }
    }
    return {ok, "windows:" + found};
}

Outcome criterion_5() {
    struct Case {
        int n;
        double phi, psi;
    } cases[] = {{1, kPi, -kPi / 2}, {2, 0.0, kPi}, {3, kPi, kPi / 2}};
    bool ok = true;
    std::string d;
    for (auto c : cases) {
        double p = photon_distribution_cat_phi_psi(0.5, c.phi, c.psi).p[c.n];
        ok = ok && p >= 0.99995;
        d += fmt("p%d = %.7f ", c.n, p);
    }
    return {ok, d};
}

struct ThetaMins {
    double p, q, x;
};

ThetaMins theta_mins(double r, double phi, double psi) {
    ThetaMins m{1e300, 1e300, 1e300};
    for (int k = 0; k < 1440; ++k) {
        CatParams p = one_mode(r, kPi * k / 1440, phi, psi);
        PqVariance pq = variance_pq(p, 0);
        m = {std::min(m.p, pq.p), std::min(m.q, pq.q), std::min(m.x, variance_XY(p, 0).x)};
    }
    return m;
}

Outcome criterion_6() {
    // Variances are compared at the two decimals printed in the captions.
    auto q_of = [](double r, double phi, double psi) {
        return stats_report(Family::cat_phi_psi, one_mode(r, 0.0, phi, psi));
    };
    std::string d;
    StatsReport a = q_of(0.8, 0.0, 7.3);
    ThetaMins ma = theta_mins(0.8, 0.0, 7.3);
    bool ok_a = a.q_total > 0.0 && round_to(ma.p, 2) >= 0.38 && round_to(ma.x, 2) >= 0.73;
    d += fmt("(0.8,0,7.3): Q=%.4g d2p=%.4f d2X=%.4f; ", a.q_total, ma.p, ma.x);
    StatsReport b = q_of(2.2, kPi, -kPi / 2);
    bool ok_b = b.q_total < 0.0;
    d += fmt("(2.2,pi,-pi/2): Q=%.4g; ", b.q_total);
    StatsReport c = q_of(0.55, 2.246, 0.0);
    ThetaMins mc = theta_mins(0.55, 2.246, 0.0);
    bool ok_c = c.q_total < 0.0 && round_to(mc.q, 2) >= 0.5 && round_to(mc.x, 2) >= 1.0;
    d += fmt("(0.55,2.246,0): Q=%.4g d2q=%.4f d2X=%.4f; ", c.q_total, mc.q, mc.x);
    StatsReport e = q_of(0.55, 2.234384, 0.0);
    bool ok_e = std::abs(e.q_total) < 1e-3 && std::abs(e.n_total - 0.685) <= 0.002;
    d += fmt("(0.55,2.234384,0): Q=%.3g <n>=%.5f", e.q_total, e.n_total);
    return {ok_a && ok_b && ok_c && ok_e, d};
}

Outcome criterion_7() {
    const double rs[] = {0.1, 0.8, 1.5, 2.2, 3.0};
    const double phis[] = {0.0, 0.9, 1.8, 2.7, 4.0};
    const double psis[] = {0.0, 1.3, 2.6, 3.9, 5.2};
    double worst = 0.0;
    int points = 0;
    for (double r : rs) {
        CVec a{std::polar(r * std::cos(0.4), 0.3), std::polar(r * std::sin(0.4), -1.1)};
        SpaceConfig sp = adaptive_space(2, r);
        for (double phi : phis) {
            for (double psi : psis) {
                CatParams p{a, {}, phi, psi};
                TruncatedState s = cat_phi_psi(p, sp);
                for (int i = 0; i < 2; ++i) {
                    Moments c = moments_closed_form(p, i), o = moments_from_state(s, i);
                    PqVariance pc = variance_pq(c), po = variance_pq(o);
                    XyVariance xc = variance_XY(c), xo = variance_XY(o);
                    for (double diff : {std::abs(c.a - o.a), std::abs(c.ada - o.ada), std::abs(c.a2 - o.a2),
                                        std::abs(c.ad2a2 - o.ad2a2), std::abs(c.a4 - o.a4), std::abs(pc.p - po.p),
                                        std::abs(pc.q - po.q), std::abs(xc.x - xo.x), std::abs(xc.y - xo.y)}) {
                        worst = std::max(worst, diff);
                    }
                }
                ++points;
            }
        }
    }
    return {worst < 1e-8, fmt("%d points, max |closed form - oracle| = %.3g", points, worst)};
}

Outcome from_suites(std::initializer_list<const char *> suites) {
    std::vector<Check> all;
    for (const char *s : suites) {
        auto c = run_suite(s);
        all.insert(all.end(), c.begin(), c.end());
    }
    bool ok;
    std::string d = summarize(all, &ok);
    return {ok, d};
}

Outcome criterion_12() {
    double worst_l = 0.0;
    for (double mean : {0.5, 2.0, 5.0}) {
        for (double l : l_n_sequence(poisson_distribution(mean, 60))) worst_l = std::max(worst_l, std::abs(l));
    }
    CVec c{cplx(0.8, -0.5)};
    double q_cs = std::abs(mandel_q(total_distribution(coherent_state(c, adaptive_space(1, amplitude(c))))));
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_p = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        CVec a{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        double phi = kPi * u(rng);
        TruncatedState s = phi_state(a, phi, adaptive_space(2, amplitude(a)));
        for (int i = 0; i < 2; ++i) {
            Distribution m = marginal_distribution(s, i);
            Distribution ref = poisson_distribution(std::norm(a[i]), int(m.p.size()) - 1);
            for (std::size_t n = 0; n < m.p.size(); ++n) worst_p = std::max(worst_p, std::abs(m.p[n] - ref.p[n]));
        }
    }
    bool ok = worst_l < 1e-12 && q_cs < 1e-10 && worst_p < 1e-10;
    return {ok, fmt("max |l_n| = %.3g, |Q_cs| = %.3g, max |p - poisson| = %.3g", worst_l, q_cs, worst_p)};
}

Outcome criterion_13() {
    SpaceConfig sp(2, 40);
    TruncatedState ref = coherent_state({0.6, 0.3}, sp);
    TruncatedState rec = reconstruct_two_mode_cs(0.6, 0.3, 6.0, sp);
    double f1 = std::norm(inner(ref, rec)) / (ref.norm2() * rec.norm2());
    CVec a{0.6, 0.3};
    SpnrCoeffs c = SpnrCoeffs::normalized(1.0, cplx(0.3, 0.5), a);
    TruncatedState s = spnr_bg_state(a, c, sp);
    TruncatedState sum = resum(decompose_spnr(a, c, 12, sp));
    double f2 = std::norm(inner(s, sum)) / (s.norm2() * sum.norm2());
    return {f1 >= 1.0 - 1e-8 && f2 >= 1.0 - 1e-8, fmt("1 - F(reconstruction) = %.3g, 1 - F(resum) = %.3g",
                                                      1.0 - f1, 1.0 - f2)};
}

}  // namespace

int main(int argc, char **argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        const std::string key = "--expect-fail=";
        if (a.rfind(key, 0) != 0) {
            std::fprintf(stderr, "usage: acceptance [--expect-fail=i,j,...]\n");
            return 2;
        }
        std::stringstream in(a.substr(key.size()));
        for (std::string tok; std::getline(in, tok, ',');) expected.insert(std::stoi(tok));
    }
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, criterion_1},
        {2, criterion_2},
        {3, criterion_3},
        {4, criterion_4},
        {5, criterion_5},
        {6, criterion_6},
        {7, criterion_7},
        {8, [] { return from_suites({"eigen"}); }},
        {9, [] { return from_suites({"unity", "theorem-a2"}); }},
        {10, [] { return from_suites({"special", "measures"}); }},
        {11, [] { return from_suites({"robertson"}); }},
        {12, criterion_12},
        {13, criterion_13},
    };
    std::set<int> failed;
    for (const auto &[id, fn] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const Error &e) {
            o = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) failed.insert(id);
        std::printf("%s criterion %2d (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria pass\n", int(criteria.size() - failed.size()), int(criteria.size()));
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
