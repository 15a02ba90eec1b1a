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

#include "bgcs/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "bgcs/error.hpp"
#include "bgcs/fock.hpp"
#include "bgcs/special_fns.hpp"
#include "bgcs/spnr.hpp"
#include "bgcs/stats.hpp"
#include "bgcs/unity.hpp"
#include "bgcs/upq.hpp"

namespace bgcs {

namespace {

const cplx kI(0.0, 1.0);

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Check below(const std::string &suite, const std::string &name, double value, double threshold) {
    return {suite, name, value, threshold, std::isfinite(value) && value < threshold};
}

/// Runs fn and turns a library error into a failed check.
template <class F>
void guarded(std::vector<Check> &out, const std::string &suite, const std::string &name, double threshold, F &&fn) {
    try {
        out.push_back(below(suite, name, fn(), threshold));
    } catch (const Error &e) {
        out.push_back({suite, name + " [" + to_string(e.code()) + "]", NAN, threshold, false});
    }
}

SpaceConfig space_for(int modes, double amp, const VerifyOptions &opt) {
    return opt.n_max > 0 ? SpaceConfig(modes, opt.n_max) : adaptive_space(modes, amp);
}

CVec random_alpha(std::mt19937_64 &rng, int modes, double amp) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CVec a(modes);
    for (auto &x : a) x = cplx(u(rng), u(rng));
    double s = amp / amplitude(a);
    for (auto &x : a) x *= s;
    return a;
}

std::vector<Check> suite_special(const VerifyOptions &) {
    std::vector<Check> out;
    for (int nu : {0, 1, -1, 2, -2, 3, -3}) {
        for (double z : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            guarded(out, "special", fmt("K_%g(2*%g) integral vs series", nu, z), 1e-8, [&] {
                double ref = bessel_k(nu, 2.0 * z);
                return std::abs(bessel_k_integral(nu, z).real() - ref) / ref;
            });
        }
    }
    for (double x : {0.3, 1.0, 4.0}) {
        guarded(out, "special", fmt("K_1/2(%g) closed form", x), 1e-12, [&] {
            double ref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
            return std::abs(bessel_k(0.5, x) - ref) / ref;
        });
    }
    return out;
}

std::vector<Check> suite_eigen(const VerifyOptions &opt) {
    std::vector<Check> out;
    std::mt19937_64 rng(opt.seed);
    for (int modes = 1; modes <= 3; ++modes) {
        CVec a = random_alpha(rng, modes, 0.9);
        SpaceConfig sp = space_for(modes, amplitude(a), opt);
        auto coeffs = SpnrCoeffs::normalized(0.8, cplx(0.3, -0.5), a);
        TruncatedState s = spnr_bg_state(a, coeffs, sp);
        for (int i = 0; i < modes; ++i) {
            for (int j = i; j < modes; ++j) {
                guarded(out, "eigen", fmt("BG N=%g a_%g a_%g", modes, i, j), 1e-9,
                        [&] { return eigen_residual(s, {lower(i), lower(j)}, a[i] * a[j]); });
            }
        }
    }
    {
        CVec a = random_alpha(rng, 2, 0.9);
        SpaceConfig sp = space_for(2, amplitude(a), opt);
        const double phi = 0.7, psi = 1.9;
        auto inner_c = SpnrCoeffs::normalized(1.0, std::polar(1.0, phi), a);
        TruncatedState up = spnr_bg_state(a, inner_c, sp);
        TruncatedState down = spnr_bg_state(scaled(a, -kI), inner_c, sp);
        cplx dp = 1.0, dm = std::polar(1.0, psi - phi);
        double n2 = std::norm(dp) + std::norm(dm) + 2.0 * std::real(std::conj(dp) * dm * inner(up, down));
        dp /= std::sqrt(n2);
        dm /= std::sqrt(n2);
        TruncatedState s = sa_cat(a, inner_c, dp, dm, sp);
        for (int i = 0; i < 2; ++i) {
            for (int j = i; j < 2; ++j) {
                cplx lam = a[i] * a[j];
                guarded(out, "eigen", fmt("squared-amplitude cat (a_%g a_%g)^2", i, j), 1e-8, [&] {
                    return eigen_residual(s, {lower(i), lower(j), lower(i), lower(j)}, lam * lam);
                });
            }
        }
    }
    for (int modes = 1; modes <= 2; ++modes) {
        CVec a = random_alpha(rng, modes, 0.9);
        SpaceConfig sp = space_for(modes, amplitude(a), opt);
        TruncatedState s = multi_angle_state(a, {0.4, 1.3}, sp).normalized();
        for (int i = 0; i < modes; ++i) {
            cplx a4 = std::pow(a[i], 4);
            guarded(out, "eigen", fmt("2-angle N=%g a_%g^4", modes, i), 1e-8, [&] {
                return eigen_residual(s, {lower(i), lower(i), lower(i), lower(i)}, a4);
            });
        }
    }
    return out;
}

std::vector<Check> suite_unity(const VerifyOptions &opt) {
    std::vector<Check> out;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    UnityOptions uo;
    uo.tol = opt.tol;
    FamilySpec spec;
    guarded(out, "unity", "canonical N=1", opt.tol,
            [&] { return resolve_unity(spec, MeasureDensity::gaussian, uo).defect; });
    spec.family = UnityFamily::phi;
    for (int k = 0; k < 3; ++k) {
        spec.phi = ang(rng);
        guarded(out, "unity", fmt("phi-family varphi=%.6f", spec.phi), opt.tol,
                [&] { return resolve_unity(spec, MeasureDensity::gaussian, uo).defect; });
    }
    spec.family = UnityFamily::n_angle;
    spec.angles = {ang(rng)};
    guarded(out, "unity", fmt("1-angle phi1=%.6f", spec.angles[0]), opt.tol,
            [&] { return resolve_unity(spec, MeasureDensity::gaussian, uo).defect; });
    UnityOptions so = uo;
    so.tol = 1e-5;
    for (int l : {0, -1, -2}) {
        FamilySpec u;
        u.family = UnityFamily::upq_z;
        u.label = {1, 1, l};
        guarded(out, "unity", fmt("u(1,1) l=%g, F measure", l), 1e-5,
                [&] { return resolve_unity(u, MeasureDensity::upq_F, so).defect; });
        FamilySpec b;
        b.family = UnityFamily::bg_su11;
        b.k = 0.5 * (1.0 + std::abs(l));
        guarded(out, "unity", fmt("su(1,1) k=%g, BG measure", b.k), 1e-5,
                [&] { return resolve_unity(b, MeasureDensity::bg_kernel, so).defect; });
    }
    return out;
}

std::vector<Check> suite_theorem(const VerifyOptions &opt) {
    std::vector<Check> out;
    UnityOptions uo;
    uo.tol = opt.tol;
    for (int n = 1; n <= 3; ++n) {
        std::string name = "n=" + std::to_string(n);
        try {
            UnityReport r = theorem_a2_check(n, {}, opt.seed + n, 1, uo);
            name += " angles=(";
            for (std::size_t k = 0; k < r.angles.size(); ++k) name += (k ? "," : "") + fmt("%.6f", r.angles[k]);
            name += ")";
            out.push_back(below("theorem-a2", name, r.defect, opt.tol));
        } catch (const Error &e) {
            out.push_back({"theorem-a2", name + " [" + to_string(e.code()) + "]", NAN, opt.tol, false});
        }
    }
    return out;
}

std::vector<Check> suite_measures(const VerifyOptions &) {
    std::vector<Check> out;
    const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 4.0};
    for (auto [p, l] : {std::pair{1, 0}, std::pair{1, -3}, std::pair{2, -1}}) {
        guarded(out, "measures", fmt("F vs F' p=%g q=1 l=%g", p, l), 1e-6,
                [&] { return measure_compare(UpqLabel{p, 1, l}, grid); });
    }
    return out;
}

std::vector<Check> suite_robertson(const VerifyOptions &opt) {
    std::vector<Check> out;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        CVec a = random_alpha(rng, 2, 0.5 + 0.3 * trial);
        SpaceConfig sp = space_for(2, amplitude(a), opt);
        auto coeffs = SpnrCoeffs::normalized(cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), a);
        TruncatedState s = spnr_bg_state(a, coeffs, sp);
        RobertsonResult r = robertson_matrices(s, all_pair_quadratures(2));
        out.push_back(below("robertson", fmt("state %g det sigma vs det C", trial),
                            std::abs(r.det_sigma - r.det_c) / std::abs(r.det_c), 1e-8));
        double cov = 0.0;
        for (std::size_t k = 0; k + 1 < r.sigma.size(); k += 2) cov = std::max(cov, std::abs(r.sigma[k][k + 1]));
        out.push_back(below("robertson", fmt("state %g cov(X_ij,Y_ij)", trial), cov, 1e-9));
    }
    return out;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"special", "eigen",    "unity",     "theorem-a2",
                                                "measures", "robertson", "all"};
    return names;
}

std::vector<Check> run_suite(const std::string &suite, const VerifyOptions &opt) {
    if (suite == "special") return suite_special(opt);
    if (suite == "eigen") return suite_eigen(opt);
    if (suite == "unity") return suite_unity(opt);
    if (suite == "theorem-a2") return suite_theorem(opt);
    if (suite == "measures") return suite_measures(opt);
    if (suite == "robertson") return suite_robertson(opt);
    if (suite == "all") {
        std::vector<Check> all;
        for (const auto &name : suite_names()) {
            if (name == "all") continue;
            auto part = run_suite(name, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw Error(Errc::invalid_argument, "unknown suite '" + suite + "'");
}

}  // namespace bgcs
