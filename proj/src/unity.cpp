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

#include "bgcs/unity.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "bgcs/error.hpp"
#include "bgcs/quadrature.hpp"
#include "bgcs/spnr.hpp"
#include "bgcs/su11.hpp"

namespace bgcs {

namespace {

using Occ = std::vector<int>;

int charge(const Occ &n, int p) {
    int c = 0;
    for (int m = 0; m < int(n.size()); ++m) c += m < p ? n[m] : -n[m];
    return c;
}

void check_measure(const FamilySpec &spec, MeasureDensity measure) {
    bool ok = false;
    switch (spec.family) {
        case UnityFamily::canonical:
        case UnityFamily::phi:
        case UnityFamily::n_angle:
        case UnityFamily::upq_alpha:
            ok = measure == MeasureDensity::gaussian;
            break;
        case UnityFamily::bg_su11:
            ok = measure == MeasureDensity::bg_kernel;
            break;
        case UnityFamily::upq_z:
            ok = measure == MeasureDensity::upq_F || measure == MeasureDensity::upq_F_prime;
            break;
    }
    if (!ok) {
        throw Error(Errc::invalid_argument, "measure density does not belong to this family");
    }
}

/// Basis of the checked subspace together with the number of integration variables.
struct Layout {
    std::vector<Occ> basis;
    int vars;
};

Layout make_layout(const FamilySpec &spec, int n_check) {
    Layout lay;
    if (spec.family == UnityFamily::bg_su11) {
        lay.vars = 1;
        for (int n = 0; n <= n_check; ++n) lay.basis.push_back({n});
        return lay;
    }
    if (spec.family == UnityFamily::upq_z) {
        const UpqLabel &lb = spec.label;
        if (lb.p != 1 || lb.q != 1) {
            throw Error(Errc::invalid_argument, "the z-chart unity check is implemented for u(1,1)");
        }
        lay.vars = 1;
        for (int n = 0; n <= n_check; ++n) {
            if (n - lb.l >= 0) lay.basis.push_back({n, n - lb.l});
        }
        if (lay.basis.empty()) throw Error(Errc::empty_sector, "no basis state in the checked range");
        return lay;
    }
    const int modes = spec.family == UnityFamily::upq_alpha ? spec.label.modes() : spec.modes;
    if (modes < 1) throw Error(Errc::invalid_argument, "mode count must be positive");
    lay.vars = modes;
    Occ n(modes, 0);
    while (true) {
        if (spec.family != UnityFamily::upq_alpha || charge(n, spec.label.p) == spec.label.l) lay.basis.push_back(n);
        int m = modes - 1;
        while (m >= 0 && n[m] == n_check) n[m--] = 0;
        if (m < 0) break;
        ++n[m];
    }
    if (lay.basis.empty()) throw Error(Errc::empty_sector, "no basis state in the checked range");
    return lay;
}

double default_radius(const FamilySpec &spec, int n_check) {
    if (spec.family == UnityFamily::bg_su11 || spec.family == UnityFamily::upq_z) {
        return 3.0 * (n_check + std::abs(spec.label.l) + 2.0 * spec.k) + 30.0;
    }
    return std::sqrt(double(n_check)) + 8.0;
}

/// Coefficients <n|psi(x)> for one node, plus the angle-free base coefficients.
struct Evaluator {
    const FamilySpec &spec;
    const Layout &lay;
    std::vector<double> log_fact;

    Evaluator(const FamilySpec &s, const Layout &l, int n_top) : spec(s), lay(l), log_fact(n_top + 1) {
        for (int n = 0; n <= n_top; ++n) log_fact[n] = std::lgamma(n + 1.0);
    }

    void operator()(const CVec &x, CVec &v, CVec &base) const {
        const std::size_t d = lay.basis.size();
        switch (spec.family) {
            case UnityFamily::canonical:
            case UnityFamily::phi:
            case UnityFamily::n_angle:
            case UnityFamily::upq_alpha: {
                double r2 = 0.0;
                for (const auto &a : x) r2 += std::norm(a);
                for (std::size_t b = 0; b < d; ++b) {
                    const Occ &n = lay.basis[b];
                    cplx c = std::exp(-0.5 * r2);
                    int tot = 0;
                    for (int m = 0; m < int(n.size()); ++m) {
                        c *= std::pow(x[m], n[m]) * std::exp(-0.5 * log_fact[n[m]]);
                        tot += n[m];
                    }
                    base[b] = c;
                    if (spec.family == UnityFamily::phi) {
                        c *= cplx(std::cos(spec.phi), tot % 2 == 0 ? std::sin(spec.phi) : -std::sin(spec.phi));
                    } else if (spec.family == UnityFamily::n_angle) {
                        c *= multi_angle_factor(spec.angles, tot);
                    }
                    v[b] = c;
                }
                break;
            }
            case UnityFamily::bg_su11:
                for (std::size_t b = 0; b < d; ++b) {
                    int n = lay.basis[b][0];
                    v[b] = std::pow(x[0], n) * std::exp(-0.5 * (log_fact[n] + std::lgamma(2.0 * spec.k + n)));
                    base[b] = v[b];
                }
                break;
            case UnityFamily::upq_z:
                for (std::size_t b = 0; b < d; ++b) {
                    const Occ &n = lay.basis[b];
                    v[b] = std::pow(x[0], n[0]) * std::exp(-0.5 * (log_fact[n[0]] + log_fact[n[1]]));
                    base[b] = v[b];
                }
                break;
        }
    }
};

/// Radial weight including the Jacobian r and the measure density.
std::vector<Node> weighted_radial(const FamilySpec &spec, MeasureDensity measure, double r_max) {
    std::vector<Node> nodes = tanh_sinh_nodes(0.0, r_max, spec.radial_count);
    std::vector<Node> out;
    out.reserve(nodes.size());
    for (const auto &nd : nodes) {
        if (!(nd.x > 0.0)) continue;
        double rho = 0.0;
        switch (measure) {
            case MeasureDensity::gaussian:
                rho = 1.0 / kPi;
                break;
            case MeasureDensity::bg_kernel:
                rho = bg_measure_density(nd.x, spec.k);
                break;
            case MeasureDensity::upq_F:
                rho = measure_F(nd.x, 0.0, spec.label);
                break;
            case MeasureDensity::upq_F_prime:
                rho = measure_F_prime(nd.x, spec.label);
                break;
        }
        if (!std::isfinite(rho)) {
            throw Error(Errc::quadrature, "measure density is not finite at r = " + std::to_string(nd.x));
        }
        out.push_back({nd.x, nd.w * nd.x * rho});
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd assemble_gram(const FamilySpec &spec, MeasureDensity measure, const UnityOptions &opt,
                               UnityReport *report) {
    if (opt.n_check < 0) throw Error(Errc::invalid_argument, "n_check must be nonnegative");
    if (spec.radial_count < 3) throw Error(Errc::invalid_argument, "radial_count must be at least 3");
    if (spec.family == UnityFamily::bg_su11 && !(spec.k > 0.0)) {
        throw Error(Errc::invalid_argument, "Bargmann index must be positive");
    }
    check_measure(spec, measure);
    const Layout lay = make_layout(spec, opt.n_check);
    const std::size_t d = lay.basis.size();
    const double r_max = spec.r_max > 0.0 ? spec.r_max : default_radius(spec, opt.n_check);
    const int m_ang = spec.angular_count > 0 ? spec.angular_count : 2 * opt.n_check + 2;
    const std::vector<Node> rad = weighted_radial(spec, measure, r_max);
    const std::vector<Node> ang = angular_nodes(m_ang);

    const std::size_t per_var = rad.size() * ang.size();
    std::size_t total = 1;
    for (int v = 0; v < lay.vars; ++v) total *= per_var;

    int n_top = opt.n_check + std::abs(spec.label.l);
    Evaluator eval(spec, lay, n_top);

    const int threads = opt.parallel ? omp_get_max_threads() : 1;
    std::vector<Eigen::MatrixXcd> partial(threads, Eigen::MatrixXcd::Zero(d, d));
    std::vector<Eigen::VectorXd> partial_base(threads, Eigen::VectorXd::Zero(d));

#pragma omp parallel num_threads(threads) if (opt.parallel)
    {
        const int tid = omp_get_thread_num();
        CVec x(lay.vars), v(d), base(d);
        Eigen::MatrixXcd &g = partial[tid];
        Eigen::VectorXd &gb = partial_base[tid];
#pragma omp for schedule(static)
        for (std::size_t t = 0; t < total; ++t) {
            std::size_t rem = t;
            double w = 1.0;
            for (int var = 0; var < lay.vars; ++var) {
                std::size_t idx = rem % per_var;
                rem /= per_var;
                const Node &r = rad[idx / ang.size()];
                const Node &a = ang[idx % ang.size()];
                x[var] = std::polar(r.x, a.x);
                w *= r.w * a.w;
            }
            eval(x, v, base);
            for (std::size_t j = 0; j < d; ++j) {
                cplx cj = w * std::conj(v[j]);
                for (std::size_t i = 0; i < d; ++i) g(i, j) += v[i] * cj;
                gb[j] += w * std::norm(base[j]);
            }
        }
    }
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(d, d);
    Eigen::VectorXd gbase = Eigen::VectorXd::Zero(d);
    for (int t = 0; t < threads; ++t) {
        gram += partial[t];
        gbase += partial_base[t];
    }
    if (gbase.minCoeff() < 1.0 - 10.0 * opt.tol) {
        throw Error(Errc::domain_too_small, "radial domain r <= " + std::to_string(r_max) +
                                                " misses mass: smallest moment " + std::to_string(gbase.minCoeff()));
    }
    if (report) {
        report->dim = int(d);
        report->nodes = total;
        report->r_max = r_max;
    }
    return gram;
}

UnityReport resolve_unity(const FamilySpec &spec, MeasureDensity measure, const UnityOptions &opt) {
    UnityReport rep;
    Eigen::MatrixXcd g = assemble_gram(spec, measure, opt, &rep);
    rep.diag_min = 1e300;
    rep.diag_max = -1e300;
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            double dev = std::abs(g(i, j) - (i == j ? 1.0 : 0.0));
            rep.defect = std::max(rep.defect, dev);
            if (i == j) {
                rep.diag_min = std::min(rep.diag_min, g(i, i).real());
                rep.diag_max = std::max(rep.diag_max, g(i, i).real());
            } else {
                rep.offdiag_max = std::max(rep.offdiag_max, std::abs(g(i, j)));
            }
        }
    }
    rep.angles = spec.angles;
    return rep;
}

UnityReport theorem_a2_check(int n, std::vector<double> angles, std::uint64_t seed, int modes,
                             const UnityOptions &opt) {
    if (n < 1) throw Error(Errc::invalid_argument, "theorem_a2_check needs n >= 1");
    if (angles.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
        for (int k = 0; k < n; ++k) angles.push_back(uni(rng));
    } else if (int(angles.size()) != n) {
        throw Error(Errc::invalid_argument, "angle count differs from n");
    }
    FamilySpec spec;
    spec.family = UnityFamily::n_angle;
    spec.modes = modes;
    spec.angles = angles;
    if (modes > 1) spec.radial_count = 161;
    UnityReport rep = resolve_unity(spec, MeasureDensity::gaussian, opt);
    rep.seed = seed;
    return rep;
}

}  // namespace bgcs
