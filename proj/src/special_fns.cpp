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

#include "bgcs/special_fns.hpp"

#include <cmath>
#include <string>

#include "bgcs/error.hpp"

namespace bgcs {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

template <class T>
T hyp0f1_series(double c, T x, const SeriesControl &ctl) {
    validate(ctl);
    if (is_nonpositive_integer(c)) {
        throw Error(Errc::pole, "hyp0f1: c is a nonpositive integer");
    }
    T term = 1.0;
    T sum = 1.0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        term *= x / ((c + n) * (n + 1.0));
        sum += term;
        bool shrinking = std::abs(x) < std::abs(c + n + 1.0) * (n + 2.0);
        if (shrinking && std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            return sum;
        }
    }
    throw Error(Errc::convergence, "hyp0f1: series did not converge within max_terms");
}

// 1/Gamma(1+x) = sum c_k x^k, used where the Temme coefficients cancel.
constexpr double kRg1 = 0.57721566490153286;
constexpr double kRg2 = -0.65587807152025388;
constexpr double kRg3 = -0.042002635034095236;
constexpr double kRg4 = 0.16653861138229149;
constexpr double kRg5 = -0.042197734555544337;

struct TemmeGammas {
    double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
    TemmeGammas g{};
    g.gampl = 1.0 / std::tgamma(1.0 + mu);
    g.gammi = 1.0 / std::tgamma(1.0 - mu);
    if (std::abs(mu) > 1e-3) {
        g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
        g.gam2 = 0.5 * (g.gammi + g.gampl);
    } else {
        double m2 = mu * mu;
        g.gam1 = -(kRg1 + m2 * (kRg3 + m2 * kRg5));
        g.gam2 = 1.0 + m2 * (kRg2 + m2 * kRg4);
    }
    return g;
}

}  // namespace

void validate(const SeriesControl &ctl) {
    if (!(ctl.rel_tol > 0.0) || ctl.max_terms < 1) {
        throw Error(Errc::invalid_argument, "SeriesControl needs rel_tol > 0 and max_terms >= 1");
    }
}

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) {
        throw Error(Errc::pole, "gamma_fn: pole at " + std::to_string(x));
    }
    return std::tgamma(x);
}

cplx gamma_fn(cplx z) {
    if (z.imag() == 0.0) {
        return gamma_fn(z.real());
    }
    if (z.real() < 0.5) {
        return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));
    }
    // Lanczos, g = 7, nine terms.
    static constexpr double p[] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    z -= 1.0;
    cplx acc = p[0];
    for (int i = 1; i < 9; ++i) acc += p[i] / (z + double(i));
    cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double hyp0f1(double c, double x, const SeriesControl &ctl) {
    if (x < 0.0) {
        throw Error(Errc::domain, "hyp0f1: x must be nonnegative");
    }
    return hyp0f1_series(c, x, ctl);
}

cplx hyp0f1(double c, cplx x, const SeriesControl &ctl) {
    return hyp0f1_series(c, x, ctl);
}

double bessel_i(double nu, double x, const SeriesControl &ctl) {
    validate(ctl);
    if (x < 0.0) {
        throw Error(Errc::domain, "bessel_i: x must be nonnegative");
    }
    if (nu < 0.0 && nu == std::floor(nu)) {
        nu = -nu;
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw Error(Errc::domain, "bessel_i: unbounded at x = 0 for negative order");
    }
    double half = 0.5 * x;
    double q = half * half;
    double term = std::pow(half, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int k = 0; k < ctl.max_terms; ++k) {
        term *= q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        bool shrinking = q < (k + 2.0) * std::abs(nu + k + 2.0);
        if (shrinking && std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            return sum;
        }
    }
    throw Error(Errc::convergence, "bessel_i: series did not converge within max_terms");
}

double bessel_k(double nu, double x, const SeriesControl &ctl) {
    validate(ctl);
    if (!(x > 0.0)) {
        throw Error(Errc::domain, "bessel_k: x must be positive");
    }
    nu = std::abs(nu);
    const int nl = int(nu + 0.5);
    const double mu = nu - nl;
    const double eps = ctl.rel_tol;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    double rkmu = 0.0;
    double rk1 = 0.0;
    if (x <= 2.0) {
        TemmeGammas g = temme_gammas(mu);
        double x2 = 0.5 * x;
        double pimu = kPi * mu;
        double fact = std::abs(pimu) < 1e-15 ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = mu * d;
        double fact2 = std::abs(e) < 1e-15 ? 1.0 : std::sinh(e) / e;
        double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / g.gampl;
        double q = 0.5 / (e * g.gammi);
        double c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        bool done = false;
        for (int i = 1; i <= ctl.max_terms; ++i) {
            ff = (i * ff + p + q) / (i * double(i) - mu * mu);
            c *= d / i;
            p /= i - mu;
            q /= i + mu;
            double del = c * ff;
            sum += del;
            sum1 += c * (p - i * ff);
            if (std::abs(del) < std::abs(sum) * eps) {
                done = true;
                break;
            }
        }
        if (!done) {
            throw Error(Errc::convergence, "bessel_k: Temme series did not converge");
        }
        rkmu = sum;
        rk1 = sum1 * xi2;
    } else {
        double b = 2.0 * (1.0 + x);
        double d = 1.0 / b;
        double h = d;
        double delh = d;
        double q1 = 0.0;
        double q2 = 1.0;
        double a1 = 0.25 - mu * mu;
        double q = a1;
        double c = a1;
        double a = -a1;
        double s = 1.0 + q * delh;
        bool done = false;
        for (int i = 2; i <= ctl.max_terms; ++i) {
            a -= 2.0 * (i - 1);
            c = -a * c / i;
            double qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            double dels = q * delh;
            s += dels;
            if (std::abs(dels / s) < eps) {
                done = true;
                break;
            }
        }
        if (!done) {
            throw Error(Errc::convergence, "bessel_k: continued fraction did not converge");
        }
        h *= a1;
        rkmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
        rk1 = rkmu * (mu + x + 0.5 - h) * xi;
    }
    for (int i = 1; i <= nl; ++i) {
        double next = (mu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = next;
    }
    return rkmu;
}

cplx bessel_k_integral(int nu, cplx z, const QuadratureSpec &quad) {
    validate(quad);
    if (!(z.real() > 0.0)) {
        throw Error(Errc::domain, "bessel_k_integral: Re z must be positive");
    }
    // With x = z e^t the integrand times dx/dt is 1/2 exp(nu t - z e^t - z e^-t)
    // once the powers of z cancel.
    auto g = [&](double t) -> cplx {
        return 0.5 * std::exp(double(nu) * t - z * (std::exp(t) + std::exp(-t)));
    };
    LineOptions opt;
    opt.rel_tol = quad.rel_tol;
    opt.initial_intervals = quad.node_count;
    opt.scan_lo = -40.0;
    opt.scan_hi = 40.0;
    if (quad.scheme == Scheme::tanh_sinh) {
        return integrate_line_sinh(g, opt);
    }
    if (quad.scheme == Scheme::uniform_angular) {
        throw Error(Errc::invalid_argument, "bessel_k_integral: angular scheme has no meaning here");
    }
    return integrate_line(g, opt);
}

}  // namespace bgcs
