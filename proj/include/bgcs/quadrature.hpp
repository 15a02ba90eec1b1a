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

#include <cmath>
#include <vector>

#include "bgcs/error.hpp"
#include "bgcs/types.hpp"

namespace bgcs {

enum class Scheme {
    radial_exponential_weighted,  // r = e^t, trapezoid in t
    uniform_angular,              // equally spaced phases, exact for trigonometric polynomials
    tanh_sinh,                    // double-exponential map of a finite interval
};

struct QuadratureSpec {
    int node_count = 64;
    Scheme scheme = Scheme::radial_exponential_weighted;
    double rel_tol = 1e-12;
};

void validate(const QuadratureSpec &spec);

struct Node {
    double x;
    double w;
};

/// Trapezoid nodes for r = e^t on [r_lo, r_hi], weights include dr/dt.
std::vector<Node> exp_radial_nodes(double r_lo, double r_hi, int count);

/// Tanh-sinh nodes on [a, b].
std::vector<Node> tanh_sinh_nodes(double a, double b, int count);

/// Phases 2*pi*j/count with weight 2*pi/count.
std::vector<Node> angular_nodes(int count);

std::vector<Node> radial_nodes(Scheme scheme, double r_lo, double r_hi, int count);

struct LineOptions {
    double rel_tol = 1e-12;
    int initial_intervals = 32;
    int max_levels = 16;
    double scan_lo = -80.0;
    double scan_hi = 80.0;
    double scan_step = 0.25;
    double cutoff = 1e-22;  // integrand magnitude relative to its peak where the range ends
    double walk_limit = 2000.0;
};

struct LineResult {
    double lo = 0.0;
    double hi = 0.0;
    int levels = 0;
    int evaluations = 0;
};

/// Integral over the real line of a smooth function that decays at least
/// exponentially in both directions. The support is located by a coarse scan,
/// then the trapezoid step is halved until successive sums agree.
template <class F>
auto integrate_line(F &&g, const LineOptions &opt, LineResult *info = nullptr) -> decltype(g(0.0)) {
    using T = decltype(g(0.0));
    int evals = 0;
    auto eval = [&](double t) -> T {
        ++evals;
        T v = g(t);
        if (!std::isfinite(std::abs(v))) {
            throw Error(Errc::quadrature, "integrand is not finite");
        }
        return v;
    };

    double peak = 0.0;
    double t_peak = 0.0;
    for (double t = opt.scan_lo; t <= opt.scan_hi; t += opt.scan_step) {
        double m = std::abs(eval(t));
        if (m > peak) {
            peak = m;
            t_peak = t;
        }
    }
    if (peak == 0.0) {
        if (info) *info = LineResult{0.0, 0.0, 0, evals};
        return T(0);
    }

    double step = 0.5;
    double hi = t_peak;
    int quiet = 0;
    while (quiet < 2) {
        hi += step;
        if (hi - t_peak > opt.walk_limit) {
            throw Error(Errc::quadrature, "integrand does not decay to the right");
        }
        quiet = std::abs(eval(hi)) < opt.cutoff * peak ? quiet + 1 : 0;
    }
    double lo = t_peak;
    quiet = 0;
    while (quiet < 2) {
        lo -= step;
        if (t_peak - lo > opt.walk_limit) {
            throw Error(Errc::quadrature, "integrand does not decay to the left");
        }
        quiet = std::abs(eval(lo)) < opt.cutoff * peak ? quiet + 1 : 0;
    }

    int n = std::max(opt.initial_intervals, 4);
    double h = (hi - lo) / n;
    T sum = 0.5 * (eval(lo) + eval(hi));
    for (int i = 1; i < n; ++i) sum += eval(lo + i * h);
    T total = sum * h;

    for (int level = 1; level <= opt.max_levels; ++level) {
        T mid = 0;
        for (int i = 0; i < n; ++i) mid += eval(lo + (i + 0.5) * h);
        sum += mid;
        n *= 2;
        h *= 0.5;
        T next = sum * h;
        double diff = std::abs(next - total);
        total = next;
        if (level >= 2 && diff <= opt.rel_tol * std::abs(total)) {
            if (info) *info = LineResult{lo, hi, level, evals};
            return total;
        }
    }
    throw Error(Errc::quadrature, "trapezoid refinement did not converge");
}

/// Same integral after the substitution t = sinh(u).
template <class F>
auto integrate_line_sinh(F &&g, const LineOptions &opt, LineResult *info = nullptr) -> decltype(g(0.0)) {
    LineOptions o = opt;
    o.scan_lo = std::asinh(opt.scan_lo);
    o.scan_hi = std::asinh(opt.scan_hi);
    o.scan_step = 0.01;
    o.walk_limit = 8.0;
    auto gu = [&](double u) { return g(std::sinh(u)) * std::cosh(u); };
    return integrate_line(gu, o, info);
}

}  // namespace bgcs
