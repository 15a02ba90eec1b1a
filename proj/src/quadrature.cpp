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

#include "bgcs/quadrature.hpp"

#include <cmath>

namespace bgcs {

void validate(const QuadratureSpec &spec) {
    if (spec.node_count < 2) {
        throw Error(Errc::invalid_argument, "QuadratureSpec needs node_count >= 2");
    }
    if (!(spec.rel_tol > 0.0)) {
        throw Error(Errc::invalid_argument, "QuadratureSpec needs rel_tol > 0");
    }
}

std::vector<Node> exp_radial_nodes(double r_lo, double r_hi, int count) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo) || count < 2) {
        throw Error(Errc::invalid_argument, "exp_radial_nodes: need 0 < r_lo < r_hi and count >= 2");
    }
    double t0 = std::log(r_lo);
    double h = (std::log(r_hi) - t0) / (count - 1);
    std::vector<Node> nodes(count);
    for (int i = 0; i < count; ++i) {
        double r = std::exp(t0 + i * h);
        double w = h * r;
        if (i == 0 || i == count - 1) w *= 0.5;
        nodes[i] = {r, w};
    }
    return nodes;
}

std::vector<Node> tanh_sinh_nodes(double a, double b, int count) {
    if (!(b > a) || count < 3) {
        throw Error(Errc::invalid_argument, "tanh_sinh_nodes: need a < b and count >= 3");
    }
    // |u| <= 3.2 puts the outermost abscissae within ~1e-17 of the ends.
    const double u_max = 3.2;
    double h = 2.0 * u_max / (count - 1);
    double half = 0.5 * (b - a);
    std::vector<Node> nodes;
    nodes.reserve(count);
    for (int i = 0; i < count; ++i) {
        double u = -u_max + i * h;
        double s = 0.5 * kPi * std::sinh(u);
        double ch = std::cosh(s);
        double w = h * half * 0.5 * kPi * std::cosh(u) / (ch * ch);
        // 1 + tanh(s) written without cancellation near the lower end.
        double e = std::exp(-2.0 * std::abs(s));
        double one_plus = s >= 0 ? 2.0 / (1.0 + e) : 2.0 * e / (1.0 + e);
        nodes.push_back({a + half * one_plus, w});
    }
    return nodes;
}

std::vector<Node> angular_nodes(int count) {
    if (count < 1) {
        throw Error(Errc::invalid_argument, "angular_nodes: count must be positive");
    }
    std::vector<Node> nodes(count);
    for (int j = 0; j < count; ++j) nodes[j] = {2.0 * kPi * j / count, 2.0 * kPi / count};
    return nodes;
}

std::vector<Node> radial_nodes(Scheme scheme, double r_lo, double r_hi, int count) {
    switch (scheme) {
        case Scheme::radial_exponential_weighted:
            return exp_radial_nodes(r_lo, r_hi, count);
        case Scheme::tanh_sinh:
            return tanh_sinh_nodes(0.0, r_hi, count);
        case Scheme::uniform_angular:
            break;
    }
    throw Error(Errc::invalid_argument, "radial_nodes: angular scheme requested for a radial rule");
}

}  // namespace bgcs
