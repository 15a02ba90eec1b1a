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

#include "bgcs/quadrature.hpp"
#include "bgcs/types.hpp"

namespace bgcs {

struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 500;
};

void validate(const SeriesControl &ctl);

double gamma_fn(double x);
cplx gamma_fn(cplx z);

/// 0F1(; c; x) by direct summation.
double hyp0f1(double c, double x, const SeriesControl &ctl = {});
cplx hyp0f1(double c, cplx x, const SeriesControl &ctl = {});

/// I_nu(x) from the ascending series.
double bessel_i(double nu, double x, const SeriesControl &ctl = {});

/// K_nu(x), x > 0. Temme's series for x <= 2, Steed's continued fraction
/// above, then forward recurrence in the order.
double bessel_k(double nu, double x, const SeriesControl &ctl = {});

/// K_nu(2z) = 1/2 z^{-nu} int_0^inf x^{nu-1} exp(-(x + z^2/x)) dx, evaluated by
/// quadrature along the ray x = z e^t (the real axis when z is real).
cplx bessel_k_integral(int nu, cplx z, const QuadratureSpec &quad = {});

}  // namespace bgcs
