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

#include <string>
#include <vector>

#include "bgcs/fock.hpp"
#include "bgcs/spnr.hpp"
#include "bgcs/types.hpp"

namespace bgcs {

/// Single-mode moments <a>, <a^+ a>, <a^2>, <a^+2 a^2>, <a^4>.
struct Moments {
    cplx a = 0.0;
    double ada = 0.0;
    cplx a2 = 0.0;
    double ad2a2 = 0.0;
    cplx a4 = 0.0;
};

/// Moments of mode i in |alpha, phi, psi>.
Moments moments_closed_form(const CatParams &params, int i);
double total_intensity_closed_form(const CatParams &params);

/// Moments of mode i in |alpha; phi> = cos(phi)|alpha> + i sin(phi)|-alpha>.
Moments phi_family_moments(const CVec &alpha, double phi, int i);

/// Moments of mode i in |alpha, phi> = Ntilde(|alpha> + e^{i phi}|-alpha>).
Moments cat_phi_moments(const CVec &alpha, double phi, int i);

/// Moments of mode i in the canonical coherent state |alpha>.
Moments coherent_moments(const CVec &alpha, int i);

Moments moments_from_state(const TruncatedState &s, int i);

struct PqVariance {
    double p;
    double q;
};

struct XyVariance {
    double x;
    double y;
};

PqVariance variance_pq(const Moments &m);
XyVariance variance_XY(const Moments &m);
PqVariance variance_pq(const CatParams &params, int i);
XyVariance variance_XY(const CatParams &params, int i);

/// |1 + (-1)^n e^{i phi}|^2.
double s_n(int n, double phi);
/// |1 + (-1)^n e^{i phi} + i^n e^{i psi} + (-i)^n e^{i(psi - phi)}|^2.
double s_n(int n, double phi, double psi);

struct Distribution {
    std::vector<double> p;
    double tail_mass = 0.0;  // 1 - sum(p), the mass beyond the reported range

    double mean() const;
    double variance() const;
};

Distribution poisson_distribution(double mean, int n_max);
Distribution photon_distribution_cat_phi(double r_tilde, double phi, int n_max = -1);
Distribution photon_distribution_cat_phi_psi(double r_tilde, double phi, double psi, int n_max = -1);

/// Total photon number distribution of a truncated state.
Distribution total_distribution(const TruncatedState &s);
/// Occupation distribution of one mode, other modes traced out.
Distribution marginal_distribution(const TruncatedState &s, int mode);
/// Distribution of one mode with the other modes held at fixed occupations (entry `mode` ignored).
Distribution conditional_distribution(const TruncatedState &s, int mode, const std::vector<int> &fixed);

double mandel_q(const Distribution &d);
double mandel_q(const Moments &m);

/// (n+1) p_{n-1} p_{n+1} - n p_n^2 for n = 1 .. size-2.
std::vector<double> l_n_sequence(const Distribution &d);

/// True if successive differences change sign more than once over the range that ends at the
/// last entry above rel_floor * max.
bool is_oscillating(const Distribution &d, double rel_floor = 1e-6);

enum class Family { canonical, phi_family, cat_phi, cat_phi_psi, n_angle, spnr_bg, sa_cat };
enum class NcClass { classical, weak, strong, undetermined };

const char *to_string(Family f);
const char *to_string(NcClass c);
Family family_from_string(const std::string &name);

/// Rule-based classification. For phi_family the angle is params.phi (the varphi parameter).
NcClass classify(Family family, const CatParams &params);

enum class QuadTarget { amplitude, squared_amplitude, pair };

struct QuadraturePair {
    QuadTarget target;
    int i;
    int j;  // used by pair only
};

struct RobertsonResult {
    std::vector<std::vector<double>> sigma;
    std::vector<std::vector<double>> c;
    double det_sigma;
    double det_c;
};

RobertsonResult robertson_matrices(const TruncatedState &s, const std::vector<QuadraturePair> &pairs);

/// All (X_ij, Y_ij) with i <= j.
std::vector<QuadraturePair> all_pair_quadratures(int modes);

struct StatsReport {
    std::vector<Moments> moments;
    std::vector<PqVariance> pq;
    std::vector<XyVariance> xy;
    std::vector<double> q_mode;
    double n_total = 0.0;
    Distribution distribution;
    double q_total = 0.0;
    bool q_near_zero = false;
    std::vector<double> l_n;
    NcClass cls = NcClass::undetermined;
};

/// Closed-form report for |alpha, phi, psi> (Family::cat_phi_psi) or |alpha, phi> (Family::cat_phi).
StatsReport stats_report(Family family, const CatParams &params);

}  // namespace bgcs
