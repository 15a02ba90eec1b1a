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

#include "bgcs/fock.hpp"

#include <cmath>
#include <string>

#include "bgcs/error.hpp"

namespace bgcs {

namespace {

constexpr std::size_t kMaxDim = std::size_t(1) << 24;

void require_same_space(const TruncatedState &a, const TruncatedState &b) {
    if (!(a.space() == b.space())) {
        throw Error(Errc::space_mismatch, "states live in different truncated spaces");
    }
}

void require_mode(const SpaceConfig &space, int mode) {
    if (mode < 0 || mode >= space.modes()) {
        throw Error(Errc::out_of_range, "mode index " + std::to_string(mode) + " out of range");
    }
}

}  // namespace

SpaceConfig::SpaceConfig(int modes, int n_max) : modes_(modes), n_max_(n_max), dim_(1) {
    if (modes < 1 || n_max < 1) {
        throw Error(Errc::invalid_argument, "SpaceConfig needs modes >= 1 and n_max >= 1");
    }
    strides_.assign(modes, 1);
    for (int i = modes - 1; i >= 0; --i) {
        strides_[i] = dim_;
        if (dim_ > kMaxDim / std::size_t(n_max + 1)) {
            throw Error(Errc::invalid_argument, "SpaceConfig: basis dimension too large");
        }
        dim_ *= std::size_t(n_max + 1);
    }
}

int adaptive_cutoff(double amplitude) {
    double a = std::abs(amplitude);
    return int(std::ceil(a * a + 8.0 * a + 15.0));
}

SpaceConfig adaptive_space(int modes, double amplitude) {
    return SpaceConfig(modes, adaptive_cutoff(amplitude));
}

TruncatedState::TruncatedState(const SpaceConfig &space) : space_(space), c_(space.dim()) {
}

TruncatedState::TruncatedState(const SpaceConfig &space, CVec coeffs) : space_(space), c_(std::move(coeffs)) {
    if (c_.size() != space_.dim()) {
        throw Error(Errc::space_mismatch, "coefficient count does not match the space dimension");
    }
}

int TruncatedState::occupation(std::size_t flat, int mode) const {
    return int((flat / space_.stride(mode)) % std::size_t(space_.n_max() + 1));
}

int TruncatedState::total_occupation(std::size_t flat) const {
    int t = 0;
    for (int m = 0; m < space_.modes(); ++m) t += occupation(flat, m);
    return t;
}

std::vector<int> TruncatedState::occupations(std::size_t flat) const {
    std::vector<int> n(space_.modes());
    for (int m = 0; m < space_.modes(); ++m) n[m] = occupation(flat, m);
    return n;
}

std::size_t TruncatedState::index(const std::vector<int> &n) const {
    if (int(n.size()) != space_.modes()) {
        throw Error(Errc::space_mismatch, "occupation vector has the wrong length");
    }
    std::size_t k = 0;
    for (int m = 0; m < space_.modes(); ++m) {
        if (n[m] < 0 || n[m] > space_.n_max()) {
            throw Error(Errc::out_of_range, "occupation outside 0..n_max");
        }
        k += std::size_t(n[m]) * space_.stride(m);
    }
    return k;
}

double TruncatedState::norm2() const {
    double s = 0.0;
    for (const auto &v : c_) s += std::norm(v);
    return s;
}

double TruncatedState::norm() const {
    return std::sqrt(norm2());
}

TruncatedState TruncatedState::normalized() const {
    double n2 = norm2();
    if (!(n2 > 1e-300)) {
        throw Error(Errc::degenerate, "cannot normalize the zero vector");
    }
    TruncatedState out = *this;
    out *= 1.0 / std::sqrt(n2);
    return out;
}

TruncatedState &TruncatedState::operator+=(const TruncatedState &o) {
    require_same_space(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    loss_ += o.loss_;
    return *this;
}

TruncatedState &TruncatedState::operator-=(const TruncatedState &o) {
    require_same_space(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    loss_ += o.loss_;
    return *this;
}

TruncatedState &TruncatedState::operator*=(cplx s) {
    for (auto &v : c_) v *= s;
    return *this;
}

TruncatedState operator+(TruncatedState a, const TruncatedState &b) {
    a += b;
    return a;
}

TruncatedState operator-(TruncatedState a, const TruncatedState &b) {
    a -= b;
    return a;
}

TruncatedState operator*(cplx s, TruncatedState a) {
    a *= s;
    return a;
}

TruncatedState coherent_state(const CVec &alpha, const SpaceConfig &space) {
    if (int(alpha.size()) != space.modes()) {
        throw Error(Errc::space_mismatch, "alpha length differs from the mode count");
    }
    double r2 = 0.0;
    for (const auto &a : alpha) r2 += std::norm(a);
    if (space.n_max() < adaptive_cutoff(std::sqrt(r2))) {
        throw Error(Errc::cutoff, "n_max " + std::to_string(space.n_max()) + " is below the adaptive cutoff " +
                                      std::to_string(adaptive_cutoff(std::sqrt(r2))));
    }
    const int nm = space.n_max();
    std::vector<CVec> per_mode(alpha.size(), CVec(nm + 1));
    for (std::size_t m = 0; m < alpha.size(); ++m) {
        per_mode[m][0] = std::exp(-0.5 * std::norm(alpha[m]));
        for (int n = 1; n <= nm; ++n) per_mode[m][n] = per_mode[m][n - 1] * alpha[m] / std::sqrt(double(n));
    }
    TruncatedState s(space);
    for (std::size_t k = 0; k < s.size(); ++k) {
        cplx v = 1.0;
        for (int m = 0; m < space.modes(); ++m) v *= per_mode[m][s.occupation(k, m)];
        s[k] = v;
    }
    return s;
}

TruncatedState fock_state(const std::vector<int> &n, const SpaceConfig &space) {
    TruncatedState s(space);
    s[s.index(n)] = 1.0;
    return s;
}

TruncatedState annihilate(const TruncatedState &s, int mode) {
    require_mode(s.space(), mode);
    TruncatedState out(s.space());
    out.add_truncation_loss(s.truncation_loss());
    const std::size_t st = s.space().stride(mode);
    for (std::size_t k = 0; k < s.size(); ++k) {
        int n = s.occupation(k, mode);
        if (n > 0) out[k - st] += std::sqrt(double(n)) * s[k];
    }
    return out;
}

TruncatedState create(const TruncatedState &s, int mode) {
    require_mode(s.space(), mode);
    TruncatedState out(s.space());
    const std::size_t st = s.space().stride(mode);
    const int nm = s.space().n_max();
    double dropped = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        int n = s.occupation(k, mode);
        if (n < nm) {
            out[k + st] += std::sqrt(n + 1.0) * s[k];
        } else {
            dropped += (n + 1.0) * std::norm(s[k]);
        }
    }
    out.add_truncation_loss(s.truncation_loss() + dropped);
    return out;
}

TruncatedState apply_pair_lowering(const TruncatedState &s, int i, int j) {
    return annihilate(annihilate(s, j), i);
}

TruncatedState apply_number(const TruncatedState &s, int mode) {
    require_mode(s.space(), mode);
    TruncatedState out = s;
    for (std::size_t k = 0; k < s.size(); ++k) out[k] *= double(s.occupation(k, mode));
    return out;
}

cplx inner(const TruncatedState &a, const TruncatedState &b) {
    require_same_space(a, b);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

TruncatedState apply_word(const TruncatedState &s, const Word &word) {
    TruncatedState out = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        out = it->kind == Ladder::a ? annihilate(out, it->mode) : create(out, it->mode);
    }
    return out;
}

cplx expectation(const TruncatedState &s, const Word &word) {
    if (word.size() > 4) {
        throw Error(Errc::invalid_argument, "expectation: words longer than 4 are not supported");
    }
    return inner(s, apply_word(s, word));
}

TruncatedState project_parity(const TruncatedState &s, bool even) {
    TruncatedState out(s.space());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if ((s.total_occupation(k) % 2 == 0) == even) out[k] = s[k];
    }
    return out;
}

double eigen_residual(const TruncatedState &s, const Word &word, cplx lambda) {
    TruncatedState r = apply_word(s, word);
    r -= lambda * s;
    return r.norm();
}

}  // namespace bgcs
