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

#include <cstddef>
#include <vector>

#include "bgcs/types.hpp"

namespace bgcs {

/// N modes, occupations 0..n_max in each.
class SpaceConfig {
   public:
    SpaceConfig(int modes, int n_max);

    int modes() const { return modes_; }
    int n_max() const { return n_max_; }
    std::size_t dim() const { return dim_; }
    std::size_t stride(int mode) const { return strides_[mode]; }

    bool operator==(const SpaceConfig &other) const {
        return modes_ == other.modes_ && n_max_ == other.n_max_;
    }

   private:
    int modes_;
    int n_max_;
    std::size_t dim_;
    std::vector<std::size_t> strides_;
};

/// Smallest per-mode cutoff that keeps the coherent-state tail below ~1e-12.
int adaptive_cutoff(double amplitude);
SpaceConfig adaptive_space(int modes, double amplitude);

/// Dense amplitudes over the truncated basis, first mode most significant.
class TruncatedState {
   public:
    explicit TruncatedState(const SpaceConfig &space);
    TruncatedState(const SpaceConfig &space, CVec coeffs);

    const SpaceConfig &space() const { return space_; }
    std::size_t size() const { return c_.size(); }
    cplx &operator[](std::size_t k) { return c_[k]; }
    const cplx &operator[](std::size_t k) const { return c_[k]; }
    const CVec &coeffs() const { return c_; }

    int occupation(std::size_t flat, int mode) const;
    int total_occupation(std::size_t flat) const;
    std::vector<int> occupations(std::size_t flat) const;
    std::size_t index(const std::vector<int> &n) const;

    double norm2() const;
    double norm() const;
    TruncatedState normalized() const;

    /// Mass dropped by creation operators at the cutoff.
    double truncation_loss() const { return loss_; }
    void add_truncation_loss(double mass) { loss_ += mass; }

    TruncatedState &operator+=(const TruncatedState &o);
    TruncatedState &operator-=(const TruncatedState &o);
    TruncatedState &operator*=(cplx s);

   private:
    SpaceConfig space_;
    CVec c_;
    double loss_ = 0.0;
};

TruncatedState operator+(TruncatedState a, const TruncatedState &b);
TruncatedState operator-(TruncatedState a, const TruncatedState &b);
TruncatedState operator*(cplx s, TruncatedState a);

TruncatedState coherent_state(const CVec &alpha, const SpaceConfig &space);
TruncatedState fock_state(const std::vector<int> &n, const SpaceConfig &space);

TruncatedState annihilate(const TruncatedState &s, int mode);
TruncatedState create(const TruncatedState &s, int mode);
TruncatedState apply_pair_lowering(const TruncatedState &s, int i, int j);
TruncatedState apply_number(const TruncatedState &s, int mode);

cplx inner(const TruncatedState &a, const TruncatedState &b);

enum class Ladder { a, adag };

struct LadderOp {
    Ladder kind;
    int mode;
};

inline LadderOp lower(int mode) { return {Ladder::a, mode}; }
inline LadderOp raise(int mode) { return {Ladder::adag, mode}; }

using Word = std::vector<LadderOp>;

/// Applies the word as written (rightmost operator first) to |s>.
TruncatedState apply_word(const TruncatedState &s, const Word &word);

/// <s| word |s>, word length at most 4.
cplx expectation(const TruncatedState &s, const Word &word);

TruncatedState project_parity(const TruncatedState &s, bool even);

/// ||(A - lambda)|s>|| for A given as a word.
double eigen_residual(const TruncatedState &s, const Word &word, cplx lambda);

}  // namespace bgcs
