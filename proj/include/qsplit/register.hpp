// Copyright 2026 The qsplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsplit/common.hpp"
#include "qsplit/operator.hpp"

namespace qsplit {

// Mixed-radix indexing. Position 0 is the most significant digit, so the
// flat index of |j_0 j_1 ... j_{n-1}> is sum_p j_p * d^(n-1-p).

/// d^n, throwing CapExceeded when it exceeds cap (or overflows).
std::size_t checked_length(int d, int n, std::size_t cap = kDefaultAmplitudeCap);

std::size_t index_of_digits(int d, std::span<const int> digits);
Digits digits_of_index(int d, int n, std::size_t flat);

/// d^(n-1-position): distance between neighbouring digit values at position.
std::size_t stride_of(int d, int n, int position);

/// Pure state of n qudits of dimension d.
class QuditRegister {
 public:
  /// Normalizes amps. Rejects the zero vector and wrong lengths.
  static QuditRegister from_amplitudes(int d, int n, std::vector<cx> amps,
                                       std::size_t cap = kDefaultAmplitudeCap);

  /// The zero-qudit register left behind after every qudit is measured.
  static QuditRegister scalar(int d);

  int dim() const { return d_; }
  int qudits() const { return n_; }
  std::size_t length() const { return amps_.size(); }

  std::span<const cx> amplitudes() const { return amps_; }
  /// Raw access for in-place kernels. Callers keep the norm intact.
  std::span<cx> data() { return amps_; }

  cx operator[](std::size_t flat) const { return amps_[flat]; }
  cx amplitude(std::span<const int> digits) const;

  double norm_squared() const;

  /// |this> ⊗ |other>, this occupying the leading positions.
  QuditRegister tensor(const QuditRegister& other, std::size_t cap = kDefaultAmplitudeCap) const;

  QuditRegister& scale(cx factor);

 private:
  QuditRegister(int d, int n, std::vector<cx> amps) : d_(d), n_(n), amps_(std::move(amps)) {}

  int d_;
  int n_;
  std::vector<cx> amps_;
};

QuditRegister basis_state(int d, std::span<const int> digits,
                          std::size_t cap = kDefaultAmplitudeCap);
inline QuditRegister basis_state(int d, std::initializer_list<int> digits,
                                 std::size_t cap = kDefaultAmplitudeCap) {
  return basis_state(d, std::span<const int>(digits.begin(), digits.size()), cap);
}

/// <a|b>, conjugating a.
cx inner_product(const QuditRegister& a, const QuditRegister& b);

/// |<a|b>|², clamped to [0,1].
double fidelity(const QuditRegister& a, const QuditRegister& b);

/// max_i |a_i − b_i|.
double max_deviation(const QuditRegister& a, const QuditRegister& b);

/// max_i |a_i − e^{iθ} b_i| with θ chosen so the first non-negligible
/// amplitude of a and b agree in phase.
double max_deviation_up_to_phase(const QuditRegister& a, const QuditRegister& b);

/// (op ⊗ 1) applied to reg; op's tensor factors follow the order of targets.
QuditRegister apply_local(QuditRegister reg, const Operator& op, std::span<const int> targets);
inline QuditRegister apply_local(QuditRegister reg, const Operator& op,
                                 std::initializer_list<int> targets) {
  return apply_local(std::move(reg), op, std::span<const int>(targets.begin(), targets.size()));
}

/// Coefficients α_0..α_{d-1} of a single-qudit secret, normalized on construction.
class SecretAmplitudes {
 public:
  explicit SecretAmplitudes(std::vector<cx> alphas);

  static SecretAmplitudes basis(int d, int j);
  static SecretAmplitudes uniform(int d);

  int dim() const { return static_cast<int>(alphas_.size()); }
  std::span<const cx> alphas() const { return alphas_; }
  cx operator[](int k) const { return alphas_[static_cast<std::size_t>(k)]; }

  QuditRegister as_register() const;

  /// Σ_k α_k |k>^{⊗parties}.
  QuditRegister shared_state(int parties, std::size_t cap = kDefaultAmplitudeCap) const;

 private:
  std::vector<cx> alphas_;
};

}  // namespace qsplit
