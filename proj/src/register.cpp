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
#include "qsplit/register.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsplit/kernels.hpp"

namespace qsplit {

// ---------------------------------------------------------------- Operator

Operator::Operator(std::size_t dim, std::vector<cx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("Operator: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

Operator Operator::identity(std::size_t dim) {
  std::vector<cx> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return Operator(dim, std::move(e));
}

Operator Operator::adjoint() const {
  std::vector<cx> e(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
  return Operator(dim_, std::move(e));
}

Operator Operator::operator*(const Operator& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("Operator: dimension mismatch in product");
  std::vector<cx> e(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const cx a = entries_[r * dim_ + k];
      for (std::size_t c = 0; c < dim_; ++c) e[r * dim_ + c] += a * rhs.entries_[k * dim_ + c];
    }
  return Operator(dim_, std::move(e));
}

double Operator::unitarity_defect() const {
  return max_entry_deviation(adjoint() * *this, identity(dim_));
}

double max_entry_deviation(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Operator: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

// ---------------------------------------------------------------- indexing

std::size_t checked_length(int d, int n, std::size_t cap) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be >= 2, got " + std::to_string(d));
  if (n < 0) throw std::invalid_argument("qudit count must be >= 0, got " + std::to_string(n));
  std::size_t len = 1;
  for (int i = 0; i < n; ++i) {
    if (len > cap / static_cast<std::size_t>(d)) {
      throw CapExceeded("register of " + std::to_string(n) + " qudits of dimension " +
                        std::to_string(d) + " exceeds the cap of " + std::to_string(cap) +
                        " amplitudes");
    }
    len *= static_cast<std::size_t>(d);
  }
  return len;
}

std::size_t index_of_digits(int d, std::span<const int> digits) {
  std::size_t flat = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= d) {
      throw std::out_of_range("digit " + std::to_string(digit) + " outside [0, " +
                              std::to_string(d) + ")");
    }
    flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(digit);
  }
  return flat;
}

Digits digits_of_index(int d, int n, std::size_t flat) {
  const std::size_t len = checked_length(d, n, std::numeric_limits<std::size_t>::max());
  if (flat >= len) {
    throw std::out_of_range("flat index " + std::to_string(flat) + " outside [0, " +
                            std::to_string(len) + ")");
  }
  Digits digits(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<int>(flat % static_cast<std::size_t>(d));
    flat /= static_cast<std::size_t>(d);
  }
  return digits;
}

std::size_t stride_of(int d, int n, int position) {
  if (position < 0 || position >= n) {
    throw std::out_of_range("position " + std::to_string(position) + " outside a register of " +
                            std::to_string(n) + " qudits");
  }
  std::size_t s = 1;
  for (int p = n - 1; p > position; --p) s *= static_cast<std::size_t>(d);
  return s;
}

// ---------------------------------------------------------------- register

namespace {

double sum_norm(std::span<const cx> amps) {
  double s = 0.0;
  for (const cx& a : amps) s += std::norm(a);
  return s;
}

void require_same_shape(const QuditRegister& a, const QuditRegister& b) {
  if (a.dim() != b.dim() || a.qudits() != b.qudits()) {
    throw std::invalid_argument("register shape mismatch: (d=" + std::to_string(a.dim()) +
                                ", n=" + std::to_string(a.qudits()) + ") vs (d=" +
                                std::to_string(b.dim()) + ", n=" + std::to_string(b.qudits()) +
                                ")");
  }
}

}  // namespace

QuditRegister QuditRegister::from_amplitudes(int d, int n, std::vector<cx> amps, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("register needs at least one qudit");
  const std::size_t len = checked_length(d, n, cap);
  if (amps.size() != len) {
    throw std::invalid_argument("expected " + std::to_string(len) + " amplitudes, got " +
                                std::to_string(amps.size()));
  }
  const double norm2 = sum_norm(amps);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("amplitude vector has zero or non-finite norm");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cx& a : amps) a *= inv;
  return QuditRegister(d, n, std::move(amps));
}

QuditRegister QuditRegister::scalar(int d) { return QuditRegister(d, 0, {cx{1.0, 0.0}}); }

cx QuditRegister::amplitude(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != n_) {
    throw std::invalid_argument("expected " + std::to_string(n_) + " digits");
  }
  return amps_[index_of_digits(d_, digits)];
}

double QuditRegister::norm_squared() const { return sum_norm(amps_); }

QuditRegister QuditRegister::tensor(const QuditRegister& other, std::size_t cap) const {
  if (other.d_ != d_) throw std::invalid_argument("tensor: qudit dimensions differ");
  checked_length(d_, n_ + other.n_, cap);
  std::vector<cx> out;
  out.reserve(amps_.size() * other.amps_.size());
  for (const cx& a : amps_)
    for (const cx& b : other.amps_) out.push_back(a * b);
  return QuditRegister(d_, n_ + other.n_, std::move(out));
}

QuditRegister& QuditRegister::scale(cx factor) {
  for (cx& a : amps_) a *= factor;
  return *this;
}

QuditRegister basis_state(int d, std::span<const int> digits, std::size_t cap) {
  if (digits.empty()) throw std::invalid_argument("basis_state: empty digit list");
  const int n = static_cast<int>(digits.size());
  std::vector<cx> amps(checked_length(d, n, cap));
  amps[index_of_digits(d, digits)] = 1.0;
  return QuditRegister::from_amplitudes(d, n, std::move(amps), cap);
}

cx inner_product(const QuditRegister& a, const QuditRegister& b) {
  require_same_shape(a, b);
  cx acc = 0.0;
  for (std::size_t i = 0; i < a.length(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double fidelity(const QuditRegister& a, const QuditRegister& b) {
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

double max_deviation(const QuditRegister& a, const QuditRegister& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.length(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_deviation_up_to_phase(const QuditRegister& a, const QuditRegister& b) {
  require_same_shape(a, b);
  // Anchor on the largest amplitude of a so the phase estimate is well conditioned.
  std::size_t anchor = 0;
  for (std::size_t i = 1; i < a.length(); ++i)
    if (std::abs(a[i]) > std::abs(a[anchor])) anchor = i;
  cx align = 1.0;
  if (std::abs(b[anchor]) > 0.0) {
    const cx ratio = a[anchor] / b[anchor];
    align = ratio / std::abs(ratio);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.length(); ++i)
    worst = std::max(worst, std::abs(a[i] - align * b[i]));
  return worst;
}

QuditRegister apply_local(QuditRegister reg, const Operator& op, std::span<const int> targets) {
  const int d = reg.dim();
  const int n = reg.qudits();
  if (targets.empty() || targets.size() > 2) {
    throw std::invalid_argument("apply_local: expected one or two targets");
  }
  for (int t : targets) {
    if (t < 0 || t >= n) {
      throw std::out_of_range("apply_local: target " + std::to_string(t) + " outside [0, " +
                              std::to_string(n) + ")");
    }
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("apply_local: repeated target");
  }
  const std::size_t expected = targets.size() == 1 ? static_cast<std::size_t>(d)
                                                   : static_cast<std::size_t>(d) * d;
  if (op.dim() != expected) {
    throw std::invalid_argument("apply_local: operator dimension " + std::to_string(op.dim()) +
                                " does not match d^" + std::to_string(targets.size()) + " = " +
                                std::to_string(expected));
  }
  kernels::parallel::apply_matrix({d, n}, reg.data(), op.entries(), targets);
  return reg;
}

// ---------------------------------------------------------------- secret

SecretAmplitudes::SecretAmplitudes(std::vector<cx> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() < 2) throw std::invalid_argument("secret needs dimension >= 2");
  const double norm2 = sum_norm(alphas_);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("secret amplitudes have zero or non-finite norm");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cx& a : alphas_) a *= inv;
}

SecretAmplitudes SecretAmplitudes::basis(int d, int j) {
  if (d < 2) throw std::invalid_argument("secret needs dimension >= 2");
  if (j < 0 || j >= d) throw std::out_of_range("basis index outside [0, d)");
  std::vector<cx> a(static_cast<std::size_t>(d));
  a[static_cast<std::size_t>(j)] = 1.0;
  return SecretAmplitudes(std::move(a));
}

SecretAmplitudes SecretAmplitudes::uniform(int d) {
  if (d < 2) throw std::invalid_argument("secret needs dimension >= 2");
  return SecretAmplitudes(std::vector<cx>(static_cast<std::size_t>(d), cx{1.0, 0.0}));
}

QuditRegister SecretAmplitudes::as_register() const {
  return QuditRegister::from_amplitudes(dim(), 1, alphas_);
}

QuditRegister SecretAmplitudes::shared_state(int parties, std::size_t cap) const {
  const int d = dim();
  if (parties < 1) throw std::invalid_argument("shared_state: parties must be >= 1");
  std::vector<cx> amps(checked_length(d, parties, cap));
  for (int k = 0; k < d; ++k) {
    const Digits digits(static_cast<std::size_t>(parties), k);
    amps[index_of_digits(d, digits)] = alphas_[static_cast<std::size_t>(k)];
  }
  return QuditRegister::from_amplitudes(d, parties, std::move(amps), cap);
}

}  // namespace qsplit
