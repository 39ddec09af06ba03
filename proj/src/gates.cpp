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
#include "qsplit/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsplit/kernels.hpp"

namespace qsplit {

namespace {

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be >= 2, got " + std::to_string(d));
}

void require_digit(int d, long long digit, const char* what) {
  if (digit < 0 || digit >= d) {
    throw std::out_of_range(std::string(what) + " = " + std::to_string(digit) +
                            " outside [0, " + std::to_string(d) + ")");
  }
}

void require_position(const QuditRegister& reg, int position) {
  if (position < 0 || position >= reg.qudits()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside [0, " +
                            std::to_string(reg.qudits()) + ")");
  }
}

// |r> -> phase(r) |image(r)> on one qudit.
template <typename Image, typename Phase>
QuditRegister digit_map(QuditRegister reg, int target, Image image_of, Phase phase_of) {
  require_position(reg, target);
  const int d = reg.dim();
  std::vector<int> image(static_cast<std::size_t>(d));
  std::vector<cx> phase(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    image[static_cast<std::size_t>(r)] = image_of(r);
    phase[static_cast<std::size_t>(r)] = phase_of(r);
  }
  kernels::parallel::apply_digit_map({d, reg.qudits()}, reg.data(), target, image, phase);
  return reg;
}

int mod(long long a, int d) {
  const long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

}  // namespace

cx root_of_unity(int d, long long power) {
  require_dimension(d);
  const int reduced = mod(power, d);
  if (reduced == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * reduced / d);
}

Operator qft_operator(int d) {
  require_dimension(d);
  const auto dim = static_cast<std::size_t>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<cx> e(dim * dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j)
      e[k * dim + j] = scale * root_of_unity(d, static_cast<long long>(j * k));
  return Operator(dim, std::move(e));
}

Operator xor_operator(int d) {
  require_dimension(d);
  const auto dd = static_cast<std::size_t>(d);
  const std::size_t dim = dd * dd;
  std::vector<cx> e(dim * dim);
  for (std::size_t j = 0; j < dd; ++j)
    for (std::size_t k = 0; k < dd; ++k) e[(j * dd + (k + j) % dd) * dim + (j * dd + k)] = 1.0;
  return Operator(dim, std::move(e));
}

QuditRegister qft_apply(QuditRegister reg, int position) {
  const Operator qft = qft_operator(reg.dim());
  const int targets[] = {position};
  return apply_local(std::move(reg), qft, targets);
}

QuditRegister xor_apply(QuditRegister reg, int control, int target) {
  require_position(reg, control);
  require_position(reg, target);
  if (control == target) throw std::invalid_argument("xor_apply: control equals target");
  kernels::parallel::apply_xor({reg.dim(), reg.qudits()}, reg.data(), control, target);
  return reg;
}

QuditRegister bob1_correction(QuditRegister reg, int target, int l, int m) {
  const int d = reg.dim();
  require_digit(d, l, "l");
  require_digit(d, m, "m");
  return digit_map(
      std::move(reg), target, [=](int r) { return mod(m - r, d); },
      [=](int r) { return root_of_unity(d, -static_cast<long long>(mod(m - r, d)) * l); });
}

QuditRegister bob_mu_correction(QuditRegister reg, int target, int m) {
  const int d = reg.dim();
  require_digit(d, m, "m");
  return digit_map(
      std::move(reg), target, [=](int r) { return mod(m - r, d); },
      [](int) { return cx{1.0, 0.0}; });
}

QuditRegister phase_correction(QuditRegister reg, int target, int k) {
  const int d = reg.dim();
  require_digit(d, k, "k");
  return digit_map(
      std::move(reg), target, [](int r) { return r; },
      [=](int j) { return root_of_unity(d, -static_cast<long long>(j) * k); });
}

QuditRegister aggregated_phase_correction(QuditRegister reg, int target, long long k_sum) {
  const int d = reg.dim();
  if (k_sum < 0) throw std::out_of_range("k_sum must be >= 0");
  return phase_correction(std::move(reg), target, mod(k_sum, d));
}

}  // namespace qsplit
