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
#include <cmath>

#include "qsplit/kernels.hpp"
#include "qsplit/register.hpp"

namespace qsplit::kernels::serial {

void apply_matrix(Layout layout, std::span<cx> amps, std::span<const cx> matrix,
                  std::span<const int> targets) {
  const auto local = offset_table(layout, targets);
  const auto rest_positions = complement(layout, targets);
  const auto rest = offset_table(layout, rest_positions);
  const std::size_t dim = local.size();
  std::vector<cx> in(dim);
  for (std::size_t base : rest) {
    for (std::size_t i = 0; i < dim; ++i) in[i] = amps[base + local[i]];
    for (std::size_t i = 0; i < dim; ++i) {
      cx acc = 0.0;
      for (std::size_t j = 0; j < dim; ++j) acc += matrix[i * dim + j] * in[j];
      amps[base + local[i]] = acc;
    }
  }
}

void apply_digit_map(Layout layout, std::span<cx> amps, int target, std::span<const int> image,
                     std::span<const cx> phase) {
  const std::size_t d = static_cast<std::size_t>(layout.d);
  const std::size_t stride = stride_of(layout.d, layout.n, target);
  const int targets[] = {target};
  const auto rest = offset_table(layout, complement(layout, targets));
  std::vector<cx> in(d);
  for (std::size_t base : rest) {
    for (std::size_t r = 0; r < d; ++r) in[r] = amps[base + r * stride];
    for (std::size_t r = 0; r < d; ++r)
      amps[base + static_cast<std::size_t>(image[r]) * stride] = phase[r] * in[r];
  }
}

void apply_xor(Layout layout, std::span<cx> amps, int control, int target) {
  const std::size_t d = static_cast<std::size_t>(layout.d);
  const std::size_t sc = stride_of(layout.d, layout.n, control);
  const std::size_t st = stride_of(layout.d, layout.n, target);
  const std::vector<cx> src(amps.begin(), amps.end());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::size_t j = (i / sc) % d;
    const std::size_t k = (i / st) % d;
    const std::size_t from = (k + d - j) % d;
    amps[i] = src[i - k * st + from * st];
  }
}

std::vector<double> target_probabilities(Layout layout, std::span<const cx> amps,
                                         std::span<const int> targets) {
  const auto local = offset_table(layout, targets);
  const auto rest = offset_table(layout, complement(layout, targets));
  std::vector<double> probs(local.size());
  for (std::size_t o = 0; o < local.size(); ++o)
    for (std::size_t base : rest) probs[o] += std::norm(amps[local[o] + base]);
  return probs;
}

std::vector<cx> partial_trace(Layout layout, std::span<const cx> amps,
                              std::span<const int> keep) {
  const auto kept = offset_table(layout, keep);
  const auto rest = offset_table(layout, complement(layout, keep));
  const std::size_t dim = kept.size();
  std::vector<cx> rho(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      cx acc = 0.0;
      for (std::size_t base : rest) acc += amps[kept[a] + base] * std::conj(amps[kept[b] + base]);
      rho[a * dim + b] = acc;
    }
  return rho;
}

}  // namespace qsplit::kernels::serial
