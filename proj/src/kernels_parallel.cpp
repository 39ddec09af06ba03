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
#include <algorithm>
#include <cmath>
#include <cstdint>

#include "qsplit/kernels.hpp"
#include "qsplit/register.hpp"

// Same loops as kernels_serial.cpp with the outer loop split across threads.
// Loop counters are signed for OpenMP.

namespace qsplit::kernels::parallel {

namespace {

bool worth_threading(std::size_t length) { return length >= kParallelThreshold; }

}  // namespace

void apply_matrix(Layout layout, std::span<cx> amps, std::span<const cx> matrix,
                  std::span<const int> targets) {
  const auto local = offset_table(layout, targets);
  const auto rest = offset_table(layout, complement(layout, targets));
  const std::size_t dim = local.size();
  const auto blocks = static_cast<std::int64_t>(rest.size());
#pragma omp parallel if (worth_threading(amps.size()))
  {
    std::vector<cx> in(dim);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < blocks; ++r) {
      const std::size_t base = rest[static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i < dim; ++i) in[i] = amps[base + local[i]];
      for (std::size_t i = 0; i < dim; ++i) {
        cx acc = 0.0;
        for (std::size_t j = 0; j < dim; ++j) acc += matrix[i * dim + j] * in[j];
        amps[base + local[i]] = acc;
      }
    }
  }
}

void apply_digit_map(Layout layout, std::span<cx> amps, int target, std::span<const int> image,
                     std::span<const cx> phase) {
  const std::size_t d = static_cast<std::size_t>(layout.d);
  const std::size_t stride = stride_of(layout.d, layout.n, target);
  const int targets[] = {target};
  const auto rest = offset_table(layout, complement(layout, targets));
  const auto blocks = static_cast<std::int64_t>(rest.size());
#pragma omp parallel if (worth_threading(amps.size()))
  {
    std::vector<cx> in(d);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < blocks; ++r) {
      const std::size_t base = rest[static_cast<std::size_t>(r)];
      for (std::size_t k = 0; k < d; ++k) in[k] = amps[base + k * stride];
      for (std::size_t k = 0; k < d; ++k)
        amps[base + static_cast<std::size_t>(image[k]) * stride] = phase[k] * in[k];
    }
  }
}

void apply_xor(Layout layout, std::span<cx> amps, int control, int target) {
  const std::size_t d = static_cast<std::size_t>(layout.d);
  const std::size_t sc = stride_of(layout.d, layout.n, control);
  const std::size_t st = stride_of(layout.d, layout.n, target);
  const std::vector<cx> src(amps.begin(), amps.end());
  const auto len = static_cast<std::int64_t>(src.size());
#pragma omp parallel for schedule(static) if (worth_threading(src.size()))
  for (std::int64_t ii = 0; ii < len; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
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
  const std::size_t outcomes = local.size();
  // Fixed chunking, summed in chunk order: result is independent of the
  // thread count and of scheduling.
  constexpr std::size_t kChunks = 64;
  const std::size_t per_chunk = (rest.size() + kChunks - 1) / kChunks;
  std::vector<double> partial(kChunks * outcomes);
#pragma omp parallel for schedule(static) if (worth_threading(amps.size()))
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(kChunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * per_chunk;
    const std::size_t hi = std::min(rest.size(), lo + per_chunk);
    double* mine = partial.data() + static_cast<std::size_t>(c) * outcomes;
    for (std::size_t r = lo; r < hi; ++r)
      for (std::size_t o = 0; o < outcomes; ++o) mine[o] += std::norm(amps[local[o] + rest[r]]);
  }
  std::vector<double> probs(outcomes);
  for (std::size_t c = 0; c < kChunks; ++c)
    for (std::size_t o = 0; o < outcomes; ++o) probs[o] += partial[c * outcomes + o];
  return probs;
}

std::vector<cx> partial_trace(Layout layout, std::span<const cx> amps,
                              std::span<const int> keep) {
  const auto kept = offset_table(layout, keep);
  const auto rest = offset_table(layout, complement(layout, keep));
  const std::size_t dim = kept.size();
  std::vector<cx> rho(dim * dim);
  const auto entries = static_cast<std::int64_t>(dim * dim);
#pragma omp parallel for schedule(static) if (worth_threading(amps.size() * dim))
  for (std::int64_t e = 0; e < entries; ++e) {
    const std::size_t a = static_cast<std::size_t>(e) / dim;
    const std::size_t b = static_cast<std::size_t>(e) % dim;
    cx acc = 0.0;
    for (std::size_t base : rest) acc += amps[kept[a] + base] * std::conj(amps[kept[b] + base]);
    rho[static_cast<std::size_t>(e)] = acc;
  }
  return rho;
}

}  // namespace qsplit::kernels::parallel
