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

// Amplitude kernels over a dense mixed-radix statevector.
//
// Every kernel exists twice: `serial` is the straightforward reference kept
// for testing, `parallel` splits the outer loop with OpenMP. Both must agree
// to the last bit for the permutation kernels and to rounding for the rest.
// QuditRegister routes through `parallel`.

#include <cstddef>
#include <span>
#include <vector>

#include "qsplit/common.hpp"

namespace qsplit::kernels {

struct Layout {
  int d;
  int n;
};

/// Flat offsets of every digit assignment to `positions`, enumerated in
/// mixed-radix order with positions[0] most significant.
std::vector<std::size_t> offset_table(Layout layout, std::span<const int> positions);

/// Ascending list of positions not in `positions`.
std::vector<int> complement(Layout layout, std::span<const int> positions);

/// Registers smaller than this run the parallel kernels single-threaded.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

namespace serial {
// matrix is d^t x d^t row-major with t = targets.size().
void apply_matrix(Layout layout, std::span<cx> amps, std::span<const cx> matrix,
                  std::span<const int> targets);
// |r> -> phase[r] |image[r]> on one qudit; image must be a permutation of [0,d).
void apply_digit_map(Layout layout, std::span<cx> amps, int target, std::span<const int> image,
                     std::span<const cx> phase);
// |j>_c |k>_t -> |j>_c |k+j mod d>_t
void apply_xor(Layout layout, std::span<cx> amps, int control, int target);
// Indexed like offset_table(layout, targets).
std::vector<double> target_probabilities(Layout layout, std::span<const cx> amps,
                                         std::span<const int> targets);
// Row-major d^k x d^k, kept digits ordered as in keep.
std::vector<cx> partial_trace(Layout layout, std::span<const cx> amps,
                              std::span<const int> keep);
}  // namespace serial

namespace parallel {
// matrix is d^t x d^t row-major with t = targets.size().
void apply_matrix(Layout layout, std::span<cx> amps, std::span<const cx> matrix,
                  std::span<const int> targets);
// |r> -> phase[r] |image[r]> on one qudit; image must be a permutation of [0,d).
void apply_digit_map(Layout layout, std::span<cx> amps, int target, std::span<const int> image,
                     std::span<const cx> phase);
// |j>_c |k>_t -> |j>_c |k+j mod d>_t
void apply_xor(Layout layout, std::span<cx> amps, int control, int target);
// Indexed like offset_table(layout, targets).
std::vector<double> target_probabilities(Layout layout, std::span<const cx> amps,
                                         std::span<const int> targets);
// Row-major d^k x d^k, kept digits ordered as in keep.
std::vector<cx> partial_trace(Layout layout, std::span<const cx> amps,
                              std::span<const int> keep);
}  // namespace parallel

}  // namespace qsplit::kernels
