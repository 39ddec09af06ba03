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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qsplit {

using cx = std::complex<double>;
using Digits = std::vector<int>;

/// Largest register (in amplitudes) a constructor accepts unless told otherwise.
inline constexpr std::size_t kDefaultAmplitudeCap = std::size_t{1} << 20;

/// Largest register the dense oracle will embed full-size unitaries for.
/// A dense unitary over this many amplitudes is cap² complex entries.
inline constexpr std::size_t kDefaultOracleCap = std::size_t{1} << 12;

/// Entrywise tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

/// Tolerance for end-to-end fidelities.
inline constexpr double kFidelityTol = 1e-9;

/// Outcomes below this probability are impossible branches.
inline constexpr double kZeroProbability = 1e-14;

/// Requested register exceeds the configured amplitude cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Collapse was forced onto an outcome of (numerically) zero probability.
class ImpossibleOutcome : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qsplit
