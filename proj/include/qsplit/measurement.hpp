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

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "qsplit/register.hpp"

namespace qsplit {

/// Deterministic 64-bit stream (mt19937_64). Uniform and normal draws are
/// derived here rather than through <random> distributions so sequences are
/// identical across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Independent per-trial stream: seed XOR trial.
  static RngStream for_trial(std::uint64_t seed, std::uint64_t trial) {
    return RngStream(seed ^ trial);
  }

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Random secret with i.i.d. complex Gaussian coefficients, normalized.
SecretAmplitudes random_secret(int d, RngStream& rng);

struct MeasurementRecord {
  std::vector<int> targets;
  Digits outcome;
  double probability = 0.0;
};

using OutcomeDistribution = std::map<Digits, double>;

/// Nonzero-probability outcomes on targets, ordered lexicographically.
OutcomeDistribution outcome_distribution(const QuditRegister& reg, std::span<const int> targets);

struct Collapsed {
  QuditRegister remaining;
  double probability;
};

/// Projects onto outcome, drops the measured qudits and renormalizes.
/// Throws ImpossibleOutcome below kZeroProbability.
Collapsed collapse(const QuditRegister& reg, std::span<const int> targets,
                   std::span<const int> outcome);

struct Branch {
  MeasurementRecord record;
  QuditRegister state;
};

Branch measure(const QuditRegister& reg, std::span<const int> targets, RngStream& rng);

/// One entry per possible outcome, lexicographic.
std::vector<Branch> enumerate_branches(const QuditRegister& reg, std::span<const int> targets);

/// Inverse-CDF draw over a lexicographically ordered distribution.
Digits sample_outcome(const OutcomeDistribution& dist, RngStream& rng);

/// Where measurement outcomes come from: a sampled stream, or a fixed list of
/// digits consumed in measurement order (used for exhaustive branch sweeps).
class OutcomeSource {
 public:
  static OutcomeSource sampled(RngStream& rng) { return OutcomeSource(&rng, {}); }
  static OutcomeSource forced(Digits digits) { return OutcomeSource(nullptr, std::move(digits)); }

  bool is_forced() const { return rng_ == nullptr; }
  std::size_t remaining_forced() const { return forced_.size() - next_; }

  Branch measure(const QuditRegister& reg, std::span<const int> targets);

 private:
  OutcomeSource(RngStream* rng, Digits forced) : rng_(rng), forced_(std::move(forced)) {}

  RngStream* rng_;
  Digits forced_;
  std::size_t next_ = 0;
};

}  // namespace qsplit
