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
#include "qsplit/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsplit/kernels.hpp"

namespace qsplit {

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
  // 1 − u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SecretAmplitudes random_secret(int d, RngStream& rng) {
  if (d < 2) throw std::invalid_argument("secret needs dimension >= 2");
  std::vector<cx> alphas(static_cast<std::size_t>(d));
  for (cx& a : alphas) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
  }
  return SecretAmplitudes(std::move(alphas));
}

namespace {

void validate_targets(const QuditRegister& reg, std::span<const int> targets) {
  if (targets.empty()) throw std::invalid_argument("measurement needs at least one target");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= reg.qudits()) {
      throw std::out_of_range("measurement target " + std::to_string(targets[i]) +
                              " outside [0, " + std::to_string(reg.qudits()) + ")");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("repeated measurement target");
  }
}

std::vector<double> probabilities(const QuditRegister& reg, std::span<const int> targets) {
  return kernels::parallel::target_probabilities({reg.dim(), reg.qudits()}, reg.amplitudes(),
                                                 targets);
}

}  // namespace

OutcomeDistribution outcome_distribution(const QuditRegister& reg, std::span<const int> targets) {
  validate_targets(reg, targets);
  const auto probs = probabilities(reg, targets);
  const int t = static_cast<int>(targets.size());
  OutcomeDistribution dist;
  for (std::size_t o = 0; o < probs.size(); ++o)
    if (probs[o] >= kZeroProbability) dist.emplace(digits_of_index(reg.dim(), t, o), probs[o]);
  return dist;
}

Collapsed collapse(const QuditRegister& reg, std::span<const int> targets,
                   std::span<const int> outcome) {
  validate_targets(reg, targets);
  if (outcome.size() != targets.size()) {
    throw std::invalid_argument("outcome has " + std::to_string(outcome.size()) +
                                " digits for " + std::to_string(targets.size()) + " targets");
  }
  const int d = reg.dim();
  const kernels::Layout layout{d, reg.qudits()};
  const auto rest_positions = kernels::complement(layout, targets);
  const auto rest = kernels::offset_table(layout, rest_positions);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (outcome[i] < 0 || outcome[i] >= d) {
      throw std::out_of_range("outcome digit " + std::to_string(outcome[i]) + " outside [0, " +
                              std::to_string(d) + ")");
    }
    offset += static_cast<std::size_t>(outcome[i]) * stride_of(d, reg.qudits(), targets[i]);
  }

  std::vector<cx> slice(rest.size());
  double probability = 0.0;
  for (std::size_t r = 0; r < rest.size(); ++r) {
    slice[r] = reg[offset + rest[r]];
    probability += std::norm(slice[r]);
  }
  if (probability < kZeroProbability) {
    throw ImpossibleOutcome("outcome has probability " + std::to_string(probability) +
                            "; the requested branch does not occur");
  }
  if (rest_positions.empty()) return {QuditRegister::scalar(d), probability};
  return {QuditRegister::from_amplitudes(d, static_cast<int>(rest_positions.size()),
                                         std::move(slice)),
          probability};
}

Digits sample_outcome(const OutcomeDistribution& dist, RngStream& rng) {
  if (dist.empty()) throw std::invalid_argument("cannot sample an empty distribution");
  double total = 0.0;
  for (const auto& [outcome, p] : dist) total += p;
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  for (const auto& [outcome, p] : dist) {
    cumulative += p;
    if (u < cumulative) return outcome;
  }
  return dist.rbegin()->first;
}

Branch measure(const QuditRegister& reg, std::span<const int> targets, RngStream& rng) {
  const Digits outcome = sample_outcome(outcome_distribution(reg, targets), rng);
  auto [state, p] = collapse(reg, targets, outcome);
  return {{std::vector<int>(targets.begin(), targets.end()), outcome, p}, std::move(state)};
}

std::vector<Branch> enumerate_branches(const QuditRegister& reg, std::span<const int> targets) {
  std::vector<Branch> branches;
  for (const auto& [outcome, p] : outcome_distribution(reg, targets)) {
    auto [state, prob] = collapse(reg, targets, outcome);
    branches.push_back({{std::vector<int>(targets.begin(), targets.end()), outcome, prob},
                        std::move(state)});
  }
  return branches;
}

Branch OutcomeSource::measure(const QuditRegister& reg, std::span<const int> targets) {
  if (!is_forced()) return qsplit::measure(reg, targets, *rng_);
  if (remaining_forced() < targets.size()) {
    throw std::invalid_argument("forced outcome list exhausted: need " +
                                std::to_string(targets.size()) + " more digits, have " +
                                std::to_string(remaining_forced()));
  }
  const auto first = forced_.begin() + static_cast<std::ptrdiff_t>(next_);
  Digits outcome(first, first + static_cast<std::ptrdiff_t>(targets.size()));
  next_ += targets.size();
  auto [state, p] = collapse(reg, targets, outcome);
  return {{std::vector<int>(targets.begin(), targets.end()), std::move(outcome), p},
          std::move(state)};
}

}  // namespace qsplit
