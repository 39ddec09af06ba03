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
#include "qsplit/protocol.hpp"

#include <cmath>
#include <algorithm>
#include <string>

#include "qsplit/gates.hpp"

namespace qsplit {

std::string_view to_string(ReconstructionMode mode) {
  return mode == ReconstructionMode::kSequential ? "sequential" : "parallel";
}

ReconstructionMode parse_mode(std::string_view text) {
  if (text == "sequential") return ReconstructionMode::kSequential;
  if (text == "parallel") return ReconstructionMode::kParallel;
  throw std::invalid_argument("unknown reconstruction mode '" + std::string(text) +
                              "' (expected sequential or parallel)");
}

std::string bob_name(int label) { return "bob" + std::to_string(label); }

namespace {

constexpr const char* kAlice = "alice";

void emit(EventLog* log, Event e) {
  if (log) log->push_back(std::move(e));
}

std::vector<int> iota_labels(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

}  // namespace

QuditRegister prepare_ghz(int d, int parties, std::size_t cap) {
  if (parties < 2) throw std::invalid_argument("GHZ resource needs at least two parties");
  std::vector<cx> amps(checked_length(d, parties, cap));
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const Digits digits(static_cast<std::size_t>(parties), j);
    amps[index_of_digits(d, digits)] = a;
  }
  return QuditRegister::from_amplitudes(d, parties, std::move(amps), cap);
}

QuditRegister prepare_joint(const SecretAmplitudes& secret, int n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("need at least one Bob, got N = " + std::to_string(n));
  checked_length(secret.dim(), n + 2, cap);
  return secret.as_register().tensor(prepare_ghz(secret.dim(), n + 1, cap), cap);
}

QuditRegister encode(QuditRegister joint, int n) {
  if (joint.qudits() != n + 2) {
    throw std::invalid_argument("joint register must hold N + 2 = " + std::to_string(n + 2) +
                                " qudits");
  }
  return qft_apply(xor_apply(std::move(joint), 0, n + 1), 0);
}

SplitResult split(QuditRegister joint, int n, OutcomeSource& source, EventLog* log) {
  QuditRegister encoded = encode(std::move(joint), n);
  emit(log, GateEvent{"xor", {0, n + 1}});
  emit(log, GateEvent{"qft", {0}});

  const int targets[] = {0, n + 1};
  Branch b = source.measure(encoded, targets);
  const int l = b.record.outcome[0];
  const int m = b.record.outcome[1];
  emit(log, MeasureEvent{b.record});
  emit(log, MessageEvent{kAlice, {bob_name(1)}, {l, m}});
  if (n >= 2) {
    std::vector<std::string> rest;
    for (int mu = 2; mu <= n; ++mu) rest.push_back(bob_name(mu));
    emit(log, MessageEvent{kAlice, std::move(rest), {m}});
  }
  return {std::move(b.record), std::move(b.state)};
}

QuditRegister apply_corrections(QuditRegister branch, int l, int m, EventLog* log) {
  const int n = branch.qudits();
  branch = bob1_correction(std::move(branch), 0, l, m);
  emit(log, CorrectionEvent{"bob1_correction", 1, {l, m}});
  for (int mu = 2; mu <= n; ++mu) {
    branch = bob_mu_correction(std::move(branch), mu - 1, m);
    emit(log, CorrectionEvent{"bob_mu_correction", mu, {m}});
  }
  return branch;
}

StepResult reconstruct_step(QuditRegister qss, OutcomeSource& source, EventLog* log) {
  const int k_parties = qss.qudits();
  if (k_parties < 2) {
    throw std::invalid_argument("reconstruction step needs K >= 2 holders, got " +
                                std::to_string(k_parties));
  }
  const int last = k_parties - 1;
  qss = qft_apply(std::move(qss), last);
  emit(log, GateEvent{"qft", {k_parties}});

  const int targets[] = {last};
  Branch b = source.measure(qss, targets);
  b.record.targets = {k_parties};
  const int k = b.record.outcome[0];
  emit(log, MeasureEvent{b.record});
  emit(log, MessageEvent{bob_name(k_parties), {bob_name(1)}, {k}});

  QuditRegister reduced = phase_correction(std::move(b.state), 0, k);
  emit(log, CorrectionEvent{"phase_correction", 1, {k}});
  return {std::move(b.record), std::move(reduced)};
}

ReconstructResult reconstruct_sequential(QuditRegister qss, OutcomeSource& source,
                                         EventLog* log) {
  Digits outcomes;
  while (qss.qudits() >= 2) {
    StepResult step = reconstruct_step(std::move(qss), source, log);
    outcomes.push_back(step.record.outcome[0]);
    qss = std::move(step.reduced);
  }
  return {std::move(qss), std::move(outcomes)};
}

ReconstructResult reconstruct_parallel(QuditRegister qss, OutcomeSource& source, EventLog* log) {
  const int n = qss.qudits();
  if (n < 2) return {std::move(qss), {}};

  for (int mu = 2; mu <= n; ++mu) {
    qss = qft_apply(std::move(qss), mu - 1);
    emit(log, GateEvent{"qft", {mu}});
  }
  std::vector<int> targets;
  for (int mu = n; mu >= 2; --mu) targets.push_back(mu - 1);
  Branch b = source.measure(qss, targets);
  b.record.targets = iota_labels(2, n);
  std::reverse(b.record.targets.begin(), b.record.targets.end());
  emit(log, MeasureEvent{b.record});

  long long k_sum = 0;
  for (std::size_t i = 0; i < b.record.outcome.size(); ++i) {
    const int k = b.record.outcome[i];
    emit(log, MessageEvent{bob_name(b.record.targets[i]), {bob_name(1)}, {k}});
    k_sum += k;
  }
  QuditRegister secret = aggregated_phase_correction(std::move(b.state), 0, k_sum);
  emit(log, CorrectionEvent{"aggregated_phase_correction", 1, {k_sum}});
  return {std::move(secret), std::move(b.record.outcome)};
}

ProtocolTranscript run_protocol(const SecretAmplitudes& secret, int n, ReconstructionMode mode,
                                OutcomeSource& source, std::uint64_t seed, std::size_t cap) {
  EventLog log;
  QuditRegister joint = prepare_joint(secret, n, cap);
  log.push_back(PrepareEvent{"ghz", iota_labels(1, n + 1)});
  log.push_back(PrepareEvent{"secret", {0}});

  SplitResult s = split(std::move(joint), n, source, &log);
  const int l = s.record.outcome[0];
  const int m = s.record.outcome[1];
  QuditRegister qss = apply_corrections(std::move(s.branch), l, m, &log);

  ReconstructResult r = mode == ReconstructionMode::kSequential
                            ? reconstruct_sequential(std::move(qss), source, &log)
                            : reconstruct_parallel(std::move(qss), source, &log);

  const double f = fidelity(secret.as_register(), r.secret);
  return ProtocolTranscript{secret.dim(), n,          mode, seed,        secret, std::move(log),
                            {l, m},       r.outcomes, f,    std::move(r.secret)};
}

ProtocolTranscript run_protocol(const SecretAmplitudes& secret, int n, ReconstructionMode mode,
                                std::uint64_t seed, std::size_t cap) {
  RngStream rng(seed);
  OutcomeSource source = OutcomeSource::sampled(rng);
  return run_protocol(secret, n, mode, source, seed, cap);
}

}  // namespace qsplit
