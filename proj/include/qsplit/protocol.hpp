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

// Multiparty qudit information splitting.
//
// Qudit labels: 0 is Alice's secret, 1..N are Bob_1..Bob_N, N+1 is Alice's
// share of the GHZ resource. Transcript positions always use these labels.
// Once Alice has measured, the N-qudit register holds Bob_μ at index μ−1.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsplit/measurement.hpp"
#include "qsplit/register.hpp"

namespace qsplit {

enum class ReconstructionMode { kSequential, kParallel };

std::string_view to_string(ReconstructionMode mode);
/// Accepts "sequential" or "parallel"; throws std::invalid_argument otherwise.
ReconstructionMode parse_mode(std::string_view text);

struct PrepareEvent {
  std::string name;
  std::vector<int> positions;
};

struct GateEvent {
  std::string name;
  std::vector<int> positions;
};

struct MeasureEvent {
  MeasurementRecord record;  // targets are qudit labels
};

struct MessageEvent {
  std::string from;
  std::vector<std::string> to;
  Digits payload;
};

struct CorrectionEvent {
  std::string name;
  int position;
  std::vector<long long> params;
};

using Event = std::variant<PrepareEvent, GateEvent, MeasureEvent, MessageEvent, CorrectionEvent>;
using EventLog = std::vector<Event>;

/// "bob<label>" for 1..N; Alice is named explicitly by callers.
std::string bob_name(int label);

struct ProtocolTranscript {
  int d;
  int n;
  ReconstructionMode mode;
  std::uint64_t seed;
  SecretAmplitudes secret;
  EventLog events;
  Digits split_outcome;           // (l, m)
  Digits reconstruction_outcome;  // (k_N, ..., k_2)
  double final_fidelity;
  QuditRegister final_state;  // Bob_1's qudit at the end
};

/// (1/√d) Σ_j |j>^{⊗parties}.
QuditRegister prepare_ghz(int d, int parties, std::size_t cap = kDefaultAmplitudeCap);

/// |Ψ> ⊗ GHZ(N+1) in label order.
QuditRegister prepare_joint(const SecretAmplitudes& secret, int n,
                            std::size_t cap = kDefaultAmplitudeCap);

/// Step 1 alone: XOR(0 -> N+1) then QFT on 0.
QuditRegister encode(QuditRegister joint, int n);

struct SplitResult {
  MeasurementRecord record;  // targets {0, N+1}, outcome (l, m)
  QuditRegister branch;      // Bob_1..Bob_N
};

/// Steps 1-3: encode, measure {0, N+1}, announce (l, m).
SplitResult split(QuditRegister joint, int n, OutcomeSource& source, EventLog* log = nullptr);

/// Step 4: every Bob relabels; Bob_1 also removes the l phase. Yields Σ α_k |k>^{⊗N}.
QuditRegister apply_corrections(QuditRegister branch, int l, int m, EventLog* log = nullptr);

struct StepResult {
  MeasurementRecord record;  // targets {K}, outcome (k_K)
  QuditRegister reduced;     // K−1 qudits
};

/// One link of QSS(K) -> QSS(K−1): Bob_K Fourier-transforms and measures,
/// Bob_1 undoes the announced phase.
StepResult reconstruct_step(QuditRegister qss, OutcomeSource& source, EventLog* log = nullptr);

struct ReconstructResult {
  QuditRegister secret;
  Digits outcomes;  // (k_N, ..., k_2)
};

/// Forced digits are consumed as k_N first, down to k_2.
ReconstructResult reconstruct_sequential(QuditRegister qss, OutcomeSource& source,
                                         EventLog* log = nullptr);

/// Bob_2..Bob_N measure together (targets listed N down to 2, so outcome
/// tuples line up with the sequential order); Bob_1 applies one phase.
ReconstructResult reconstruct_parallel(QuditRegister qss, OutcomeSource& source,
                                       EventLog* log = nullptr);

ProtocolTranscript run_protocol(const SecretAmplitudes& secret, int n, ReconstructionMode mode,
                                OutcomeSource& source, std::uint64_t seed = 0,
                                std::size_t cap = kDefaultAmplitudeCap);

/// Sampled run seeded from `seed`.
ProtocolTranscript run_protocol(const SecretAmplitudes& secret, int n, ReconstructionMode mode,
                                std::uint64_t seed, std::size_t cap = kDefaultAmplitudeCap);

}  // namespace qsplit
