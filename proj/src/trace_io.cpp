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
#include "qsplit/trace_io.hpp"

#include <cstdio>
#include <type_traits>

namespace qsplit {

using nlohmann::json;

namespace {

json complex_json(cx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json event_json(const Event& event) {
  return std::visit(
      [](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, PrepareEvent>) {
          return {{"type", "prepare"}, {"name", e.name}, {"positions", e.positions}};
        } else if constexpr (std::is_same_v<T, GateEvent>) {
          return {{"type", "gate"}, {"name", e.name}, {"positions", e.positions}};
        } else if constexpr (std::is_same_v<T, MeasureEvent>) {
          return {{"type", "measure"},
                  {"positions", e.record.targets},
                  {"outcome", e.record.outcome},
                  {"probability", e.record.probability}};
        } else if constexpr (std::is_same_v<T, MessageEvent>) {
          return {{"type", "message"}, {"from", e.from}, {"to", e.to}, {"payload", e.payload}};
        } else {
          return {{"type", "correction"},
                  {"name", e.name},
                  {"position", e.position},
                  {"params", e.params}};
        }
      },
      event);
}

}  // namespace

json trace_record(const ProtocolTranscript& t, std::uint64_t trial) {
  json secret = json::array();
  for (cx a : t.secret.alphas()) secret.push_back(complex_json(a));
  json events = json::array();
  for (const Event& e : t.events) events.push_back(event_json(e));
  return json{{"version", kTraceVersion},
              {"d", t.d},
              {"n", t.n},
              {"mode", std::string(to_string(t.mode))},
              {"seed", t.seed},
              {"trial", trial},
              {"secret", std::move(secret)},
              {"events", std::move(events)},
              {"final_fidelity", t.final_fidelity}};
}

std::string trace_line(const ProtocolTranscript& t, std::uint64_t trial) {
  return trace_record(t, trial).dump();
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string summary_row(const ProtocolTranscript& t, std::uint64_t trial) {
  std::string k_digits;
  for (std::size_t i = 0; i < t.reconstruction_outcome.size(); ++i) {
    if (i) k_digits += ';';
    k_digits += std::to_string(t.reconstruction_outcome[i]);
  }
  return std::to_string(t.d) + ',' + std::to_string(t.n) + ',' + std::string(to_string(t.mode)) +
         ',' + std::to_string(trial) + ',' + std::to_string(t.split_outcome[0]) + ',' +
         std::to_string(t.split_outcome[1]) + ',' + k_digits + ',' +
         format_double(t.final_fidelity);
}

json to_json(const oracle::DenseCheckReport& r) {
  json probs = json::array();
  for (const auto& [outcome, p] : r.split_probabilities)
    probs.push_back({{"outcome", outcome}, {"probability", p}});
  return {{"check", "dense_protocol"},
          {"d", r.d},
          {"n", r.n},
          {"mode", std::string(to_string(r.mode))},
          {"branches", r.branches},
          {"min_fidelity", r.min_fidelity},
          {"max_fidelity", r.max_fidelity},
          {"split_probabilities", std::move(probs)},
          {"max_split_probability_error", r.max_split_probability_error},
          {"max_reconstruction_probability_error", r.max_reconstruction_probability_error},
          {"max_universality_deviation", r.max_universality_deviation},
          {"max_fast_path_deviation", r.max_fast_path_deviation},
          {"passed", r.passed()}};
}

json to_json(const oracle::QubitFixtureReport& r) {
  return {{"check", "qubit_fixture"},
          {"a", complex_json(r.a)},
          {"b", complex_json(r.b)},
          {"checks", r.checks},
          {"max_deviation", r.max_deviation},
          {"passed", r.passed()}};
}

json to_json(const oracle::MarginalSweepReport& r) {
  return {{"check", "marginal_sweep"},
          {"d", r.d},
          {"n", r.n},
          {"subsets_checked", r.subsets_checked},
          {"max_deviation", r.max_deviation},
          {"max_oracle_deviation", r.max_oracle_deviation},
          {"passed", r.passed()}};
}

}  // namespace qsplit
