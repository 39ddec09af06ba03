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
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qsplit/density.hpp"
#include "qsplit/gates.hpp"
#include "qsplit/protocol.hpp"
#include "qsplit/trace_io.hpp"
#include "test_support.hpp"

using namespace qsplit;
using namespace qsplit::testing;

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

// Σ_k α_k e^{i2πkl/d} |m−k mod d>^{⊗N}
QuditRegister branch_state(const SecretAmplitudes& s, int n, int l, int m) {
  const int d = s.dim();
  return repeated_digit_state(
      d, n, [&](int k) { return s[k] * expi(two_pi_over(d) * k * l); },
      [&](int k) { return mod(m - k, d); });
}

template <typename T>
const T& event_as(const Event& e) {
  REQUIRE(std::holds_alternative<T>(e));
  return std::get<T>(e);
}

}  // namespace

TEST_CASE("prepare_ghz") {
  const auto q = prepare_ghz(2, 3);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(q[0] - h) <= kAlgebraTol);
  CHECK(std::abs(q[7] - h) <= kAlgebraTol);
  for (std::size_t i = 1; i < 7; ++i) CHECK(q[i] == cx{});

  const auto q3 = prepare_ghz(3, 2);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(q3.amplitude(Digits{j, j}) - 1.0 / std::sqrt(3.0)) <= kAlgebraTol);
  int nonzero = 0;
  for (cx a : q3.amplitudes()) nonzero += a != cx{};
  CHECK(nonzero == 3);

  for (int d = 2; d <= 5; ++d) {
    const auto g = prepare_ghz(d, 3);
    CHECK(std::abs(g.norm_squared() - 1.0) <= kAlgebraTol);
    for (int p = 0; p < 3; ++p) {
      const int t[] = {p};
      for (const auto& b : enumerate_branches(g, t))
        CHECK(std::abs(b.record.probability - 1.0 / d) <= kAlgebraTol);
    }
  }
  CHECK_THROWS_AS(prepare_ghz(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(prepare_ghz(2, 30), CapExceeded);
}

TEST_CASE("prepare_joint") {
  const auto basis = prepare_joint(SecretAmplitudes::basis(2, 0), 2);
  const auto expected = basis_state(2, {0}).tensor(prepare_ghz(2, 3));
  CHECK(max_deviation(basis, expected) == 0.0);

  std::mt19937_64 gen(51);
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      const auto s = random_alphas(d, gen);
      const auto joint = prepare_joint(s, n);
      CHECK(std::abs(joint.norm_squared() - 1.0) <= kAlgebraTol);
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Digits digits(static_cast<std::size_t>(n + 2), k);
          digits[0] = j;
          CHECK(std::abs(joint.amplitude(digits) - s[j] / std::sqrt(double(d))) <= kAlgebraTol);
        }
    }
  CHECK_THROWS_AS(prepare_joint(SecretAmplitudes::uniform(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(prepare_joint(SecretAmplitudes::uniform(4), 9), CapExceeded);
  CHECK_THROWS_AS(prepare_joint(SecretAmplitudes::uniform(2), 3, 16), CapExceeded);
}

TEST_CASE("split produces the announced branch state") {
  SUBCASE("qubit (0,0) branch") {
    const SecretAmplitudes s({0.6, cx{0.0, 0.8}});
    OutcomeSource src = OutcomeSource::forced({0, 0});
    const auto r = split(prepare_joint(s, 2), 2, src);
    const auto expected = QuditRegister::from_amplitudes(2, 2, {s[0], 0.0, 0.0, s[1]});
    CHECK(max_deviation_up_to_phase(expected, r.branch) <= kAlgebraTol);
    CHECK(std::abs(r.record.probability - 0.25) <= kAlgebraTol);
  }
  SUBCASE("every branch, every shape") {
    std::mt19937_64 gen(52);
    for (int d = 2; d <= 4; ++d)
      for (int n = 1; n <= 3; ++n) {
        const auto s = random_alphas(d, gen);
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m) {
            OutcomeSource src = OutcomeSource::forced({l, m});
            EventLog log;
            const auto r = split(prepare_joint(s, n), n, src, &log);
            CHECK(std::abs(r.record.probability - 1.0 / (d * d)) <= kAlgebraTol);
            CHECK(r.record.targets == std::vector<int>{0, n + 1});
            CHECK(max_deviation_up_to_phase(branch_state(s, n, l, m), r.branch) <= kAlgebraTol);
            const auto& msg = event_as<MessageEvent>(log[3]);
            CHECK(msg.to == std::vector<std::string>{"bob1"});
            CHECK(msg.payload == Digits{l, m});
            if (n >= 2) CHECK(event_as<MessageEvent>(log[4]).payload == Digits{m});
          }
      }
  }
  SUBCASE("basis secret leaves one product term") {
    for (int j = 0; j < 3; ++j) {
      OutcomeSource src = OutcomeSource::forced({2, 1});
      const auto r = split(prepare_joint(SecretAmplitudes::basis(3, j), 2), 2, src);
      int nonzero = 0;
      for (cx a : r.branch.amplitudes()) nonzero += std::abs(a) > kAlgebraTol;
      CHECK(nonzero == 1);
      CHECK(std::abs(std::abs(r.branch.amplitude(Digits{mod(1 - j, 3), mod(1 - j, 3)})) - 1.0) <=
            kAlgebraTol);
    }
  }
  OutcomeSource src = OutcomeSource::forced({0, 0});
  CHECK_THROWS_AS(split(prepare_joint(SecretAmplitudes::uniform(2), 2), 3, src),
                  std::invalid_argument);
}

TEST_CASE("apply_corrections converges every branch to the shared state") {
  const SecretAmplitudes qubit({0.6, 0.8});
  const auto eq2 = QuditRegister::from_amplitudes(2, 2, {0.6, 0.0, 0.0, 0.8});
  CHECK(max_deviation(apply_corrections(eq2, 0, 0), eq2) <= kAlgebraTol);

  std::mt19937_64 gen(53);
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      const auto s = random_alphas(d, gen);
      const auto target = s.shared_state(n);
      for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m) {
          OutcomeSource src = OutcomeSource::forced({l, m});
          auto r = split(prepare_joint(s, n), n, src);
          const auto qss = apply_corrections(std::move(r.branch), l, m);
          CHECK(max_deviation_up_to_phase(target, qss) <= kAlgebraTol);
          CHECK(std::abs(fidelity(target, qss) - 1.0) <= kFidelityTol);
        }
    }
}

TEST_CASE("reconstruct_step") {
  SUBCASE("qubit, k = 0 reproduces a|0> + b|1>") {
    const SecretAmplitudes s({0.6, cx{0.0, 0.8}});
    OutcomeSource src = OutcomeSource::forced({0});
    const auto r = reconstruct_step(s.shared_state(2), src);
    CHECK(max_deviation_up_to_phase(s.as_register(), r.reduced) <= kAlgebraTol);
  }
  SUBCASE("outcome is uniform and the output is QSS(K-1)") {
    std::mt19937_64 gen(54);
    for (int d = 2; d <= 4; ++d)
      for (int kp = 2; kp <= 4; ++kp) {
        const auto s = random_alphas(d, gen);
        const int last[] = {kp - 1};
        for (const auto& b : enumerate_branches(qft_apply(s.shared_state(kp), kp - 1), last))
          CHECK(std::abs(b.record.probability - 1.0 / d) <= kAlgebraTol);
        for (int k = 0; k < d; ++k) {
          OutcomeSource src = OutcomeSource::forced({k});
          EventLog log;
          const auto r = reconstruct_step(s.shared_state(kp), src, &log);
          CHECK(r.record.targets == std::vector<int>{kp});
          CHECK(max_deviation_up_to_phase(s.shared_state(kp - 1), r.reduced) <= kAlgebraTol);
          REQUIRE(log.size() == 4);
          CHECK(event_as<MessageEvent>(log[2]).from == bob_name(kp));
          CHECK(event_as<CorrectionEvent>(log[3]).params == std::vector<long long>{k});
        }
      }
  }
  SUBCASE("basis secret passes through exactly") {
    for (int k = 0; k < 3; ++k) {
      OutcomeSource src = OutcomeSource::forced({k});
      const auto r = reconstruct_step(SecretAmplitudes::basis(3, 2).shared_state(3), src);
      CHECK(max_deviation_up_to_phase(basis_state(3, {2, 2}), r.reduced) <= kAlgebraTol);
    }
  }
  OutcomeSource src = OutcomeSource::forced({0});
  CHECK_THROWS_AS(reconstruct_step(basis_state(2, {0}), src), std::invalid_argument);
}

TEST_CASE("reconstruct_sequential") {
  std::mt19937_64 gen(55);
  SUBCASE("N = 1 is the identity") {
    const auto s = random_alphas(3, gen);
    OutcomeSource src = OutcomeSource::forced({});
    const auto r = reconstruct_sequential(s.as_register(), src);
    CHECK(r.outcomes.empty());
    CHECK(max_deviation(r.secret, s.as_register()) == 0.0);
  }
  SUBCASE("d = 3, N = 3, every outcome") {
    const auto s = random_alphas(3, gen);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        OutcomeSource src = OutcomeSource::forced({a, b});
        EventLog log;
        const auto r = reconstruct_sequential(s.shared_state(3), src, &log);
        CHECK(r.outcomes == Digits{a, b});
        CHECK(std::abs(fidelity(s.as_register(), r.secret) - 1.0) <= kFidelityTol);
        int measures = 0;
        int messages = 0;
        for (const Event& e : log) {
          measures += std::holds_alternative<MeasureEvent>(e);
          if (const auto* msg = std::get_if<MessageEvent>(&e)) {
            ++messages;
            CHECK(msg->to == std::vector<std::string>{"bob1"});
          }
        }
        CHECK(measures == 2);
        CHECK(messages == 2);
      }
  }
}

TEST_CASE("reconstruct_parallel") {
  std::mt19937_64 gen(56);
  SUBCASE("N = 1 is the identity") {
    const auto s = random_alphas(4, gen);
    OutcomeSource src = OutcomeSource::forced({});
    CHECK(max_deviation(reconstruct_parallel(s.as_register(), src).secret, s.as_register()) == 0.0);
  }
  SUBCASE("matches the sequential chain entrywise") {
    for (int d = 2; d <= 4; ++d)
      for (int n = 2; n <= 4; ++n) {
        const auto s = random_alphas(d, gen);
        for (int trial = 0; trial < 5; ++trial) {
          Digits ks;
          for (int i = 0; i < n - 1; ++i) ks.push_back(static_cast<int>(gen() % d));
          OutcomeSource a = OutcomeSource::forced(ks);
          OutcomeSource b = OutcomeSource::forced(ks);
          const auto seq = reconstruct_sequential(s.shared_state(n), a);
          EventLog log;
          const auto par = reconstruct_parallel(s.shared_state(n), b, &log);
          CHECK(seq.outcomes == par.outcomes);
          CHECK(max_deviation(seq.secret, par.secret) <= kAlgebraTol);
          const auto& meas = event_as<MeasureEvent>(log[static_cast<std::size_t>(n - 1)]);
          CHECK(meas.record.targets.front() == n);
          CHECK(meas.record.targets.back() == 2);
        }
      }
  }
  SUBCASE("d = 5, N = 4, sampled") {
    const auto s = random_alphas(5, gen);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RngStream rng(seed);
      OutcomeSource src = OutcomeSource::sampled(rng);
      const auto r = reconstruct_parallel(s.shared_state(4), src);
      CHECK(std::abs(fidelity(s.as_register(), r.secret) - 1.0) <= kFidelityTol);
    }
  }
}

TEST_CASE("qubit walkthrough, event for event") {
  const SecretAmplitudes s({0.6, cx{0.0, 0.8}});
  OutcomeSource src = OutcomeSource::forced({1, 0, 1});
  const auto t = run_protocol(s, 2, ReconstructionMode::kSequential, src);
  REQUIRE(t.events.size() == 13);
  CHECK(event_as<PrepareEvent>(t.events[0]).positions == std::vector<int>{1, 2, 3});
  CHECK(event_as<PrepareEvent>(t.events[1]).positions == std::vector<int>{0});
  CHECK(event_as<GateEvent>(t.events[2]).name == "xor");
  CHECK(event_as<GateEvent>(t.events[2]).positions == std::vector<int>{0, 3});
  CHECK(event_as<GateEvent>(t.events[3]).name == "qft");
  CHECK(event_as<MeasureEvent>(t.events[4]).record.outcome == Digits{1, 0});
  CHECK(event_as<MessageEvent>(t.events[5]).payload == Digits{1, 0});
  CHECK(event_as<MessageEvent>(t.events[6]).to == std::vector<std::string>{"bob2"});
  CHECK(event_as<CorrectionEvent>(t.events[7]).name == "bob1_correction");
  CHECK(event_as<CorrectionEvent>(t.events[8]).name == "bob_mu_correction");
  CHECK(event_as<CorrectionEvent>(t.events[8]).position == 2);
  CHECK(event_as<GateEvent>(t.events[9]).positions == std::vector<int>{2});
  CHECK(event_as<MeasureEvent>(t.events[10]).record.outcome == Digits{1});
  CHECK(event_as<MessageEvent>(t.events[11]).from == "bob2");
  CHECK(event_as<CorrectionEvent>(t.events[12]).name == "phase_correction");
  CHECK(t.split_outcome == Digits{1, 0});
  CHECK(t.reconstruction_outcome == Digits{1});
  CHECK(std::abs(t.final_fidelity - 1.0) <= kFidelityTol);
}

TEST_CASE("run_protocol is deterministic and always recovers the secret") {
  const auto s = SecretAmplitudes({0.3, cx{0.1, 0.5}, -0.2});
  const auto a = run_protocol(s, 3, ReconstructionMode::kParallel, 99);
  const auto b = run_protocol(s, 3, ReconstructionMode::kParallel, 99);
  CHECK(trace_line(a, 0) == trace_line(b, 0));

  RngStream draws(2024);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + static_cast<int>(draws.next() % 5);
    const int n = 1 + static_cast<int>(draws.next() % 5);
    if (checked_length(d, n + 2, std::numeric_limits<std::size_t>::max()) > kDefaultAmplitudeCap)
      continue;
    const auto secret = random_secret(d, draws);
    const auto mode = i % 2 ? ReconstructionMode::kParallel : ReconstructionMode::kSequential;
    const auto t = run_protocol(secret, n, mode, draws.next());
    CHECK(t.final_fidelity >= 1.0 - kFidelityTol);
  }
}

TEST_CASE("marginals stay diagonal until reconstruction completes") {
  std::mt19937_64 gen(57);
  for (int d = 2; d <= 4; ++d) {
    const auto s = random_alphas(d, gen);
    const int n = 4;
    OutcomeSource src = OutcomeSource::forced({1 % d, 1, 0, 2 % d, 1});
    auto sr = split(prepare_joint(s, n), n, src);
    auto qss = apply_corrections(std::move(sr.branch), sr.record.outcome[0], sr.record.outcome[1]);
    while (qss.qudits() >= 2) {
      for (int p = 0; p < qss.qudits(); ++p) {
        const int keep[] = {p};
        CHECK(max_entry_deviation(reduced_density(qss, keep), expected_marginal(s)) <=
              kAlgebraTol);
      }
      qss = reconstruct_step(std::move(qss), src).reduced;
    }
  }
}

TEST_CASE("parse_mode") {
  CHECK(parse_mode("sequential") == ReconstructionMode::kSequential);
  CHECK(parse_mode("parallel") == ReconstructionMode::kParallel);
  CHECK_THROWS_AS(parse_mode("both"), std::invalid_argument);
}
