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
#include "qsplit/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qsplit/measurement.hpp"
#include "qsplit/oracle.hpp"
#include "qsplit/trace_io.hpp"

namespace qsplit::harness {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                std::string(text) + "'");
  }
  return value;
}

void validate_shape(int d, int n) {
  if (d < 2) throw std::invalid_argument("--d must be >= 2 (got " + std::to_string(d) + ")");
  if (n < 1) throw std::invalid_argument("--n must be >= 1 (got " + std::to_string(n) + ")");
}

// Runs body, mapping the library's exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap or shrink d/n)\n";
    return exit_code::kCap;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return f;
}

}  // namespace

Grid parse_grid(std::string_view text) {
  std::optional<std::pair<int, int>> d_range;
  std::optional<std::pair<int, int>> n_range;
  for (std::string_view part : split_on(text, ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("grid entry '" + std::string(part) + "' is not key=range");
    }
    const std::string_view key = trim(part.substr(0, eq));
    const std::string_view range = trim(part.substr(eq + 1));
    const std::size_t dots = range.find("..");
    const int lo = parse_number<int>(trim(range.substr(0, dots)), "grid bound");
    const int hi = dots == std::string_view::npos
                       ? lo
                       : parse_number<int>(trim(range.substr(dots + 2)), "grid bound");
    if (lo > hi) throw std::invalid_argument("grid range '" + std::string(range) + "' is empty");
    if (key == "d") {
      d_range = {lo, hi};
    } else if (key == "n") {
      n_range = {lo, hi};
    } else {
      throw std::invalid_argument("unknown grid key '" + std::string(key) + "'");
    }
  }
  if (!d_range || !n_range) throw std::invalid_argument("grid needs both d= and n= ranges");
  if (d_range->first < 2) throw std::invalid_argument("grid d must start at >= 2");
  if (n_range->first < 1) throw std::invalid_argument("grid n must start at >= 1");
  return {d_range->first, d_range->second, n_range->first, n_range->second};
}

SecretAmplitudes parse_secret(std::string_view text, int d, std::ostream& warn) {
  const auto parts = split_on(text, ',');
  if (parts.size() != 2 * static_cast<std::size_t>(d)) {
    throw std::invalid_argument("--secret needs " + std::to_string(2 * d) +
                                " comma-separated numbers (re,im per amplitude) for d = " +
                                std::to_string(d) + ", got " + std::to_string(parts.size()));
  }
  std::vector<cx> alphas;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    const cx a{parse_number<double>(parts[i], "secret component"),
               parse_number<double>(parts[i + 1], "secret component")};
    norm2 += std::norm(a);
    alphas.push_back(a);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-6) {
    warn << "warning: secret norm is " << std::sqrt(norm2) << ", normalizing\n";
  }
  return SecretAmplitudes(std::move(alphas));
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_shape(opts.d, opts.n);
    if (opts.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    checked_length(opts.d, opts.n + 2, opts.cap);
    std::optional<SecretAmplitudes> fixed;
    if (opts.secret) fixed = parse_secret(*opts.secret, opts.d, err);

    std::ofstream trace;
    std::ofstream summary;
    if (opts.trace_path) trace = open_output(*opts.trace_path);
    if (opts.summary_path) summary = open_output(*opts.summary_path);

    const auto trials = static_cast<std::size_t>(opts.trials);
    std::vector<std::optional<ProtocolTranscript>> results(trials);
    std::vector<std::string> failures(trials);
    // Trials are independent streams; output order is restored below.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
      const auto trial = static_cast<std::uint64_t>(i);
      try {
        RngStream rng = RngStream::for_trial(opts.seed, trial);
        const SecretAmplitudes secret = fixed ? *fixed : random_secret(opts.d, rng);
        OutcomeSource source = OutcomeSource::sampled(rng);
        results[trial] = run_protocol(secret, opts.n, opts.mode, source, opts.seed, opts.cap);
      } catch (const std::exception& e) {
        failures[trial] = e.what();
      }
    }

    if (summary) summary << kSummaryHeader << '\n';
    std::size_t ok = 0;
    double worst = 1.0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      if (!results[trial]) {
        err << "trial " << trial << " failed: " << failures[trial] << '\n';
        continue;
      }
      const ProtocolTranscript& t = *results[trial];
      if (trace) trace << trace_line(t, trial) << '\n';
      if (summary) summary << summary_row(t, trial) << '\n';
      worst = std::min(worst, t.final_fidelity);
      if (t.final_fidelity >= 1.0 - kFidelityTol) ++ok;
    }
    out << "run d=" << opts.d << " n=" << opts.n << " mode=" << to_string(opts.mode)
        << " trials=" << trials << " passed=" << ok << " min_fidelity=" << format_double(worst)
        << '\n';
    return ok == trials ? exit_code::kOk : exit_code::kVerification;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Grid grid = parse_grid(opts.grid);
    for (int d = grid.d_lo; d <= grid.d_hi; ++d)
      for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        try {
          checked_length(d, n + 2, opts.cap);
        } catch (const CapExceeded&) {
          throw CapExceeded("grid point d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                            " needs " + std::to_string(d) + "^" + std::to_string(n + 2) +
                            " amplitudes, above the oracle cap of " + std::to_string(opts.cap) +
                            "; shrink --grid or raise --cap");
        }
      }

    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    auto record = [&](nlohmann::json j, std::string_view label) {
      const bool passed = j["passed"].get<bool>();
      all = all && passed;
      out << (passed ? "PASS " : "FAIL ") << label << '\n';
      checks.push_back(std::move(j));
    };

    const cx fixtures[][2] = {
        {1.0, 0.0},
        {0.0, 1.0},
        {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)},
        {0.6, cx{0.0, 0.8}},
        {std::cos(0.3), std::polar(std::sin(0.3), 1.1)},
    };
    for (const auto& ab : fixtures) {
      const auto r = oracle::qubit_fixture_check(ab[0], ab[1]);
      std::ostringstream label;
      label << "qubit_fixture a=" << r.a << " b=" << r.b << " max_dev=" << r.max_deviation;
      record(to_json(r), label.str());
    }

    for (int d = grid.d_lo; d <= grid.d_hi; ++d)
      for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
        const auto secrets = oracle::reference_secrets(d);
        for (std::size_t s = 0; s < secrets.size(); ++s) {
          for (ReconstructionMode mode :
               {ReconstructionMode::kSequential, ReconstructionMode::kParallel}) {
            const auto r = oracle::dense_protocol_check(secrets[s], n, mode, opts.cap);
            auto j = to_json(r);
            j["secret_index"] = s;
            std::ostringstream label;
            label << "dense_protocol d=" << d << " n=" << n << " secret=" << s
                  << " mode=" << to_string(mode) << " branches=" << r.branches
                  << " min_fidelity=" << format_double(r.min_fidelity)
                  << " fast_vs_dense=" << r.max_fast_path_deviation;
            record(std::move(j), label.str());
          }
          const auto m = oracle::marginal_sweep(secrets[s], n, opts.cap);
          auto j = to_json(m);
          j["secret_index"] = s;
          std::ostringstream label;
          label << "marginal_sweep d=" << d << " n=" << n << " secret=" << s
                << " subsets=" << m.subsets_checked << " max_dev=" << m.max_deviation;
          record(std::move(j), label.str());
        }
      }

    if (opts.report_path) {
      std::ofstream f = open_output(*opts.report_path);
      const nlohmann::json report{{"grid", opts.grid}, {"checks", checks}, {"passed", all}};
      f << report.dump(2) << '\n';
    }
    out << (all ? "verify: all checks passed\n" : "verify: FAILURES\n");
    return all ? exit_code::kOk : exit_code::kVerification;
  });
}

int cmd_distribution(const DistributionOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_shape(opts.d, opts.n);
    if (opts.samples < 0) throw std::invalid_argument("--samples must be >= 0");
    checked_length(opts.d, opts.n + 2, opts.cap);

    RngStream rng(opts.seed);
    const SecretAmplitudes secret =
        opts.secret ? parse_secret(*opts.secret, opts.d, err) : random_secret(opts.d, rng);
    const QuditRegister encoded = encode(prepare_joint(secret, opts.n, opts.cap), opts.n);
    const int targets[] = {0, opts.n + 1};
    const OutcomeDistribution exact = outcome_distribution(encoded, targets);

    std::map<Digits, long long> counts;
    for (int s = 0; s < opts.samples; ++s) ++counts[sample_outcome(exact, rng)];

    std::ostringstream csv;
    csv << "outcome,exact_probability,empirical_frequency,z_score\n";
    bool within = true;
    for (const auto& [outcome, p] : exact) {
      csv << outcome[0] << ';' << outcome[1] << ',' << format_double(p) << ',';
      if (opts.samples > 0) {
        const double n = opts.samples;
        const double hits = static_cast<double>(counts[outcome]);
        const double z = (hits - n * p) / std::sqrt(n * p * (1.0 - p));
        within = within && std::abs(z) <= 5.0;
        csv << format_double(hits / n) << ',' << format_double(z);
      } else {
        csv << ',';
      }
      csv << '\n';
    }
    if (opts.out_path) {
      open_output(*opts.out_path) << csv.str();
    } else {
      out << csv.str();
    }
    return within ? exit_code::kOk : exit_code::kVerification;
  });
}

}  // namespace qsplit::harness
