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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsplit/common.hpp"
#include "qsplit/protocol.hpp"

namespace qsplit::harness {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kCap = 3;
inline constexpr int kVerification = 4;
}  // namespace exit_code

struct RunOptions {
  int d = 2;
  int n = 2;
  ReconstructionMode mode = ReconstructionMode::kSequential;
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> secret;  // "re,im,re,im,..."
  std::optional<std::string> trace_path;
  std::optional<std::string> summary_path;
  std::size_t cap = kDefaultAmplitudeCap;
};

struct VerifyOptions {
  std::string grid = "d=2..4,n=1..3";
  std::optional<std::string> report_path;
  std::size_t cap = kDefaultOracleCap;
};

struct DistributionOptions {
  int d = 2;
  int n = 2;
  int samples = 10000;
  std::uint64_t seed = 0;
  std::optional<std::string> secret;
  std::optional<std::string> out_path;  // stdout when absent
  std::size_t cap = kDefaultAmplitudeCap;
};

struct Grid {
  int d_lo, d_hi, n_lo, n_hi;
};

/// "d=2..4,n=1..3"; single values ("d=3") allowed. Throws std::invalid_argument.
Grid parse_grid(std::string_view text);

/// Comma-separated re,im pairs for a dimension-d secret. Throws
/// std::invalid_argument on a malformed list; warns on `warn` when the input
/// norm is off by more than 1e-6.
SecretAmplitudes parse_secret(std::string_view text, int d, std::ostream& warn);

// Each command returns its process exit status. Diagnostics go to err.
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_distribution(const DistributionOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qsplit::harness
