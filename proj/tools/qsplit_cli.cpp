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
// qsplit: run, verify and inspect multiparty qudit information splitting.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsplit/harness.hpp"

using namespace qsplit;

int main(int argc, char** argv) {
  CLI::App app{"Qudit information-splitting simulator and verifier"};
  app.require_subcommand(1);

  harness::RunOptions run;
  std::string run_mode = "sequential";
  auto* run_cmd = app.add_subcommand("run", "Run sampled protocol trials");
  run_cmd->add_option("--d", run.d, "Qudit dimension")->required();
  run_cmd->add_option("--n", run.n, "Number of Bobs sharing the secret")->required();
  run_cmd->add_option("--mode", run_mode, "Reconstruction mode")
      ->check(CLI::IsMember({"sequential", "parallel"}));
  run_cmd->add_option("--trials", run.trials, "Number of trials");
  run_cmd->add_option("--seed", run.seed, "Base seed; trial t uses seed XOR t");
  run_cmd->add_option("--secret", run.secret, "Secret as comma-separated re,im pairs");
  run_cmd->add_option("--emit-trace", run.trace_path, "JSON-lines trace output");
  run_cmd->add_option("--summary", run.summary_path, "CSV summary output");
  run_cmd->add_option("--cap", run.cap, "Largest register in amplitudes");

  harness::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive oracle checks over a grid");
  verify_cmd->add_option("--grid", verify.grid, "Grid such as d=2..4,n=1..3");
  verify_cmd->add_option("--report", verify.report_path, "JSON report output");
  verify_cmd->add_option("--cap", verify.cap, "Oracle cap in amplitudes");

  harness::DistributionOptions dist;
  auto* dist_cmd =
      app.add_subcommand("distribution", "Empirical vs exact distribution of Alice's outcomes");
  dist_cmd->add_option("--d", dist.d, "Qudit dimension")->required();
  dist_cmd->add_option("--n", dist.n, "Number of Bobs")->required();
  dist_cmd->add_option("--samples", dist.samples, "Number of draws");
  dist_cmd->add_option("--seed", dist.seed, "Seed");
  dist_cmd->add_option("--secret", dist.secret, "Secret as comma-separated re,im pairs");
  dist_cmd->add_option("--out", dist.out_path, "CSV output (stdout when omitted)");
  dist_cmd->add_option("--cap", dist.cap, "Largest register in amplitudes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return harness::exit_code::kUsage;
  }

  if (*run_cmd) {
    run.mode = parse_mode(run_mode);
    return harness::cmd_run(run, std::cout, std::cerr);
  }
  if (*verify_cmd) return harness::cmd_verify(verify, std::cout, std::cerr);
  return harness::cmd_distribution(dist, std::cout, std::cerr);
}
