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
#include <string>

#include <json.hpp>

#include "qsplit/oracle.hpp"
#include "qsplit/protocol.hpp"

namespace qsplit {

inline constexpr int kTraceVersion = 1;

/// One JSON-lines trace record.
nlohmann::json trace_record(const ProtocolTranscript& t, std::uint64_t trial);

/// Single line, no trailing newline.
std::string trace_line(const ProtocolTranscript& t, std::uint64_t trial);

inline constexpr const char* kSummaryHeader = "d,n,mode,trial,l,m,k_digits,final_fidelity";

/// CSV row matching kSummaryHeader; k_digits joined with ';'.
std::string summary_row(const ProtocolTranscript& t, std::uint64_t trial);

/// %.17g.
std::string format_double(double v);

nlohmann::json to_json(const oracle::DenseCheckReport& r);
nlohmann::json to_json(const oracle::QubitFixtureReport& r);
nlohmann::json to_json(const oracle::MarginalSweepReport& r);

}  // namespace qsplit
