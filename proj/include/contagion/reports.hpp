// Copyright 2026 The Contagion Authors
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

#ifndef CONTAGION_REPORTS_HPP
#define CONTAGION_REPORTS_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "contagion/epidemic.hpp"
#include "contagion/network_metrics.hpp"
#include "contagion/tradeoff.hpp"

namespace contagion {

// Everything that determines a run's outputs: subcommand, resolved
// configuration, the input log's content hash, tool version, master seed.
// Execution details that cannot change outputs (worker count, output paths)
// are deliberately left out, so replaying a manifest reproduces outputs
// byte-for-byte.
struct RunManifest {
  std::string subcommand;
  std::uint64_t master_seed = 0;
  std::string log_blob_sha1;  // empty when no input log (generate)
  nlohmann::json config;      // subcommand-specific resolved flags
};

nlohmann::json to_json(const RunManifest& manifest);
nlohmann::json to_json(const FinalSizeEstimate& estimate);
nlohmann::json to_json(const ConstraintReport& report);
nlohmann::json to_json(const TradeoffPoint& point);
nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const ChannelComparison& comparison);

// Shortest round-trip decimal rendering; the fixed formatter behind all
// byte-reproducible outputs.
std::string format_number(double value);

// threshold,mean_final_size,std_error,productivity_multiplier,n_events_retained
// An undefined multiplier is written as "nan".
std::string sweep_csv(const SweepResult& result);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Serialized with sorted keys and a trailing newline.
std::string render_report(const nlohmann::json& report);

}  // namespace contagion

#endif  // CONTAGION_REPORTS_HPP
