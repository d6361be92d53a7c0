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

#include "contagion/reports.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "contagion/errors.hpp"
#include "contagion/version.hpp"

namespace contagion {

namespace {

nlohmann::json json_or_null(const std::optional<double>& value) {
  if (value.has_value()) {
    return *value;
  }
  return nullptr;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

nlohmann::json to_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["subcommand"] = manifest.subcommand;
  j["master_seed"] = manifest.master_seed;
  if (!manifest.log_blob_sha1.empty()) {
    j["log_blob_sha1"] = manifest.log_blob_sha1;
  }
  j["config"] = manifest.config;
  return j;
}

nlohmann::json to_json(const FinalSizeEstimate& estimate) {
  nlohmann::json j;
  j["mean"] = estimate.mean;
  j["std_error"] = estimate.std_error;
  j["n_runs"] = estimate.n_runs;
  j["per_run"] = estimate.per_run;
  return j;
}

nlohmann::json to_json(const ConstraintReport& report) {
  nlohmann::json j;
  nlohmann::json per_node = nlohmann::json::array();
  for (const auto& value : report.per_node) {
    per_node.push_back(json_or_null(value));
  }
  j["per_node"] = std::move(per_node);
  j["mean"] = json_or_null(report.mean);
  j["sd"] = json_or_null(report.sd);
  j["n_isolates"] = report.n_isolates;
  return j;
}

nlohmann::json to_json(const TradeoffPoint& point) {
  nlohmann::json j;
  j["threshold"] = point.threshold;
  j["mean_final_size"] = point.mean_final_size;
  j["std_error"] = point.std_error;
  j["productivity_multiplier"] = json_or_null(point.productivity_multiplier);
  j["n_events_retained"] = point.n_events_retained;
  return j;
}

nlohmann::json to_json(const SweepResult& result) {
  nlohmann::json j;
  j["baseline"] = {
      {"mean_final_size", result.baseline_mean_final_size},
      {"constraint_mean", json_or_null(result.baseline_constraint.mean)},
      {"constraint_sd", json_or_null(result.baseline_constraint.sd)},
      {"n_isolates", result.baseline_constraint.n_isolates},
      {"n_events", result.n_events_total},
  };
  nlohmann::json points = nlohmann::json::array();
  for (const auto& point : result.points) {
    points.push_back(to_json(point));
  }
  j["points"] = std::move(points);
  return j;
}

nlohmann::json to_json(const ChannelComparison& comparison) {
  nlohmann::json j;
  j["interaction"] = to_json(comparison.interaction);
  j["proximity"] = to_json(comparison.proximity);
  j["interaction_frequency"] = comparison.interaction_frequency;
  j["proximity_frequency"] = comparison.proximity_frequency;
  j["rank_correlation"] = json_or_null(comparison.rank_correlation);
  return j;
}

std::string sweep_csv(const SweepResult& result) {
  std::string csv =
      "threshold,mean_final_size,std_error,productivity_multiplier,n_events_retained\n";
  for (const auto& point : result.points) {
    csv += format_number(point.threshold);
    csv += ',';
    csv += format_number(point.mean_final_size);
    csv += ',';
    csv += format_number(point.std_error);
    csv += ',';
    csv += point.productivity_multiplier.has_value()
               ? format_number(*point.productivity_multiplier)
               : "nan";
    csv += ',';
    csv += std::to_string(point.n_events_retained);
    csv += '\n';
  }
  return csv;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading " + path.string());
  }
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

std::string render_report(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

}  // namespace contagion
