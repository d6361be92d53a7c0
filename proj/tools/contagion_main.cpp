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

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contagion/contact_log.hpp"
#include "contagion/epidemic.hpp"
#include "contagion/errors.hpp"
#include "contagion/interventions.hpp"
#include "contagion/network_metrics.hpp"
#include "contagion/reports.hpp"
#include "contagion/sha1.hpp"
#include "contagion/tradeoff.hpp"
#include "contagion/version.hpp"

namespace {

using namespace contagion;

enum class ChannelChoice { Interaction, Proximity, All };

const std::map<std::string, ChannelChoice> kChannelNames = {
    {"interaction", ChannelChoice::Interaction},
    {"proximity", ChannelChoice::Proximity},
    {"all", ChannelChoice::All},
};

// Aggregation needs one concrete channel.
const std::map<std::string, ChannelChoice> kSingleChannelNames = {
    {"interaction", ChannelChoice::Interaction},
    {"proximity", ChannelChoice::Proximity},
};

const char* channel_name(ChannelChoice choice) {
  switch (choice) {
    case ChannelChoice::Interaction:
      return "interaction";
    case ChannelChoice::Proximity:
      return "proximity";
    default:
      return "all";
  }
}

ContactLog project(const ContactLog& log, ChannelChoice choice) {
  switch (choice) {
    case ChannelChoice::Interaction:
      return filter_channel(log, Channel::Interaction);
    case ChannelChoice::Proximity:
      return filter_channel(log, Channel::Proximity);
    default:
      return log;
  }
}

// Shared simulation flags: disease parameters, seeding, randomness.
struct SimOptions {
  std::string log_path;
  double beta = 0.007;
  double gamma = 1.0 / 3.0;
  bool linear = false;
  int seed_days = 5;
  int reps = 1;
  std::uint64_t master_seed = 0;
  int workers = 1;
};

void add_sim_options(CLI::App* cmd, SimOptions& opts) {
  cmd->add_option("--log", opts.log_path, "Input contact-log CSV")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--beta", opts.beta, "Transmission rate per minute of contact")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--gamma", opts.gamma, "Recovery rate per working day")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--linear", opts.linear,
                "Use the linear duration-probability form instead of the hazard form");
  cmd->add_option("--seed-days", opts.seed_days,
                  "Introduce the disease at the start of each of the first N days")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--reps", opts.reps, "Repetitions per (individual, day) introduction")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--master-seed", opts.master_seed, "Root seed for all randomness")
      ->capture_default_str();
  cmd->add_option("--workers", opts.workers, "Worker threads (outputs do not depend on this)")
      ->envname("CONTAGION_WORKERS")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

DiseaseParams disease_params(const SimOptions& opts) {
  DiseaseParams params;
  params.beta_per_minute = opts.beta;
  params.gamma_per_day = opts.gamma;
  params.form = opts.linear ? TransmissionForm::Linear : TransmissionForm::Hazard;
  return params;
}

SeedingProtocol protocol_for(const SimOptions& opts, const ContactLog& log) {
  SeedingProtocol protocol = SeedingProtocol::defaults_for(log);
  protocol.seed_days.clear();
  const int first = std::min(opts.seed_days, log.n_days);
  for (int d = 0; d < first; ++d) {
    protocol.seed_days.push_back(d);
  }
  protocol.repetitions = opts.reps;
  return protocol;
}

nlohmann::json sim_config_json(const SimOptions& opts, const SeedingProtocol& protocol) {
  nlohmann::json j;
  j["beta_per_minute"] = opts.beta;
  j["gamma_per_day"] = opts.gamma;
  j["transmission_form"] = opts.linear ? "linear" : "hazard";
  j["seed_individuals"] = "all";
  j["seed_days"] = protocol.seed_days;
  j["repetitions"] = opts.reps;
  return j;
}

void emit(const std::string& out_path, const nlohmann::json& report) {
  const std::string text = render_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
}

struct GenerateOptions {
  SyntheticLogConfig config;
  std::string out_path;
};

int cmd_generate(const GenerateOptions& opts) {
  const ContactLog log = generate_synthetic(opts.config);
  write_log(log, opts.out_path);
  std::size_t n_interaction = 0;
  for (const auto& event : log.events) {
    if (event.channel == Channel::Interaction) {
      ++n_interaction;
    }
  }
  std::cout << "wrote " << opts.out_path << ": " << log.n_people << " people, " << log.n_days
            << " days, " << format_number(log.day_length) << " min/day\n"
            << "events: " << n_interaction << " interaction, "
            << log.events.size() - n_interaction << " proximity, " << log.events.size()
            << " total\n";
  return 0;
}

struct SimulateOptions {
  SimOptions sim;
  ChannelChoice channel = ChannelChoice::Interaction;
  std::optional<int> isolate_lag;
  std::string out_path;
};

int cmd_simulate(const SimulateOptions& opts) {
  const std::string raw = read_file(opts.sim.log_path);
  const ContactLog full = parse_log(raw, opts.sim.log_path);
  const ContactLog log = project(full, opts.channel);
  const SeedingProtocol protocol = protocol_for(opts.sim, log);

  RunManifest manifest;
  manifest.subcommand = "simulate";
  manifest.master_seed = opts.sim.master_seed;
  manifest.log_blob_sha1 = git_blob_sha1(raw);
  manifest.config = sim_config_json(opts.sim, protocol);
  manifest.config["channel"] = channel_name(opts.channel);
  manifest.config["isolate_lag_days"] =
      opts.isolate_lag.has_value() ? nlohmann::json(*opts.isolate_lag) : nlohmann::json();

  nlohmann::json report;
  report["manifest"] = to_json(manifest);
  if (opts.isolate_lag.has_value()) {
    const IsolationEstimate estimate = estimate_with_isolation(
        log, disease_params(opts.sim), InterventionSpec::isolate(*opts.isolate_lag), protocol,
        opts.sim.master_seed, opts.sim.workers);
    report["estimate"] = to_json(estimate.final_size);
    report["absence"] = {
        {"mean_person_days_absent", estimate.mean_person_days_absent},
        {"mean_absence_fraction", estimate.mean_absence_fraction},
        {"effective_productivity", effective_productivity(1.0, estimate.mean_absence_fraction)},
    };
  } else {
    const FinalSizeEstimate estimate =
        estimate_final_size(log, disease_params(opts.sim), protocol, opts.sim.master_seed,
                            opts.sim.workers);
    report["estimate"] = to_json(estimate);
  }
  emit(opts.out_path, report);
  return 0;
}

struct SweepOptions {
  SimOptions sim;
  std::string mode;
  std::vector<double> thresholds;
  std::string out_prefix;
};

int cmd_sweep(const SweepOptions& opts) {
  const std::string raw = read_file(opts.sim.log_path);
  const ContactLog full = parse_log(raw, opts.sim.log_path);
  // The transmission model and the constraint both live on the
  // interaction channel; proximity events do not enter a sweep.
  const ContactLog log = filter_channel(full, Channel::Interaction);

  SweepConfig config;
  config.mode = opts.mode == "short" ? InterventionKind::RemoveShort
                                     : InterventionKind::RemoveLong;
  config.thresholds = opts.thresholds;
  if (config.thresholds.empty()) {
    config.thresholds = opts.mode == "short" ? SweepConfig::default_short_thresholds()
                                             : SweepConfig::default_long_thresholds();
  }
  config.params = disease_params(opts.sim);
  config.protocol = protocol_for(opts.sim, log);
  config.master_seed = opts.sim.master_seed;
  config.workers = opts.sim.workers;

  const SweepResult result = run_sweep(log, config);

  RunManifest manifest;
  manifest.subcommand = "sweep";
  manifest.master_seed = opts.sim.master_seed;
  manifest.log_blob_sha1 = git_blob_sha1(raw);
  manifest.config = sim_config_json(opts.sim, config.protocol);
  manifest.config["mode"] = opts.mode;
  manifest.config["thresholds"] = config.thresholds;
  manifest.config["channel"] = "interaction";

  nlohmann::json report;
  report["manifest"] = to_json(manifest);
  report["sweep"] = to_json(result);

  write_file(opts.out_prefix + ".csv", sweep_csv(result));
  write_file(opts.out_prefix + ".json", render_report(report));
  std::cout << "wrote " << opts.out_prefix << ".csv and " << opts.out_prefix << ".json\n";
  return 0;
}

struct ConstraintOptions {
  std::string log_path;
  ChannelChoice channel = ChannelChoice::Interaction;
  std::string out_path;
};

int cmd_constraint(const ConstraintOptions& opts) {
  const std::string raw = read_file(opts.log_path);
  const ContactLog log = parse_log(raw, opts.log_path);
  const Channel channel =
      opts.channel == ChannelChoice::Proximity ? Channel::Proximity : Channel::Interaction;
  const ConstraintReport report = constraint_report(aggregate(log, channel));

  RunManifest manifest;
  manifest.subcommand = "constraint";
  manifest.master_seed = 0;
  manifest.log_blob_sha1 = git_blob_sha1(raw);
  manifest.config = {{"channel", channel == Channel::Proximity ? "proximity" : "interaction"}};

  nlohmann::json out;
  out["manifest"] = to_json(manifest);
  out["report"] = to_json(report);
  emit(opts.out_path, out);
  return 0;
}

struct CompareOptions {
  SimOptions sim;
  std::string out_path;
};

int cmd_compare(const CompareOptions& opts) {
  const std::string raw = read_file(opts.sim.log_path);
  const ContactLog log = parse_log(raw, opts.sim.log_path);
  const SeedingProtocol protocol = protocol_for(opts.sim, log);
  const ChannelComparison comparison =
      compare_channels(log, disease_params(opts.sim), protocol, opts.sim.master_seed,
                       opts.sim.workers);

  RunManifest manifest;
  manifest.subcommand = "compare";
  manifest.master_seed = opts.sim.master_seed;
  manifest.log_blob_sha1 = git_blob_sha1(raw);
  manifest.config = sim_config_json(opts.sim, protocol);

  nlohmann::json report;
  report["manifest"] = to_json(manifest);
  report["comparison"] = to_json(comparison);
  emit(opts.out_path, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               " - workplace contact-log epidemic and productivity simulator"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand(
      "generate", "Create a reproducible synthetic workplace contact log");
  generate->add_option("--people", gen.config.n_people, "Roster size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate->add_option("--days", gen.config.n_days, "Working days")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate->add_option("--day-length", gen.config.day_length, "Minutes per working day")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate
      ->add_option("--mean-events", gen.config.mean_events_per_person_day,
                   "Expected contacts per person per day")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  generate
      ->add_option("--median-duration", gen.config.duration.median_minutes,
                   "Median contact duration in minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate
      ->add_option("--duration-shape", gen.config.duration.sigma,
                   "Log-normal shape of contact durations")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  generate
      ->add_option("--affinity", gen.config.pair_affinity_concentration,
                   "Dirichlet concentration of partner preferences")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate
      ->add_option("--proximity-inflation", gen.config.proximity_inflation,
                   "Proximity events per interaction event")
      ->capture_default_str()
      ->check(CLI::Range(1.0, 1e9));
  generate->add_option("--seed", gen.config.master_seed, "Generator master seed")
      ->capture_default_str();
  generate->add_option("--out", gen.out_path, "Output CSV path")->required();

  SimulateOptions sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Estimate the mean final epidemic size under a seeding protocol");
  add_sim_options(simulate, sim.sim);
  simulate->add_option("--channel", sim.channel, "Contact channel driving transmission")
      ->transform(CLI::CheckedTransformer(kChannelNames, CLI::ignore_case))
      ->default_str("interaction");
  int isolate_lag = 0;
  auto* lag_opt = simulate->add_option(
      "--isolate-lag", isolate_lag,
      "Sick-day policy: days between infection and staying home");
  simulate->add_option("--out", sim.out_path, "Output JSON path (stdout when omitted)");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Trade off epidemic size against productivity over a threshold grid");
  add_sim_options(sweep_cmd, sweep.sim);
  sweep_cmd->add_option("--mode", sweep.mode, "short: drop brief contacts; long: drop meetings")
      ->required()
      ->check(CLI::IsMember({"short", "long"}));
  sweep_cmd->add_option("--thresholds", sweep.thresholds,
                        "Ascending threshold minutes (default grid per mode)")
      ->delimiter(',');
  sweep_cmd->add_option("--out-prefix", sweep.out_prefix, "Writes <prefix>.csv and <prefix>.json")
      ->required();

  ConstraintOptions constraint;
  auto* constraint_cmd =
      app.add_subcommand("constraint", "Burt constraint report for a contact network");
  constraint_cmd->add_option("--log", constraint.log_path, "Input contact-log CSV")
      ->required()
      ->check(CLI::ExistingFile);
  constraint_cmd->add_option("--channel", constraint.channel, "Channel to aggregate")
      ->transform(CLI::CheckedTransformer(kSingleChannelNames, CLI::ignore_case))
      ->default_str("interaction");
  constraint_cmd->add_option("--out", constraint.out_path,
                             "Output JSON path (stdout when omitted)");

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Compare interaction-driven and proximity-driven infection patterns");
  add_sim_options(compare_cmd, compare.sim);
  compare_cmd->add_option("--out", compare.out_path, "Output JSON path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return cmd_generate(gen);
    }
    if (simulate->parsed()) {
      if (lag_opt->count() > 0) {
        if (isolate_lag < 0) {
          throw std::invalid_argument("--isolate-lag must be non-negative");
        }
        sim.isolate_lag = isolate_lag;
      }
      return cmd_simulate(sim);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(sweep);
    }
    if (constraint_cmd->parsed()) {
      return cmd_constraint(constraint);
    }
    if (compare_cmd->parsed()) {
      return cmd_compare(compare);
    }
  } catch (const std::exception& error) {
    std::cerr << kToolName << ": error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
