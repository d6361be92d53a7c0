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

#include "contagion/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace contagion {

std::vector<double> SweepConfig::default_short_thresholds() {
  return {0.0, 1.0, 2.0, 3.0, 5.0, 10.0, 15.0, 20.0, 30.0};
}

std::vector<double> SweepConfig::default_long_thresholds() {
  return {10.0, 15.0, 20.0, 26.0, 30.0, 45.0, 60.0, 120.0};
}

void validate(const SweepConfig& config, const ContactLog& log) {
  if (config.mode != InterventionKind::RemoveShort &&
      config.mode != InterventionKind::RemoveLong) {
    throw std::invalid_argument("sweep: mode must be RemoveShort or RemoveLong");
  }
  if (config.thresholds.empty()) {
    throw std::invalid_argument("sweep: threshold list is empty");
  }
  double previous = -1.0;
  for (const double threshold : config.thresholds) {
    if (!(threshold >= 0.0)) {
      throw std::invalid_argument("sweep: thresholds must be non-negative");
    }
    if (threshold <= previous) {
      throw std::invalid_argument("sweep: thresholds must be strictly ascending");
    }
    previous = threshold;
  }
  validate(config.protocol, log);
  validate(config.params);
}

SweepResult run_sweep(const ContactLog& log, const SweepConfig& config) {
  validate(config, log);

  SweepResult result;
  result.n_events_total = log.events.size();
  result.baseline_constraint = constraint_report(aggregate(log, Channel::Interaction));
  result.baseline_mean_final_size =
      estimate_final_size(log, config.params, config.protocol, config.master_seed,
                          config.workers)
          .mean;

  const bool baseline_normalizable = result.baseline_constraint.sd.has_value() &&
                                     *result.baseline_constraint.sd > 0.0;

  result.points.reserve(config.thresholds.size());
  for (const double threshold : config.thresholds) {
    const InterventionSpec spec = config.mode == InterventionKind::RemoveShort
                                      ? InterventionSpec::remove_short(threshold)
                                      : InterventionSpec::remove_long(threshold);
    const ContactLog filtered = apply_static(log, spec);
    const FinalSizeEstimate estimate = estimate_final_size(
        filtered, config.params, config.protocol, config.master_seed, config.workers);

    TradeoffPoint point;
    point.threshold = threshold;
    point.mean_final_size = estimate.mean;
    point.std_error = estimate.std_error;
    point.n_events_retained = filtered.events.size();
    if (baseline_normalizable) {
      const ConstraintReport scenario =
          constraint_report(aggregate(filtered, Channel::Interaction));
      if (scenario.mean.has_value()) {
        point.productivity_multiplier = productivity_multiplier(
            result.baseline_constraint, scenario, config.productivity);
      }
    }
    result.points.push_back(point);
  }
  return result;
}

namespace {

// Average ranks, ties share the mean of their positions.
std::vector<double> ranks_of(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = shared;
    }
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman_rank_correlation(std::span<const double> x,
                                                std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("spearman: vectors must have equal length");
  }
  if (x.empty()) {
    return std::nullopt;
  }
  if (std::equal(x.begin(), x.end(), y.begin())) {
    return 1.0;
  }
  const auto rx = ranks_of(x);
  const auto ry = ranks_of(y);
  const double n = static_cast<double>(x.size());
  const double mean_rank = (n + 1.0) / 2.0;
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = rx[i] - mean_rank;
    const double dy = ry[i] - mean_rank;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) {
    return std::nullopt;
  }
  return cov / std::sqrt(var_x * var_y);
}

ChannelComparison compare_channels(const ContactLog& log, const DiseaseParams& params,
                                   const SeedingProtocol& protocol,
                                   std::uint64_t master_seed, int workers) {
  ChannelComparison comparison;

  auto frequency = [&](const std::vector<EpidemicOutcome>& outcomes) {
    std::vector<double> freq(static_cast<std::size_t>(log.n_people), 0.0);
    for (const auto& outcome : outcomes) {
      freq[static_cast<std::size_t>(outcome.seed)] += 1.0;
      for (const auto& record : outcome.infection_records) {
        freq[static_cast<std::size_t>(record.infectee)] += 1.0;
      }
    }
    for (auto& f : freq) {
      f /= static_cast<double>(outcomes.size());
    }
    return freq;
  };

  auto summarize = [](const std::vector<EpidemicOutcome>& outcomes) {
    std::vector<int> per_run(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      per_run[i] = outcomes[i].final_size;
    }
    return summarize_final_sizes(per_run);
  };

  const auto interaction_runs = run_protocol(filter_channel(log, Channel::Interaction),
                                             params, protocol, master_seed, workers);
  const auto proximity_runs = run_protocol(filter_channel(log, Channel::Proximity), params,
                                           protocol, master_seed, workers);

  comparison.interaction = summarize(interaction_runs);
  comparison.proximity = summarize(proximity_runs);
  comparison.interaction_frequency = frequency(interaction_runs);
  comparison.proximity_frequency = frequency(proximity_runs);
  comparison.rank_correlation = spearman_rank_correlation(comparison.interaction_frequency,
                                                          comparison.proximity_frequency);
  return comparison;
}

double effective_productivity(double multiplier, double absence_fraction) {
  return multiplier * (1.0 - absence_fraction);
}

}  // namespace contagion
