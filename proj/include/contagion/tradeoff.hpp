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

#ifndef CONTAGION_TRADEOFF_HPP
#define CONTAGION_TRADEOFF_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "contagion/contact_log.hpp"
#include "contagion/epidemic.hpp"
#include "contagion/interventions.hpp"
#include "contagion/network_metrics.hpp"

namespace contagion {

struct SweepConfig {
  InterventionKind mode = InterventionKind::RemoveShort;
  std::vector<double> thresholds;  // strictly ascending minutes
  DiseaseParams params;
  SeedingProtocol protocol;
  std::uint64_t master_seed = 0;
  ProductivityModel productivity;
  int workers = 1;

  // Grids bracketing the casual-chat and long-meeting regimes.
  static std::vector<double> default_short_thresholds();  // {0,1,2,3,5,10,15,20,30}
  static std::vector<double> default_long_thresholds();   // {10,15,20,26,30,45,60,120}
};

void validate(const SweepConfig& config, const ContactLog& log);

struct TradeoffPoint {
  double threshold = 0.0;
  double mean_final_size = 0.0;
  double std_error = 0.0;
  std::optional<double> productivity_multiplier;  // nullopt when unnormalizable
  std::size_t n_events_retained = 0;
};

struct SweepResult {
  std::vector<TradeoffPoint> points;
  double baseline_mean_final_size = 0.0;
  ConstraintReport baseline_constraint;
  std::size_t n_events_total = 0;
};

// One tradeoff curve: for each threshold, filter the log, re-estimate the
// final size with the same master seed (common random numbers across the
// whole sweep), and price the constraint shift against the unfiltered
// baseline network.
SweepResult run_sweep(const ContactLog& log, const SweepConfig& config);

struct ChannelComparison {
  FinalSizeEstimate interaction;
  FinalSizeEstimate proximity;
  std::vector<double> interaction_frequency;  // per person, fraction of runs infected
  std::vector<double> proximity_frequency;
  std::optional<double> rank_correlation;  // Spearman; nullopt when ranks are degenerate
};

// Runs the same protocol on the interaction-only and proximity-only
// projections of the log and compares who gets infected under each.
ChannelComparison compare_channels(const ContactLog& log, const DiseaseParams& params,
                                   const SeedingProtocol& protocol,
                                   std::uint64_t master_seed, int workers = 1);

// Spearman rank correlation with average ranks for ties. Exactly equal
// vectors correlate at 1 even when constant; otherwise a constant vector has
// no defined ranking and yields nullopt.
std::optional<double> spearman_rank_correlation(std::span<const double> x,
                                                std::span<const double> y);

// Default rule for pricing a sick-day policy: the network multiplier scaled
// by the staffing lost to absence.
double effective_productivity(double multiplier, double absence_fraction);

}  // namespace contagion

#endif  // CONTAGION_TRADEOFF_HPP
