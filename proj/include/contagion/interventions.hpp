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

#ifndef CONTAGION_INTERVENTIONS_HPP
#define CONTAGION_INTERVENTIONS_HPP

#include <cstdint>
#include <utility>

#include "contagion/contact_log.hpp"
#include "contagion/epidemic.hpp"

namespace contagion {

enum class InterventionKind : std::uint8_t {
  None = 0,
  RemoveShort = 1,          // drop events with duration strictly below a threshold
  RemoveLong = 2,           // drop events with duration strictly above a threshold
  IsolateWhenInfectious = 3 // send infected individuals home after a lag
};

struct InterventionSpec {
  InterventionKind kind = InterventionKind::None;
  double threshold_minutes = 0.0;
  int lag_days = 1;  // day 0 spent at work, home from day 1

  static InterventionSpec none() { return {}; }
  static InterventionSpec remove_short(double threshold) {
    return {InterventionKind::RemoveShort, threshold, 1};
  }
  static InterventionSpec remove_long(double threshold) {
    return {InterventionKind::RemoveLong, threshold, 1};
  }
  static InterventionSpec isolate(int lag_days) {
    return {InterventionKind::IsolateWhenInfectious, 0.0, lag_days};
  }
};

void validate(const InterventionSpec& spec);

// Staffing cost of a sick-day policy: a person-day counts whenever someone is
// flagged home for any part of a working day.
struct AbsenceReport {
  long person_days_absent = 0;
  double absence_fraction = 0.0;  // person_days_absent / (n_people * n_days)
};

// Event-set filters. Boundary events (duration exactly at the threshold)
// survive both filters, so RemoveShort(t) and RemoveLong(t) together cover
// the log and overlap exactly on the boundary.
ContactLog apply_static(const ContactLog& log, const InterventionSpec& spec);

// simulate_once plus the sick-day rule: an individual infected at time tau is
// absent from the start of day(tau) + lag_days until recovery, and their
// events in that window are suppressed. Large lags reduce to simulate_once
// with zero absence.
std::pair<EpidemicOutcome, AbsenceReport> simulate_with_isolation(
    const ContactLog& log, const DiseaseParams& params, const InterventionSpec& spec,
    PersonId seed, int seed_day, std::uint64_t replicate, std::uint64_t master_seed);

// The sick-day policy run over a whole seeding protocol, with absence costs
// averaged across runs.
struct IsolationEstimate {
  FinalSizeEstimate final_size;
  double mean_person_days_absent = 0.0;
  double mean_absence_fraction = 0.0;
};

IsolationEstimate estimate_with_isolation(const ContactLog& log, const DiseaseParams& params,
                                          const InterventionSpec& spec,
                                          const SeedingProtocol& protocol,
                                          std::uint64_t master_seed, int workers = 1);

}  // namespace contagion

#endif  // CONTAGION_INTERVENTIONS_HPP
