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

#include "contagion/interventions.hpp"

#include <stdexcept>

#include "contagion/parallel.hpp"
#include "engine_detail.hpp"

namespace contagion {

void validate(const InterventionSpec& spec) {
  switch (spec.kind) {
    case InterventionKind::None:
      return;
    case InterventionKind::RemoveShort:
    case InterventionKind::RemoveLong:
      if (!(spec.threshold_minutes >= 0.0)) {
        throw std::invalid_argument("intervention: threshold must be non-negative");
      }
      return;
    case InterventionKind::IsolateWhenInfectious:
      if (spec.lag_days < 0) {
        throw std::invalid_argument("intervention: isolation lag must be non-negative");
      }
      return;
  }
  throw std::invalid_argument("intervention: unknown kind");
}

ContactLog apply_static(const ContactLog& log, const InterventionSpec& spec) {
  validate(spec);
  ContactLog filtered = log;
  switch (spec.kind) {
    case InterventionKind::None:
      return filtered;
    case InterventionKind::RemoveShort:
      std::erase_if(filtered.events, [&](const ContactEvent& e) {
        return e.duration < spec.threshold_minutes;
      });
      return filtered;
    case InterventionKind::RemoveLong:
      std::erase_if(filtered.events, [&](const ContactEvent& e) {
        return e.duration > spec.threshold_minutes;
      });
      return filtered;
    case InterventionKind::IsolateWhenInfectious:
      break;
  }
  throw std::invalid_argument(
      "apply_static: isolation is infection-dependent; use simulate_with_isolation");
}

std::pair<EpidemicOutcome, AbsenceReport> simulate_with_isolation(
    const ContactLog& log, const DiseaseParams& params, const InterventionSpec& spec,
    PersonId seed, int seed_day, std::uint64_t replicate, std::uint64_t master_seed) {
  if (spec.kind != InterventionKind::IsolateWhenInfectious) {
    throw std::invalid_argument("simulate_with_isolation: spec must be an isolation policy");
  }
  validate(spec);
  long person_days = 0;
  EpidemicOutcome outcome = detail::simulate_engine(log, params, seed, seed_day, replicate,
                                                    master_seed, &spec.lag_days, &person_days);
  AbsenceReport absence;
  absence.person_days_absent = person_days;
  const double person_days_total =
      static_cast<double>(log.n_people) * static_cast<double>(log.n_days);
  absence.absence_fraction =
      person_days_total > 0.0 ? static_cast<double>(person_days) / person_days_total : 0.0;
  return {std::move(outcome), absence};
}

IsolationEstimate estimate_with_isolation(const ContactLog& log, const DiseaseParams& params,
                                          const InterventionSpec& spec,
                                          const SeedingProtocol& protocol,
                                          std::uint64_t master_seed, int workers) {
  validate(protocol, log);
  struct Run {
    PersonId seed;
    int day;
    int repetition;
  };
  std::vector<Run> runs;
  for (const PersonId seed : protocol.seed_individuals) {
    for (const int day : protocol.seed_days) {
      for (int rep = 0; rep < protocol.repetitions; ++rep) {
        runs.push_back({seed, day, rep});
      }
    }
  }
  std::vector<int> per_run(runs.size());
  std::vector<AbsenceReport> absences(runs.size());
  parallel_for(runs.size(), workers, [&](std::size_t i) {
    const Run& run = runs[i];
    auto [outcome, absence] =
        simulate_with_isolation(log, params, spec, run.seed, run.day,
                                run_key(run.seed, run.day, run.repetition), master_seed);
    per_run[i] = outcome.final_size;
    absences[i] = absence;
  });

  IsolationEstimate estimate;
  estimate.final_size = summarize_final_sizes(per_run);
  for (const auto& absence : absences) {
    estimate.mean_person_days_absent += static_cast<double>(absence.person_days_absent);
    estimate.mean_absence_fraction += absence.absence_fraction;
  }
  if (!absences.empty()) {
    estimate.mean_person_days_absent /= static_cast<double>(absences.size());
    estimate.mean_absence_fraction /= static_cast<double>(absences.size());
  }
  return estimate;
}

}  // namespace contagion
