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

#ifndef CONTAGION_EPIDEMIC_HPP
#define CONTAGION_EPIDEMIC_HPP

#include <cstdint>
#include <vector>

#include "contagion/contact_log.hpp"

namespace contagion {

// Duration -> infection probability mapping. Hazard is the default reading of
// a per-minute rate; the linear form is kept for sensitivity checks and
// saturates at 1 for durations past 1/beta.
enum class TransmissionForm : std::uint8_t { Hazard = 0, Linear = 1 };

struct DiseaseParams {
  double beta_per_minute = 0.007;
  double gamma_per_day = 1.0 / 3.0;
  double incubation_days = 0.0;  // the model only supports immediate infectiousness
  TransmissionForm form = TransmissionForm::Hazard;
};

void validate(const DiseaseParams& params);

// Hazard: 1 - exp(-beta * duration). Linear: min(1, beta * duration).
// Monotone non-decreasing in duration; throws on negative duration.
double transmission_probability(double duration_minutes, const DiseaseParams& params);

// The set of (seed individual, introduction day) pairs runs are averaged
// over, each repeated `repetitions` times with fresh randomness.
struct SeedingProtocol {
  std::vector<PersonId> seed_individuals;
  std::vector<int> seed_days;
  int repetitions = 1;

  // Every individual, introduced at the start of each of the first
  // min(5, n_days) days, once.
  static SeedingProtocol defaults_for(const ContactLog& log);
};

void validate(const SeedingProtocol& protocol, const ContactLog& log);

struct InfectionRecord {
  PersonId infector = 0;
  PersonId infectee = 0;
  std::size_t event_index = 0;  // position in the simulated log's event vector
  double time = 0.0;

  friend bool operator==(const InfectionRecord&, const InfectionRecord&) = default;
};

struct EpidemicOutcome {
  PersonId seed = 0;
  int seed_day = 0;
  std::uint64_t replicate = 0;
  int final_size = 1;  // ever-infected count, including the seed
  std::vector<InfectionRecord> infection_records;

  friend bool operator==(const EpidemicOutcome&, const EpidemicOutcome&) = default;
};

// One stochastic pass over the log in event order. The seed is infectious
// from the start of seed_day; infected individuals transmit immediately and
// recover after an exponential infectious period (mean 1/gamma days). The
// outcome is a pure function of all arguments.
//
// Randomness is key-derived: the transmission draw for an event depends only
// on (master_seed, replicate, a, b, start, duration), and the recovery draw
// only on (master_seed, replicate, person). Filtered logs and channel
// projections therefore replay exactly the same coin flips for the events
// they retain.
EpidemicOutcome simulate_once(const ContactLog& log, const DiseaseParams& params,
                              PersonId seed, int seed_day, std::uint64_t replicate,
                              std::uint64_t master_seed);

struct FinalSizeEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample SD / sqrt(n); 0 for a single run
  std::size_t n_runs = 0;
  std::vector<int> per_run;
};

FinalSizeEstimate summarize_final_sizes(const std::vector<int>& per_run);

// Replicate key for one (seed, day, repetition) combination. Unique per
// combination and independent of which other combinations a protocol
// enumerates, so estimates are built from statistically independent runs
// while intervention comparisons stay run-for-run coupled.
std::uint64_t run_key(PersonId seed, int seed_day, int repetition);

// All protocol runs, in (seed, day, repetition) enumeration order. The result
// is identical for any worker count.
std::vector<EpidemicOutcome> run_protocol(const ContactLog& log, const DiseaseParams& params,
                                          const SeedingProtocol& protocol,
                                          std::uint64_t master_seed, int workers = 1);

FinalSizeEstimate estimate_final_size(const ContactLog& log, const DiseaseParams& params,
                                      const SeedingProtocol& protocol,
                                      std::uint64_t master_seed, int workers = 1);

}  // namespace contagion

#endif  // CONTAGION_EPIDEMIC_HPP
