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

#include "contagion/epidemic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "contagion/parallel.hpp"
#include "contagion/rng.hpp"
#include "engine_detail.hpp"

namespace contagion {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

constexpr std::uint64_t kTransmitTag = 0x7472616e736d6974ull;  // "transmit"
constexpr std::uint64_t kRecoverTag = 0x7265636f766572ull;     // "recover"

inline std::uint64_t pair_word(PersonId a, PersonId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(b));
}

// The coin flip for an event is a function of the event's content, not of its
// position, so any log that retains the event replays the same draw. The
// channel is deliberately excluded: an interaction and its radio-side twin
// describe the same physical contact.
inline double transmission_uniform(std::uint64_t master_seed, std::uint64_t replicate,
                                   const ContactEvent& event) {
  return rng::keyed_uniform(master_seed,
                            {kTransmitTag, replicate, pair_word(event.a, event.b),
                             std::bit_cast<std::uint64_t>(event.start),
                             std::bit_cast<std::uint64_t>(event.duration)});
}

// Infectious period in days. Keyed by person only, so an individual keeps the
// same draw no matter when (or through which event) they get infected.
inline double infectious_period_days(std::uint64_t master_seed, std::uint64_t replicate,
                                     PersonId person, double gamma_per_day) {
  if (gamma_per_day <= 0.0) {
    return kInfinity;
  }
  const double u = rng::keyed_uniform(
      master_seed,
      {kRecoverTag, replicate, static_cast<std::uint64_t>(static_cast<std::uint32_t>(person))});
  return -std::log1p(-u) / gamma_per_day;
}

}  // namespace

void validate(const DiseaseParams& params) {
  if (!(params.beta_per_minute >= 0.0) || !std::isfinite(params.beta_per_minute)) {
    throw std::invalid_argument("disease params: beta_per_minute must be finite and >= 0");
  }
  if (!(params.gamma_per_day >= 0.0) || !std::isfinite(params.gamma_per_day)) {
    throw std::invalid_argument("disease params: gamma_per_day must be finite and >= 0");
  }
  if (params.incubation_days != 0.0) {
    throw std::invalid_argument("disease params: only a nil incubation period is supported");
  }
}

double transmission_probability(double duration_minutes, const DiseaseParams& params) {
  if (duration_minutes < 0.0) {
    throw std::invalid_argument("transmission_probability: duration must be non-negative");
  }
  if (params.form == TransmissionForm::Linear) {
    return std::min(1.0, params.beta_per_minute * duration_minutes);
  }
  return -std::expm1(-params.beta_per_minute * duration_minutes);
}

SeedingProtocol SeedingProtocol::defaults_for(const ContactLog& log) {
  SeedingProtocol protocol;
  protocol.seed_individuals.resize(static_cast<std::size_t>(log.n_people));
  for (int i = 0; i < log.n_people; ++i) {
    protocol.seed_individuals[static_cast<std::size_t>(i)] = i;
  }
  const int first_week = std::min(5, log.n_days);
  for (int d = 0; d < first_week; ++d) {
    protocol.seed_days.push_back(d);
  }
  protocol.repetitions = 1;
  return protocol;
}

void validate(const SeedingProtocol& protocol, const ContactLog& log) {
  if (protocol.seed_individuals.empty()) {
    throw std::invalid_argument("seeding protocol: seed individual set is empty");
  }
  if (protocol.seed_days.empty()) {
    throw std::invalid_argument("seeding protocol: seed day set is empty");
  }
  if (protocol.repetitions < 1) {
    throw std::invalid_argument("seeding protocol: repetitions must be at least 1");
  }
  for (const PersonId person : protocol.seed_individuals) {
    if (person < 0 || person >= log.n_people) {
      throw std::invalid_argument("seeding protocol: seed individual " +
                                  std::to_string(person) + " outside roster");
    }
    if (person >= (1 << 20)) {
      throw std::invalid_argument("seeding protocol: person ids above 2^20 are unsupported");
    }
  }
  for (const int day : protocol.seed_days) {
    if (day < 0 || day >= log.n_days) {
      throw std::invalid_argument("seeding protocol: seed day " + std::to_string(day) +
                                  " outside the log horizon");
    }
    if (day >= (1 << 12)) {
      throw std::invalid_argument("seeding protocol: day indices above 2^12 are unsupported");
    }
  }
  auto unique_sorted = [](auto values) {
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
  };
  if (!unique_sorted(protocol.seed_individuals) || !unique_sorted(protocol.seed_days)) {
    throw std::invalid_argument("seeding protocol: seed individuals and days must be unique");
  }
}

std::uint64_t run_key(PersonId seed, int seed_day, int repetition) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(seed)) << 44) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(seed_day)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(repetition));
}

namespace detail {

EpidemicOutcome simulate_engine(const ContactLog& log, const DiseaseParams& params,
                                PersonId seed, int seed_day, std::uint64_t replicate,
                                std::uint64_t master_seed, const int* isolation_lag_days,
                                long* person_days_absent) {
  validate(params);
  if (seed < 0 || seed >= log.n_people) {
    throw std::invalid_argument("simulate: seed individual " + std::to_string(seed) +
                                " outside roster of " + std::to_string(log.n_people));
  }
  if (seed_day < 0 || seed_day >= log.n_days) {
    throw std::invalid_argument("simulate: seed day " + std::to_string(seed_day) +
                                " outside horizon of " + std::to_string(log.n_days) + " days");
  }
  if (isolation_lag_days != nullptr && *isolation_lag_days < 0) {
    throw std::invalid_argument("simulate: isolation lag must be non-negative");
  }

  const auto n = static_cast<std::size_t>(log.n_people);
  std::vector<double> infected_at(n, kInfinity);
  std::vector<double> recovers_at(n, kInfinity);
  std::vector<double> absent_from(n, kInfinity);

  EpidemicOutcome outcome;
  outcome.seed = seed;
  outcome.seed_day = seed_day;
  outcome.replicate = replicate;

  auto infect = [&](PersonId person, double when) {
    const auto p = static_cast<std::size_t>(person);
    infected_at[p] = when;
    recovers_at[p] =
        when + infectious_period_days(master_seed, replicate, person, params.gamma_per_day) *
                   log.day_length;
    if (isolation_lag_days != nullptr) {
      absent_from[p] = log.day_start(log.day_of(when) + *isolation_lag_days);
    }
  };

  infect(seed, log.day_start(seed_day));

  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const ContactEvent& event = log.events[i];
    const double t = event.start;
    const auto a = static_cast<std::size_t>(event.a);
    const auto b = static_cast<std::size_t>(event.b);
    const bool a_infectious = infected_at[a] <= t && t < recovers_at[a];
    const bool b_infectious = infected_at[b] <= t && t < recovers_at[b];

    PersonId source, target;
    if (a_infectious && infected_at[b] == kInfinity) {
      source = event.a;
      target = event.b;
    } else if (b_infectious && infected_at[a] == kInfinity) {
      source = event.b;
      target = event.a;
    } else {
      continue;
    }
    // A flagged individual is home sick: the contact never happens.
    if (t >= absent_from[static_cast<std::size_t>(source)]) {
      continue;
    }
    const double u = transmission_uniform(master_seed, replicate, event);
    if (u < transmission_probability(event.duration, params)) {
      infect(target, t);
      outcome.infection_records.push_back({source, target, i, t});
    }
  }

  outcome.final_size = 1 + static_cast<int>(outcome.infection_records.size());

  if (person_days_absent != nullptr) {
    long days = 0;
    const int lag = isolation_lag_days != nullptr ? *isolation_lag_days : 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (infected_at[p] == kInfinity) {
        continue;
      }
      const int first = log.day_of(infected_at[p]) + lag;
      const int last =
          recovers_at[p] == kInfinity
              ? log.n_days - 1
              : std::min(log.n_days - 1,
                         static_cast<int>(std::ceil(recovers_at[p] / log.day_length)) - 1);
      if (first <= last) {
        days += last - first + 1;
      }
    }
    *person_days_absent = days;
  }

  return outcome;
}

}  // namespace detail

EpidemicOutcome simulate_once(const ContactLog& log, const DiseaseParams& params,
                              PersonId seed, int seed_day, std::uint64_t replicate,
                              std::uint64_t master_seed) {
  return detail::simulate_engine(log, params, seed, seed_day, replicate, master_seed,
                                 nullptr, nullptr);
}

FinalSizeEstimate summarize_final_sizes(const std::vector<int>& per_run) {
  FinalSizeEstimate estimate;
  estimate.per_run = per_run;
  estimate.n_runs = per_run.size();
  if (per_run.empty()) {
    return estimate;
  }
  double sum = 0.0;
  for (const int size : per_run) {
    sum += static_cast<double>(size);
  }
  estimate.mean = sum / static_cast<double>(per_run.size());
  if (per_run.size() > 1) {
    double squares = 0.0;
    for (const int size : per_run) {
      const double d = static_cast<double>(size) - estimate.mean;
      squares += d * d;
    }
    const double sample_var = squares / static_cast<double>(per_run.size() - 1);
    estimate.std_error = std::sqrt(sample_var / static_cast<double>(per_run.size()));
  }
  return estimate;
}

std::vector<EpidemicOutcome> run_protocol(const ContactLog& log, const DiseaseParams& params,
                                          const SeedingProtocol& protocol,
                                          std::uint64_t master_seed, int workers) {
  validate(protocol, log);
  validate(params);

  struct Run {
    PersonId seed;
    int day;
    int repetition;
  };
  std::vector<Run> runs;
  runs.reserve(protocol.seed_individuals.size() * protocol.seed_days.size() *
               static_cast<std::size_t>(protocol.repetitions));
  for (const PersonId seed : protocol.seed_individuals) {
    for (const int day : protocol.seed_days) {
      for (int rep = 0; rep < protocol.repetitions; ++rep) {
        runs.push_back({seed, day, rep});
      }
    }
  }

  std::vector<EpidemicOutcome> outcomes(runs.size());
  parallel_for(runs.size(), workers, [&](std::size_t i) {
    const Run& run = runs[i];
    outcomes[i] = simulate_once(log, params, run.seed, run.day,
                                run_key(run.seed, run.day, run.repetition), master_seed);
  });
  return outcomes;
}

FinalSizeEstimate estimate_final_size(const ContactLog& log, const DiseaseParams& params,
                                      const SeedingProtocol& protocol,
                                      std::uint64_t master_seed, int workers) {
  const auto outcomes = run_protocol(log, params, protocol, master_seed, workers);
  std::vector<int> per_run(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    per_run[i] = outcomes[i].final_size;
  }
  return summarize_final_sizes(per_run);
}

}  // namespace contagion
