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

#include <cmath>
#include <set>

#include <doctest.h>

#include "contagion/interventions.hpp"
#include "support.hpp"

using namespace contagion;

namespace {

// Probability 1 for any positive duration.
DiseaseParams certain_transmission() {
  DiseaseParams params;
  params.beta_per_minute = 1e12;
  params.gamma_per_day = 0.0;
  return params;
}

ContactLog two_event_chain(double first_start, double second_start, double duration = 100.0) {
  ContactLog log;
  log.n_people = 3;
  log.n_days = 1;
  log.day_length = 480.0;
  log.events = {
      {0, 1, first_start, duration, Channel::Interaction},
      {1, 2, second_start, duration, Channel::Interaction},
  };
  canonicalize(log);
  return log;
}

}  // namespace

TEST_CASE("transmission probability hazard form") {
  const DiseaseParams params;  // beta 0.007/min
  CHECK(transmission_probability(0.0, params) == 0.0);
  CHECK(transmission_probability(1.0, params) ==
        doctest::Approx(1.0 - std::exp(-0.007)).epsilon(1e-12));
  CHECK(transmission_probability(1.0, params) == doctest::Approx(0.0069756).epsilon(1e-4));
  CHECK(transmission_probability(100.0, params) ==
        doctest::Approx(1.0 - std::exp(-0.7)).epsilon(1e-12));
  CHECK(transmission_probability(100.0, params) == doctest::Approx(0.5034147).epsilon(1e-6));

  double previous = -1.0;
  for (double d = 0.0; d <= 600.0; d += 7.5) {
    const double p = transmission_probability(d, params);
    CHECK(p >= previous);
    CHECK(p >= 0.0);
    CHECK(p < 1.0);
    previous = p;
  }
  CHECK_THROWS_AS(transmission_probability(-1.0, params), std::invalid_argument);
}

TEST_CASE("transmission probability linear form saturates") {
  DiseaseParams params;
  params.form = TransmissionForm::Linear;
  CHECK(transmission_probability(10.0, params) == doctest::Approx(0.07));
  CHECK(transmission_probability(1000.0, params) == 1.0);  // past 1/beta
  params.beta_per_minute = 0.0;
  CHECK(transmission_probability(50.0, params) == 0.0);
}

TEST_CASE("disease parameter validation") {
  DiseaseParams params;
  params.beta_per_minute = -0.1;
  CHECK_THROWS_AS(validate(params), std::invalid_argument);
  params = {};
  params.incubation_days = 1.0;
  CHECK_THROWS_AS(validate(params), std::invalid_argument);
}

TEST_CASE("chain infects forward in time only") {
  SUBCASE("A-B then B-C spreads to all three") {
    const ContactLog log = two_event_chain(10.0, 20.0);
    const EpidemicOutcome outcome = simulate_once(log, certain_transmission(), 0, 0, 0, 1);
    CHECK(outcome.final_size == 3);
    REQUIRE(outcome.infection_records.size() == 2);
    CHECK(outcome.infection_records[0].infector == 0);
    CHECK(outcome.infection_records[0].infectee == 1);
    CHECK(outcome.infection_records[0].time == 10.0);
    CHECK(outcome.infection_records[1].infector == 1);
    CHECK(outcome.infection_records[1].infectee == 2);
    CHECK(outcome.infection_records[1].time == 20.0);
  }
  SUBCASE("B-C before A-B leaves C unreachable") {
    ContactLog log;
    log.n_people = 3;
    log.n_days = 1;
    log.day_length = 480.0;
    log.events = {
        {1, 2, 10.0, 100.0, Channel::Interaction},
        {0, 1, 20.0, 100.0, Channel::Interaction},
    };
    const EpidemicOutcome outcome = simulate_once(log, certain_transmission(), 0, 0, 0, 1);
    CHECK(outcome.final_size == 2);
  }
  SUBCASE("events on the same start time chain through tie order") {
    const ContactLog log = two_event_chain(10.0, 10.0);
    const EpidemicOutcome outcome = simulate_once(log, certain_transmission(), 0, 0, 0, 1);
    CHECK(outcome.final_size == 3);  // (0,1) sorts before (1,2); infection is immediate
  }
}

TEST_CASE("beta zero never transmits") {
  DiseaseParams params;
  params.beta_per_minute = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ContactLog log = test_support::random_contact_log(seed, 8, 30);
    const EpidemicOutcome outcome = simulate_once(log, params, 0, 0, seed, 99);
    CHECK(outcome.final_size == 1);
    CHECK(outcome.infection_records.empty());
  }
}

TEST_CASE("events before the introduction moment cannot transmit") {
  const ContactLog log = two_event_chain(10.0, 20.0);
  ContactLog two_days = log;
  two_days.n_days = 2;
  // Seeding on day 1 leaves both day-0 events inert.
  const EpidemicOutcome outcome = simulate_once(two_days, certain_transmission(), 0, 1, 0, 1);
  CHECK(outcome.final_size == 1);
}

TEST_CASE("instant recovery blocks all transmission") {
  DiseaseParams params = certain_transmission();
  params.gamma_per_day = 1e12;  // infectious period shorter than any event gap
  const ContactLog log = two_event_chain(10.0, 20.0);
  const EpidemicOutcome outcome = simulate_once(log, params, 0, 0, 0, 1);
  CHECK(outcome.final_size == 1);
}

TEST_CASE("simulation is a pure function of its arguments") {
  const ContactLog log = test_support::random_contact_log(3, 8, 30);
  const DiseaseParams params;
  const EpidemicOutcome first = simulate_once(log, params, 1, 0, 7, 123);
  const EpidemicOutcome second = simulate_once(log, params, 1, 0, 7, 123);
  CHECK(first == second);
  // Different replicate or master seed re-randomizes.
  bool any_difference = false;
  for (std::uint64_t rep = 0; rep < 50 && !any_difference; ++rep) {
    any_difference = !(simulate_once(log, params, 1, 0, rep, 123) ==
                       simulate_once(log, params, 1, 0, rep, 124));
  }
  CHECK(any_difference);
}

TEST_CASE("infection records form a tree rooted at the seed") {
  DiseaseParams params;
  params.beta_per_minute = 0.05;  // strong but not certain
  params.gamma_per_day = 0.5;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ContactLog log = test_support::random_contact_log(seed + 100, 8, 30);
    const EpidemicOutcome outcome = simulate_once(log, params, 0, 0, seed, 5);
    CHECK(outcome.final_size == 1 + static_cast<int>(outcome.infection_records.size()));
    CHECK(outcome.final_size >= 1);
    CHECK(outcome.final_size <= log.n_people);
    std::set<PersonId> infected = {0};
    for (const auto& record : outcome.infection_records) {
      CHECK(infected.count(record.infector) == 1);   // infector already infected
      CHECK(infected.count(record.infectee) == 0);   // each infectee appears once
      infected.insert(record.infectee);
      CHECK(record.event_index < log.events.size());
      CHECK(log.events[record.event_index].start == record.time);
    }
  }
}

TEST_CASE("matches the temporal reachability oracle under certain transmission") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ContactLog log = test_support::random_contact_log(seed + 500, 8, 30);
    for (PersonId person = 0; person < log.n_people; ++person) {
      for (int day = 0; day < log.n_days; ++day) {
        const EpidemicOutcome outcome =
            simulate_once(log, certain_transmission(), person, day, 0, 77);
        CHECK(outcome.final_size ==
              test_support::temporal_reach_final_size(log, person, day));
      }
    }
  }
}

TEST_CASE("coupled draws make event-subset filtering monotone when no one recovers") {
  DiseaseParams params;
  params.beta_per_minute = 0.02;
  params.gamma_per_day = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ContactLog log = test_support::random_contact_log(seed + 900, 8, 30);
    // Drop every third event; the surviving events keep their draws.
    ContactLog filtered = log;
    filtered.events.clear();
    for (std::size_t i = 0; i < log.events.size(); ++i) {
      if (i % 3 != 0) {
        filtered.events.push_back(log.events[i]);
      }
    }
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
      const int full = simulate_once(log, params, 0, 0, rep, seed).final_size;
      const int subset = simulate_once(filtered, params, 0, 0, rep, seed).final_size;
      CHECK(subset <= full);
    }
  }
}

TEST_CASE("raising beta never loses infections under coupled draws") {
  DiseaseParams weak, strong;
  weak.beta_per_minute = 0.004;
  strong.beta_per_minute = 0.02;
  weak.gamma_per_day = strong.gamma_per_day = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ContactLog log = test_support::random_contact_log(seed + 1300, 8, 30);
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
      CHECK(simulate_once(log, weak, 0, 0, rep, seed).final_size <=
            simulate_once(log, strong, 0, 0, rep, seed).final_size);
    }
  }
}

TEST_CASE("a seed with no events still counts as a run") {
  ContactLog log;
  log.n_people = 4;
  log.n_days = 2;
  log.events = {{0, 1, 5.0, 3.0, Channel::Interaction}};
  const EpidemicOutcome outcome = simulate_once(log, certain_transmission(), 3, 0, 0, 1);
  CHECK(outcome.final_size == 1);
}

TEST_CASE("argument validation") {
  const ContactLog log = two_event_chain(10.0, 20.0);
  const DiseaseParams params;
  CHECK_THROWS_AS(simulate_once(log, params, -1, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(simulate_once(log, params, 3, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(simulate_once(log, params, 0, 1, 0, 0), std::invalid_argument);

  SeedingProtocol protocol;
  CHECK_THROWS_AS(estimate_final_size(log, params, protocol, 0), std::invalid_argument);
  protocol.seed_individuals = {0, 0};
  protocol.seed_days = {0};
  CHECK_THROWS_AS(estimate_final_size(log, params, protocol, 0), std::invalid_argument);
  protocol.seed_individuals = {0};
  protocol.repetitions = 0;
  CHECK_THROWS_AS(estimate_final_size(log, params, protocol, 0), std::invalid_argument);
}

TEST_CASE("default protocol covers everyone over the first week") {
  ContactLog log;
  log.n_people = 36;
  log.n_days = 20;
  const SeedingProtocol protocol = SeedingProtocol::defaults_for(log);
  CHECK(protocol.seed_individuals.size() == 36);
  CHECK(protocol.seed_days == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(protocol.repetitions == 1);

  ContactLog short_log;
  short_log.n_people = 5;
  short_log.n_days = 3;
  CHECK(SeedingProtocol::defaults_for(short_log).seed_days == std::vector<int>{0, 1, 2});
}

TEST_CASE("estimate run count follows the protocol grid") {
  DiseaseParams params;
  params.beta_per_minute = 0.0;
  for (const int roster : {36, 37}) {
    ContactLog log;
    log.n_people = roster;
    log.n_days = 20;
    const FinalSizeEstimate estimate =
        estimate_final_size(log, params, SeedingProtocol::defaults_for(log), 0);
    CHECK(estimate.n_runs == static_cast<std::size_t>(roster * 5));
    CHECK(estimate.mean == 1.0);       // beta 0: every run is exactly the seed
    CHECK(estimate.std_error == 0.0);
  }
}

TEST_CASE("estimate statistics") {
  CHECK(summarize_final_sizes({}).n_runs == 0);
  const FinalSizeEstimate single = summarize_final_sizes({4});
  CHECK(single.mean == 4.0);
  CHECK(single.std_error == 0.0);
  const FinalSizeEstimate spread = summarize_final_sizes({1, 2, 3, 4});
  CHECK(spread.mean == doctest::Approx(2.5));
  // sample SD = sqrt(5/3), SE = sqrt(5/3)/2
  CHECK(spread.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("chain analytic expectation within Monte Carlo error") {
  ContactLog log = two_event_chain(10.0, 20.0);
  DiseaseParams params;
  params.beta_per_minute = 0.007;
  params.gamma_per_day = 0.0;
  SeedingProtocol protocol;
  protocol.seed_individuals = {0};
  protocol.seed_days = {0};
  protocol.repetitions = 10000;
  const FinalSizeEstimate estimate = estimate_final_size(log, params, protocol, 2026);
  const double p = 1.0 - std::exp(-0.7);
  const double expected = 1.0 + p + p * p;
  CHECK(expected == doctest::Approx(1.7568).epsilon(1e-4));
  CHECK(std::abs(estimate.mean - expected) <= 3.0 * estimate.std_error);
}

TEST_CASE("worker count does not change results") {
  const ContactLog log = test_support::random_contact_log(4242, 8, 30);
  DiseaseParams params;
  params.beta_per_minute = 0.05;
  SeedingProtocol protocol = SeedingProtocol::defaults_for(log);
  protocol.repetitions = 3;
  const FinalSizeEstimate serial = estimate_final_size(log, params, protocol, 11, 1);
  const FinalSizeEstimate threaded = estimate_final_size(log, params, protocol, 11, 8);
  CHECK(serial.mean == threaded.mean);
  CHECK(serial.std_error == threaded.std_error);
  CHECK(serial.per_run == threaded.per_run);
}
