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

#include "contagion/network_metrics.hpp"

#include <cmath>

#include <doctest.h>

#include "support.hpp"

using namespace contagion;

namespace {

WeightedNetwork dyad() {
  WeightedNetwork net(2);
  net.add_weight(0, 1, 5.0);
  return net;
}

WeightedNetwork star(int leaves) {
  WeightedNetwork net(leaves + 1);
  for (PersonId leaf = 1; leaf <= leaves; ++leaf) {
    net.add_weight(0, leaf, 2.0);
  }
  return net;
}

WeightedNetwork triangle() {
  WeightedNetwork net(3);
  net.add_weight(0, 1, 3.0);
  net.add_weight(1, 2, 3.0);
  net.add_weight(0, 2, 3.0);
  return net;
}

}  // namespace

TEST_CASE("aggregation sums channel minutes into a symmetric matrix") {
  ContactLog log;
  log.n_people = 3;
  log.n_days = 1;
  log.day_length = 480.0;
  log.events = {{0, 1, 5.0, 5.0, Channel::Interaction}};
  WeightedNetwork net = aggregate(log, Channel::Interaction);
  CHECK(net.weight(0, 1) == 5.0);
  CHECK(net.weight(1, 0) == 5.0);
  CHECK(net.weight(0, 2) == 0.0);
  CHECK(net.weight(0, 0) == 0.0);

  log.events.push_back({0, 1, 20.0, 3.0, Channel::Interaction});
  log.events.push_back({0, 1, 30.0, 4.0, Channel::Interaction});
  log.events.push_back({0, 1, 40.0, 9.0, Channel::Proximity});  // other channel
  canonicalize(log);
  net = aggregate(log, Channel::Interaction);
  CHECK(net.weight(0, 1) == 12.0);
  CHECK(aggregate(log, Channel::Proximity).weight(0, 1) == 9.0);

  const ContactLog empty{3, 1, 480.0, {}};
  const WeightedNetwork zeros = aggregate(empty, Channel::Interaction);
  for (PersonId i = 0; i < 3; ++i) {
    for (PersonId j = 0; j < 3; ++j) {
      CHECK(zeros.weight(i, j) == 0.0);
    }
  }
}

TEST_CASE("aggregation is additive over concatenated logs") {
  const ContactLog a = test_support::random_contact_log(1, 6, 20);
  ContactLog b = test_support::random_contact_log(2, 6, 20);
  b.n_people = a.n_people;  // same roster
  std::erase_if(b.events, [&](const ContactEvent& e) { return e.b >= a.n_people; });

  ContactLog merged = a;
  merged.n_days = std::max(a.n_days, b.n_days);
  merged.day_length = std::max(a.day_length, b.day_length);
  for (const auto& e : b.events) {
    if (e.start + e.duration <= merged.horizon()) {
      merged.events.push_back(e);
    }
  }
  canonicalize(merged);

  const WeightedNetwork net_merged = aggregate(merged, Channel::Interaction);
  WeightedNetwork expected(a.n_people);
  for (const auto& e : merged.events) {
    if (e.channel == Channel::Interaction) {
      expected.add_weight(e.a, e.b, e.duration);
    }
  }
  for (PersonId i = 0; i < a.n_people; ++i) {
    for (PersonId j = 0; j < a.n_people; ++j) {
      CHECK(net_merged.weight(i, j) == doctest::Approx(expected.weight(i, j)).epsilon(1e-14));
    }
  }
}

TEST_CASE("constraint closed forms") {
  SUBCASE("dyad: both ends fully constrained") {
    CHECK(*burt_constraint(dyad(), 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*burt_constraint(dyad(), 1) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("star: the hub spreads its attention") {
    const WeightedNetwork net = star(4);
    CHECK(*burt_constraint(net, 0) == doctest::Approx(0.25).epsilon(1e-12));
    for (PersonId leaf = 1; leaf <= 4; ++leaf) {
      CHECK(*burt_constraint(net, leaf) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("triangle: indirect ties raise constraint") {
    const WeightedNetwork net = triangle();
    for (PersonId i = 0; i < 3; ++i) {
      CHECK(*burt_constraint(net, i) == doctest::Approx(1.125).epsilon(1e-12));
    }
  }
  SUBCASE("isolates are undefined") {
    WeightedNetwork net(3);
    net.add_weight(0, 1, 1.0);
    CHECK(!burt_constraint(net, 2).has_value());
  }
}

TEST_CASE("constraint agrees with the dense reference on random graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const WeightedNetwork net = test_support::random_network(seed, 12);
    const auto reference = test_support::dense_burt_reference(net);
    for (PersonId i = 0; i < net.n_people; ++i) {
      const auto value = burt_constraint(net, i);
      REQUIRE(value.has_value() == reference[static_cast<std::size_t>(i)].has_value());
      if (value.has_value()) {
        CHECK(*value == doctest::Approx(*reference[static_cast<std::size_t>(i)])
                            .epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("constraint is invariant to rescaling every weight") {
  const WeightedNetwork net = test_support::random_network(3, 10);
  WeightedNetwork larger = net;
  for (auto& w : larger.weights) {
    w *= 7.0;
  }
  for (PersonId i = 0; i < net.n_people; ++i) {
    const auto a = burt_constraint(net, i);
    const auto b = burt_constraint(larger, i);
    REQUIRE(a.has_value() == b.has_value());
    if (a.has_value()) {
      CHECK(std::abs(*a - *b) <= 1e-12);
    }
  }
}

TEST_CASE("constraint report statistics") {
  SUBCASE("star report") {
    const ConstraintReport report = constraint_report(star(4));
    CHECK(report.n_isolates == 0);
    CHECK(*report.mean == doctest::Approx(0.85).epsilon(1e-12));
    CHECK(*report.per_node[0] == doctest::Approx(0.25));
  }
  SUBCASE("dyad plus two isolates") {
    WeightedNetwork net(4);
    net.add_weight(0, 1, 3.0);
    const ConstraintReport report = constraint_report(net);
    CHECK(report.n_isolates == 2);
    CHECK(*report.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*report.sd == 0.0);
    CHECK(!report.per_node[2].has_value());
  }
  SUBCASE("empty network is all isolates") {
    const ConstraintReport report = constraint_report(WeightedNetwork(5));
    CHECK(report.n_isolates == 5);
    CHECK(!report.mean.has_value());
    CHECK(!report.sd.has_value());
  }
}

TEST_CASE("removing a node's events isolates exactly that node") {
  ContactLog log;
  log.n_people = 4;
  log.n_days = 1;
  log.day_length = 480.0;
  log.events = {
      {0, 1, 5.0, 4.0, Channel::Interaction},
      {1, 2, 15.0, 4.0, Channel::Interaction},
      {2, 3, 25.0, 4.0, Channel::Interaction},
  };
  const ConstraintReport before = constraint_report(aggregate(log, Channel::Interaction));
  ContactLog without = log;
  std::erase_if(without.events,
                [](const ContactEvent& e) { return e.a == 3 || e.b == 3; });
  const ConstraintReport after = constraint_report(aggregate(without, Channel::Interaction));
  CHECK(before.n_isolates == 0);
  CHECK(after.n_isolates == 1);
  CHECK(!after.per_node[3].has_value());
}

TEST_CASE("productivity multiplier is affine in the scenario mean") {
  const ConstraintReport baseline = constraint_report(test_support::random_network(9, 10));
  REQUIRE(baseline.sd.has_value());
  REQUIRE(*baseline.sd > 0.0);
  const ProductivityModel model;

  CHECK(productivity_multiplier(baseline, baseline, model) == 1.0);

  ConstraintReport scenario = baseline;
  scenario.mean = *baseline.mean + *baseline.sd;
  CHECK(productivity_multiplier(baseline, scenario, model) ==
        doctest::Approx(1.10).epsilon(1e-12));

  scenario.mean = *baseline.mean - 0.5 * *baseline.sd;
  CHECK(productivity_multiplier(baseline, scenario, model) ==
        doctest::Approx(0.95).epsilon(1e-12));

  // Slope is percent_per_sd / baseline sd.
  ConstraintReport a = baseline, b = baseline;
  a.mean = *baseline.mean + 0.3;
  b.mean = *baseline.mean + 0.7;
  const double slope = (productivity_multiplier(baseline, b, model) -
                        productivity_multiplier(baseline, a, model)) /
                       0.4;
  CHECK(slope == doctest::Approx(model.percent_per_sd / *baseline.sd).epsilon(1e-9));
}

TEST_CASE("productivity multiplier requires a usable baseline") {
  WeightedNetwork net(4);
  net.add_weight(0, 1, 3.0);  // two defined values, both 1 -> sd 0
  const ConstraintReport degenerate = constraint_report(net);
  const ConstraintReport scenario = constraint_report(star(4));
  CHECK_THROWS_AS(productivity_multiplier(degenerate, scenario, ProductivityModel{}),
                  std::domain_error);
  const ConstraintReport undefined = constraint_report(WeightedNetwork(3));
  CHECK_THROWS_AS(productivity_multiplier(undefined, scenario, ProductivityModel{}),
                  std::domain_error);
  CHECK_THROWS_AS(productivity_multiplier(scenario, undefined, ProductivityModel{}),
                  std::domain_error);
}
