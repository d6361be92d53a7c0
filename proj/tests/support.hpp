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

// Test-only generators and independent oracles. Everything here is written
// against the data model alone, never against the engine implementation, so
// agreement is meaningful.

#ifndef CONTAGION_TESTS_SUPPORT_HPP
#define CONTAGION_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "contagion/contact_log.hpp"
#include "contagion/network_metrics.hpp"
#include "contagion/rng.hpp"

namespace contagion::test_support {

// Uniform random valid log: up to max_people people, up to max_events events
// spread over 1-3 days.
inline ContactLog random_contact_log(std::uint64_t seed, int max_people, int max_events) {
  rng::Stream stream(seed, {0x74657374u, static_cast<std::uint64_t>(max_people),
                            static_cast<std::uint64_t>(max_events)});
  ContactLog log;
  log.n_people = 2 + static_cast<int>(stream.below(static_cast<std::uint64_t>(max_people - 1)));
  log.n_days = 1 + static_cast<int>(stream.below(3));
  log.day_length = 120.0 + static_cast<double>(stream.below(6)) * 60.0;
  const auto n_events = static_cast<long>(stream.below(static_cast<std::uint64_t>(max_events + 1)));
  for (long i = 0; i < n_events; ++i) {
    ContactEvent e;
    e.a = static_cast<PersonId>(stream.below(static_cast<std::uint64_t>(log.n_people)));
    do {
      e.b = static_cast<PersonId>(stream.below(static_cast<std::uint64_t>(log.n_people)));
    } while (e.b == e.a);
    e.duration = 0.5 + stream.uniform() * 40.0;
    e.start = stream.uniform() * (log.horizon() - e.duration);
    e.channel = stream.below(2) == 0 ? Channel::Interaction : Channel::Proximity;
    log.events.push_back(e);
  }
  canonicalize(log);
  return log;
}

// Exact temporal reachability: one forward pass over the time-ordered events
// with certain transmission and no recovery. The only thing shared with the
// engine is the canonical event order of the log itself.
inline int temporal_reach_final_size(const ContactLog& log, PersonId seed, int seed_day) {
  const double seed_time = log.day_start(seed_day);
  std::vector<bool> infected(static_cast<std::size_t>(log.n_people), false);
  infected[static_cast<std::size_t>(seed)] = true;
  for (const auto& event : log.events) {
    if (event.start < seed_time) {
      continue;
    }
    const bool a = infected[static_cast<std::size_t>(event.a)];
    const bool b = infected[static_cast<std::size_t>(event.b)];
    if (a != b) {
      infected[static_cast<std::size_t>(event.a)] = true;
      infected[static_cast<std::size_t>(event.b)] = true;
    }
  }
  int count = 0;
  for (const bool flag : infected) {
    count += flag ? 1 : 0;
  }
  return count;
}

// Burt constraint straight from the dense matrix formula: P the row-normalized
// weight matrix, c_i = sum over tied j of ((P + P^2)_ij)^2. With a zero
// diagonal the q = i, j terms of the matrix square vanish, so no masking is
// needed.
inline std::vector<std::optional<double>> dense_burt_reference(const WeightedNetwork& net) {
  const int n = net.n_people;
  std::vector<double> p(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  std::vector<bool> defined(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += net.weight(i, j);
    }
    if (row > 0.0) {
      defined[static_cast<std::size_t>(i)] = true;
      for (int j = 0; j < n; ++j) {
        p[static_cast<std::size_t>(i * n + j)] = net.weight(i, j) / row;
      }
    }
  }
  std::vector<std::optional<double>> constraint(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!defined[static_cast<std::size_t>(i)]) {
      continue;
    }
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i || net.weight(i, j) <= 0.0) {
        continue;
      }
      double indirect = 0.0;
      for (int q = 0; q < n; ++q) {
        indirect += p[static_cast<std::size_t>(i * n + q)] * p[static_cast<std::size_t>(q * n + j)];
      }
      const double term = p[static_cast<std::size_t>(i * n + j)] + indirect;
      total += term * term;
    }
    constraint[static_cast<std::size_t>(i)] = total;
  }
  return constraint;
}

// Random symmetric weighted graph with a zero diagonal.
inline WeightedNetwork random_network(std::uint64_t seed, int max_nodes) {
  rng::Stream stream(seed, {0x6e6574u, static_cast<std::uint64_t>(max_nodes)});
  WeightedNetwork net(2 + static_cast<int>(stream.below(static_cast<std::uint64_t>(max_nodes - 1))));
  for (PersonId i = 0; i < net.n_people; ++i) {
    for (PersonId j = i + 1; j < net.n_people; ++j) {
      if (stream.uniform() < 0.45) {
        net.add_weight(i, j, 0.5 + stream.uniform() * 20.0);
      }
    }
  }
  return net;
}

}  // namespace contagion::test_support

#endif  // CONTAGION_TESTS_SUPPORT_HPP
