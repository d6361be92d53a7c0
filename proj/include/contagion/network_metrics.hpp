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

#ifndef CONTAGION_NETWORK_METRICS_HPP
#define CONTAGION_NETWORK_METRICS_HPP

#include <optional>
#include <vector>

#include "contagion/contact_log.hpp"

namespace contagion {

// Undirected weighted graph over the roster: w(i, j) accumulates the total
// contact minutes between i and j. Dense storage; rosters are small.
struct WeightedNetwork {
  int n_people = 0;
  std::vector<double> weights;  // row-major n x n, symmetric, zero diagonal

  explicit WeightedNetwork(int n = 0)
      : n_people(n),
        weights(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  double weight(PersonId i, PersonId j) const {
    return weights[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_people) +
                   static_cast<std::size_t>(j)];
  }
  void add_weight(PersonId i, PersonId j, double w);
  double tie_strength(PersonId i) const;  // row sum
};

WeightedNetwork aggregate(const ContactLog& log, Channel channel);

// Burt's constraint for node i:
//   c_i = sum_j (p_ij + sum_q p_iq * p_qj)^2
// over neighbors j, with p_ij = w(i,j) / sum_k w(i,k) and q ranging over
// third parties. Undefined (nullopt) for isolates, which have no ties to
// compute proportions from.
std::optional<double> burt_constraint(const WeightedNetwork& net, PersonId i);

struct ConstraintReport {
  std::vector<std::optional<double>> per_node;
  std::optional<double> mean;  // over defined values only
  std::optional<double> sd;    // sample SD; 0 when a single value is defined
  int n_isolates = 0;
};

ConstraintReport constraint_report(const WeightedNetwork& net);

// Cohesion-to-output rule: each baseline standard deviation of mean
// constraint shift moves productivity by percent_per_sd.
struct ProductivityModel {
  double percent_per_sd = 0.10;
};

// 1 + percent_per_sd * (scenario mean - baseline mean) / baseline SD.
// Throws std::domain_error when the baseline SD is undefined or zero.
double productivity_multiplier(const ConstraintReport& baseline,
                               const ConstraintReport& scenario,
                               const ProductivityModel& model);

}  // namespace contagion

#endif  // CONTAGION_NETWORK_METRICS_HPP
