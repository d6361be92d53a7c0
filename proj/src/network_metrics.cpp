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
#include <stdexcept>

#include "contagion/errors.hpp"

namespace contagion {

void WeightedNetwork::add_weight(PersonId i, PersonId j, double w) {
  const auto n = static_cast<std::size_t>(n_people);
  weights[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] += w;
  weights[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] += w;
}

double WeightedNetwork::tie_strength(PersonId i) const {
  double total = 0.0;
  for (PersonId j = 0; j < n_people; ++j) {
    total += weight(i, j);
  }
  return total;
}

WeightedNetwork aggregate(const ContactLog& log, Channel channel) {
  validate(log);
  WeightedNetwork net(log.n_people);
  for (const auto& event : log.events) {
    if (event.channel == channel) {
      net.add_weight(event.a, event.b, event.duration);
    }
  }
  return net;
}

std::optional<double> burt_constraint(const WeightedNetwork& net, PersonId i) {
  const double strength_i = net.tie_strength(i);
  if (strength_i <= 0.0) {
    return std::nullopt;
  }
  double constraint = 0.0;
  for (PersonId j = 0; j < net.n_people; ++j) {
    if (j == i || net.weight(i, j) <= 0.0) {
      continue;
    }
    const double p_ij = net.weight(i, j) / strength_i;
    double indirect = 0.0;
    for (PersonId q = 0; q < net.n_people; ++q) {
      if (q == i || q == j || net.weight(i, q) <= 0.0) {
        continue;
      }
      const double strength_q = net.tie_strength(q);
      if (strength_q <= 0.0) {
        continue;
      }
      indirect += (net.weight(i, q) / strength_i) * (net.weight(q, j) / strength_q);
    }
    const double term = p_ij + indirect;
    constraint += term * term;
  }
  return constraint;
}

ConstraintReport constraint_report(const WeightedNetwork& net) {
  ConstraintReport report;
  report.per_node.resize(static_cast<std::size_t>(net.n_people));
  double sum = 0.0;
  int n_defined = 0;
  for (PersonId i = 0; i < net.n_people; ++i) {
    report.per_node[static_cast<std::size_t>(i)] = burt_constraint(net, i);
    if (report.per_node[static_cast<std::size_t>(i)].has_value()) {
      sum += *report.per_node[static_cast<std::size_t>(i)];
      ++n_defined;
    } else {
      ++report.n_isolates;
    }
  }
  if (n_defined == 0) {
    return report;
  }
  report.mean = sum / n_defined;
  double squares = 0.0;
  for (const auto& value : report.per_node) {
    if (value.has_value()) {
      const double d = *value - *report.mean;
      squares += d * d;
    }
  }
  report.sd = n_defined > 1 ? std::sqrt(squares / (n_defined - 1)) : 0.0;
  return report;
}

double productivity_multiplier(const ConstraintReport& baseline,
                               const ConstraintReport& scenario,
                               const ProductivityModel& model) {
  if (!baseline.mean.has_value() || !baseline.sd.has_value()) {
    throw std::domain_error("productivity multiplier: baseline constraint is undefined");
  }
  if (!(*baseline.sd > 0.0)) {
    throw std::domain_error(
        "productivity multiplier: baseline constraint SD is zero, shift is unnormalizable");
  }
  if (!scenario.mean.has_value()) {
    throw std::domain_error("productivity multiplier: scenario constraint is undefined");
  }
  return 1.0 + model.percent_per_sd * (*scenario.mean - *baseline.mean) / *baseline.sd;
}

}  // namespace contagion
