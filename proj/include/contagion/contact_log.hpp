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

#ifndef CONTAGION_CONTACT_LOG_HPP
#define CONTAGION_CONTACT_LOG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace contagion {

using PersonId = std::int32_t;

// Badge contact channel: face-to-face interaction (IR) or radio proximity.
enum class Channel : std::uint8_t { Interaction = 0, Proximity = 1 };

char channel_code(Channel channel);                                 // 'I' / 'P'
Channel channel_from_code(char code, const std::string& context);  // throws ParseError

// One undirected pairwise contact. Stored canonically with a < b. Times are
// minutes from the log origin; working days are contiguous day_length blocks.
struct ContactEvent {
  PersonId a = 0;
  PersonId b = 0;
  double start = 0.0;     // minutes
  double duration = 0.0;  // minutes, > 0
  Channel channel = Channel::Interaction;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

// Canonical order: start time, then (a, b, channel, duration).
bool event_order_less(const ContactEvent& lhs, const ContactEvent& rhs);

struct ContactLog {
  int n_people = 0;  // roster size; people with zero events are representable
  int n_days = 0;
  double day_length = 480.0;  // minutes per working day
  std::vector<ContactEvent> events;

  double horizon() const { return day_length * static_cast<double>(n_days); }
  int day_of(double time) const { return static_cast<int>(time / day_length); }
  double day_start(int day) const { return day_length * static_cast<double>(day); }

  friend bool operator==(const ContactLog&, const ContactLog&) = default;
};

// Orders each event's endpoints and sorts the sequence canonically.
void canonicalize(ContactLog& log);

// Checks every structural invariant; throws ValidationError with context.
void validate(const ContactLog& log);

// CSV exchange format, one event per line after a header directive:
//   #contactlog v1 n_people=<int> n_days=<int> day_length=<real>
//   a,b,start,duration,channel
// Doubles are written shortest-round-trip, so read(write(log)) == log exactly.
ContactLog parse_log(std::string_view text, std::string_view origin = "<string>");
std::string format_log(const ContactLog& log);
ContactLog read_log(const std::filesystem::path& path);
void write_log(const ContactLog& log, const std::filesystem::path& path);

// Projection onto a single channel; roster and horizon unchanged.
ContactLog filter_channel(const ContactLog& log, Channel channel);

struct DurationDistribution {
  double median_minutes = 2.5;
  double sigma = 1.25;  // log-normal shape
};

struct SyntheticLogConfig {
  int n_people = 36;
  int n_days = 20;
  double day_length = 480.0;
  // Expected contacts a person takes part in per day, counting both sides.
  double mean_events_per_person_day = 14.0;
  DurationDistribution duration;
  // Symmetric Dirichlet concentration for per-person partner preferences;
  // small values give skewed, clique-like contact patterns.
  double pair_affinity_concentration = 0.3;
  // Proximity events per interaction event; every interaction also emits a
  // proximity twin, so the interaction (a, b, start) set is a subset of the
  // proximity set.
  double proximity_inflation = 2.0;
  std::uint64_t master_seed = 0;
};

void validate(const SyntheticLogConfig& config);

// Deterministic function of the config: the same config always yields a
// structurally identical log.
ContactLog generate_synthetic(const SyntheticLogConfig& config);

}  // namespace contagion

#endif  // CONTAGION_CONTACT_LOG_HPP
