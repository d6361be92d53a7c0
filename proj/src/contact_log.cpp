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

#include "contagion/contact_log.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>
#include <utility>

#include "contagion/errors.hpp"
#include "contagion/rng.hpp"

namespace contagion {

namespace {

constexpr std::uint64_t kAffinityTag = 0x616666696e697479ull;  // "affinity"
constexpr std::uint64_t kEventsTag = 0x6576656e74730000ull;    // "events"

std::string location(std::string_view origin, std::size_t line) {
  return std::string(origin) + ":" + std::to_string(line);
}

double parse_double(std::string_view field, const std::string& where) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(where + ": expected a number, got \"" + std::string(field) + "\"");
  }
  return value;
}

long parse_int(std::string_view field, const std::string& where) {
  long value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(where + ": expected an integer, got \"" + std::string(field) + "\"");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      fields.push_back(line.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  return fields;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

char channel_code(Channel channel) {
  return channel == Channel::Interaction ? 'I' : 'P';
}

Channel channel_from_code(char code, const std::string& context) {
  switch (code) {
    case 'I':
      return Channel::Interaction;
    case 'P':
      return Channel::Proximity;
    default:
      throw ParseError(context + ": unknown channel code '" + std::string(1, code) +
                       "' (expected I or P)");
  }
}

bool event_order_less(const ContactEvent& lhs, const ContactEvent& rhs) {
  return std::tie(lhs.start, lhs.a, lhs.b, lhs.channel, lhs.duration) <
         std::tie(rhs.start, rhs.a, rhs.b, rhs.channel, rhs.duration);
}

void canonicalize(ContactLog& log) {
  for (auto& event : log.events) {
    if (event.a > event.b) {
      std::swap(event.a, event.b);
    }
  }
  std::sort(log.events.begin(), log.events.end(), event_order_less);
}

void validate(const ContactLog& log) {
  if (log.n_people < 0) {
    throw ValidationError("contact log: n_people must be non-negative");
  }
  if (log.n_days < 0) {
    throw ValidationError("contact log: n_days must be non-negative");
  }
  if (!(log.day_length > 0.0)) {
    throw ValidationError("contact log: day_length must be positive");
  }
  const double horizon = log.horizon();
  const ContactEvent* previous = nullptr;
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const auto& e = log.events[i];
    const std::string where = "event " + std::to_string(i);
    if (e.a == e.b) {
      throw ValidationError(where + ": self-contact (person " + std::to_string(e.a) + ")");
    }
    if (e.a > e.b) {
      throw ValidationError(where + ": endpoints not in canonical order (a < b)");
    }
    if (e.a < 0 || e.b >= log.n_people) {
      throw ValidationError(where + ": person id outside roster of " +
                            std::to_string(log.n_people));
    }
    if (!(e.duration > 0.0)) {
      throw ValidationError(where + ": duration must be positive");
    }
    if (e.start < 0.0 || e.start + e.duration > horizon) {
      throw ValidationError(where + ": event outside the log horizon of " +
                            format_double(horizon) + " minutes");
    }
    if (previous != nullptr && event_order_less(e, *previous)) {
      throw ValidationError(where + ": events not sorted canonically");
    }
    previous = &e;
  }
}

ContactLog parse_log(std::string_view text, std::string_view origin) {
  ContactLog log;
  bool n_people_given = false;
  PersonId max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    const std::string where = location(origin, line_no);

    if (!saw_header) {
      if (!line.starts_with("#contactlog v1")) {
        throw ParseError(where + ": missing \"#contactlog v1\" header directive");
      }
      bool n_days_given = false;
      bool day_length_given = false;
      for (const auto field : split(line.substr(14), ' ')) {
        if (field.empty()) continue;
        const std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(where + ": malformed header field \"" + std::string(field) + "\"");
        }
        const std::string_view name = field.substr(0, eq);
        const std::string_view value = field.substr(eq + 1);
        if (name == "n_people") {
          log.n_people = static_cast<int>(parse_int(value, where));
          n_people_given = true;
        } else if (name == "n_days") {
          log.n_days = static_cast<int>(parse_int(value, where));
          n_days_given = true;
        } else if (name == "day_length") {
          log.day_length = parse_double(value, where);
          day_length_given = true;
        } else {
          throw ParseError(where + ": unknown header field \"" + std::string(name) + "\"");
        }
      }
      if (!n_days_given || !day_length_given) {
        throw ParseError(where + ": header must carry n_days and day_length");
      }
      saw_header = true;
      continue;
    }
    if (line.front() == '#') {
      continue;  // comment
    }

    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw ParseError(where + ": expected 5 fields (a,b,start,duration,channel), got " +
                       std::to_string(fields.size()));
    }
    ContactEvent event;
    event.a = static_cast<PersonId>(parse_int(fields[0], where));
    event.b = static_cast<PersonId>(parse_int(fields[1], where));
    event.start = parse_double(fields[2], where);
    event.duration = parse_double(fields[3], where);
    if (fields[4].size() != 1) {
      throw ParseError(where + ": channel must be a single character, got \"" +
                       std::string(fields[4]) + "\"");
    }
    event.channel = channel_from_code(fields[4][0], where);
    if (event.a == event.b) {
      throw ValidationError(where + ": self-contact (person " + std::to_string(event.a) + ")");
    }
    if (event.a < 0 || event.b < 0) {
      throw ValidationError(where + ": person ids must be non-negative");
    }
    max_id = std::max({max_id, event.a, event.b});
    log.events.push_back(event);
  }

  if (!saw_header) {
    throw ParseError(location(origin, 1) + ": empty input, expected header directive");
  }
  if (!n_people_given) {
    log.n_people = static_cast<int>(max_id) + 1;
  }
  canonicalize(log);
  validate(log);
  return log;
}

std::string format_log(const ContactLog& log) {
  std::string out = "#contactlog v1 n_people=" + std::to_string(log.n_people) +
                    " n_days=" + std::to_string(log.n_days) +
                    " day_length=" + format_double(log.day_length) + "\n";
  for (const auto& e : log.events) {
    out += std::to_string(e.a);
    out += ',';
    out += std::to_string(e.b);
    out += ',';
    out += format_double(e.start);
    out += ',';
    out += format_double(e.duration);
    out += ',';
    out += channel_code(e.channel);
    out += '\n';
  }
  return out;
}

ContactLog read_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading " + path.string());
  }
  return parse_log(buffer.str(), path.string());
}

void write_log(const ContactLog& log, const std::filesystem::path& path) {
  validate(log);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << format_log(log);
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

ContactLog filter_channel(const ContactLog& log, Channel channel) {
  ContactLog filtered = log;
  std::erase_if(filtered.events,
                [channel](const ContactEvent& e) { return e.channel != channel; });
  return filtered;
}

void validate(const SyntheticLogConfig& config) {
  if (config.n_people <= 0) {
    throw ValidationError("synthetic config: n_people must be positive");
  }
  if (config.n_days <= 0) {
    throw ValidationError("synthetic config: n_days must be positive");
  }
  if (!(config.day_length > 0.0)) {
    throw ValidationError("synthetic config: day_length must be positive");
  }
  if (!(config.mean_events_per_person_day >= 0.0)) {
    throw ValidationError("synthetic config: mean_events_per_person_day must be non-negative");
  }
  if (!(config.duration.median_minutes > 0.0)) {
    throw ValidationError("synthetic config: duration median must be positive");
  }
  if (!(config.duration.sigma >= 0.0)) {
    throw ValidationError("synthetic config: duration sigma must be non-negative");
  }
  if (!(config.pair_affinity_concentration > 0.0)) {
    throw ValidationError("synthetic config: pair_affinity_concentration must be positive");
  }
  if (!(config.proximity_inflation >= 1.0)) {
    throw ValidationError("synthetic config: proximity_inflation must be at least 1");
  }
}

namespace {

// Partner preference for one person: cumulative Dirichlet weights over the
// other n-1 ids.
std::vector<double> affinity_cdf(const SyntheticLogConfig& config, PersonId person) {
  const int n = config.n_people;
  rng::Stream stream(config.master_seed, {kAffinityTag, static_cast<std::uint64_t>(person)});
  std::vector<double> weights(static_cast<std::size_t>(n) - 1);
  double total = 0.0;
  for (auto& w : weights) {
    w = stream.gamma(config.pair_affinity_concentration);
    total += w;
  }
  std::vector<double> cdf(weights.size());
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running += total > 0.0 ? weights[i] / total : 1.0 / static_cast<double>(weights.size());
    cdf[i] = running;
  }
  if (!cdf.empty()) {
    cdf.back() = 1.0;
  }
  return cdf;
}

PersonId pick_partner(const std::vector<double>& cdf, PersonId self, double u) {
  std::size_t slot = 0;
  while (slot + 1 < cdf.size() && u >= cdf[slot]) {
    ++slot;
  }
  // Slots skip over self.
  const auto partner = static_cast<PersonId>(slot);
  return partner >= self ? partner + 1 : partner;
}

}  // namespace

ContactLog generate_synthetic(const SyntheticLogConfig& config) {
  validate(config);
  ContactLog log;
  log.n_people = config.n_people;
  log.n_days = config.n_days;
  log.day_length = config.day_length;
  if (config.n_people < 2 || config.mean_events_per_person_day == 0.0) {
    validate(log);
    return log;
  }

  std::vector<std::vector<double>> cdfs(static_cast<std::size_t>(config.n_people));
  for (PersonId person = 0; person < config.n_people; ++person) {
    cdfs[static_cast<std::size_t>(person)] = affinity_cdf(config, person);
  }

  // Each person initiates half of the contacts they take part in; the other
  // half arrives through partners, so per-person involvement matches the
  // configured mean.
  const double interaction_rate = config.mean_events_per_person_day / 2.0;
  const double extra_proximity_rate =
      (config.proximity_inflation - 1.0) * interaction_rate;

  const double mu = std::log(config.duration.median_minutes);
  for (PersonId person = 0; person < config.n_people; ++person) {
    for (int day = 0; day < config.n_days; ++day) {
      rng::Stream stream(config.master_seed,
                         {kEventsTag, static_cast<std::uint64_t>(person),
                          static_cast<std::uint64_t>(day)});
      const long n_interactions = stream.poisson(interaction_rate);
      const long n_extra_proximity = stream.poisson(extra_proximity_rate);
      const long total = n_interactions + n_extra_proximity;
      for (long k = 0; k < total; ++k) {
        ContactEvent event;
        event.a = person;
        event.b = pick_partner(cdfs[static_cast<std::size_t>(person)], person,
                               stream.uniform());
        const double z = stream.normal();
        event.duration =
            std::min(std::exp(mu + config.duration.sigma * z), config.day_length);
        event.start = log.day_start(day) +
                      stream.uniform() * (config.day_length - event.duration);
        if (k < n_interactions) {
          event.channel = Channel::Interaction;
          log.events.push_back(event);
          // Interaction contacts are also seen on the radio channel.
          event.channel = Channel::Proximity;
          log.events.push_back(event);
        } else {
          event.channel = Channel::Proximity;
          log.events.push_back(event);
        }
      }
    }
  }

  canonicalize(log);
  validate(log);
  return log;
}

}  // namespace contagion
