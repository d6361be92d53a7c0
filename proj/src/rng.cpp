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

#include "contagion/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace contagion::rng {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                      std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mul_hi_lo(kPhiloxM0, ctr[0], hi0, lo0);
  mul_hi_lo(kPhiloxM1, ctr[2], hi1, lo1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

inline std::uint64_t join64(std::uint32_t lo, std::uint32_t hi) {
  return static_cast<std::uint64_t>(lo) | (static_cast<std::uint64_t>(hi) << 32);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 2> key,
                                        std::array<std::uint32_t, 4> counter) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return counter;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::array<std::uint64_t, 2> fold128(std::span<const std::uint64_t> words) {
  // Two independent chains so the counter block carries a full 128 bits of
  // key-material entropy.
  std::uint64_t h0 = 0x243F6A8885A308D3ull;
  std::uint64_t h1 = 0x452821E638D01377ull;
  for (const std::uint64_t w : words) {
    h0 = mix64(h0 ^ w);
    h1 = mix64(h1 + w);
  }
  return {h0, h1};
}

double u64_to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

std::uint64_t keyed_u64(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  const auto folded = fold128(std::span<const std::uint64_t>(words.begin(), words.size()));
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(folded[0]), static_cast<std::uint32_t>(folded[0] >> 32),
      static_cast<std::uint32_t>(folded[1]), static_cast<std::uint32_t>(folded[1] >> 32)};
  const auto out = philox4x32(key, ctr);
  return join64(out[0], out[1]);
}

double keyed_uniform(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  return u64_to_unit(keyed_u64(seed, words));
}

Stream::Stream(std::uint64_t seed, std::initializer_list<std::uint64_t> words)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      base_(fold128(std::span<const std::uint64_t>(words.begin(), words.size()))) {}

std::array<std::uint32_t, 4> Stream::block(std::uint64_t index) const {
  // 128-bit add of the block index onto the folded base counter.
  const std::uint64_t lo = base_[0] + index;
  const std::uint64_t hi = base_[1] + (lo < base_[0] ? 1 : 0);
  return philox4x32(key_, {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(lo >> 32),
                           static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(hi >> 32)});
}

std::uint64_t Stream::next_u64() {
  if (buffered_u64s_ == 0) {
    buffer_ = block(next_block_++);
    buffered_u64s_ = 2;
  }
  const int slot = 2 - buffered_u64s_;
  --buffered_u64s_;
  return join64(buffer_[2 * slot], buffer_[2 * slot + 1]);
}

double Stream::uniform() { return u64_to_unit(next_u64()); }

double Stream::uniform_open() {
  // 52-bit mantissa shifted into (0, 1).
  return static_cast<double>(next_u64() >> 12) * 0x1.0p-52 + 0x1.0p-53;
}

double Stream::exponential(double rate) {
  if (rate <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return -std::log1p(-uniform()) / rate;
}

double Stream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double theta = kTwoPi * uniform();
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

std::uint64_t Stream::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("Stream::below: n must be positive");
  }
  // Reject the wrap-around tail so every residue is equally likely.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) {
      return x % n;
    }
  }
}

long Stream::poisson(double mean) {
  if (!(mean >= 0.0)) {
    throw std::invalid_argument("Stream::poisson: mean must be non-negative");
  }
  long total = 0;
  // Inversion underflows past mean ~700; chunking keeps each piece small.
  while (mean > 30.0) {
    total += poisson(30.0);
    mean -= 30.0;
  }
  if (mean == 0.0) {
    return total;
  }
  const double u = uniform();
  double p = std::exp(-mean);
  double cumulative = p;
  long k = 0;
  while (u > cumulative) {
    ++k;
    p *= mean / static_cast<double>(k);
    cumulative += p;
    if (k > 10000) {  // numerically unreachable for chunked means
      break;
    }
  }
  return total + k;
}

double Stream::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("Stream::gamma: shape must be positive");
  }
  if (shape < 1.0) {
    const double boost = std::pow(uniform_open(), 1.0 / shape);
    return gamma(shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = normal();
    const double t = 1.0 + c * z;
    if (t <= 0.0) {
      continue;
    }
    const double v = t * t * t;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * z * z * z * z) {
      return d * v;
    }
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

}  // namespace contagion::rng
