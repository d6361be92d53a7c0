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

#ifndef CONTAGION_RNG_HPP
#define CONTAGION_RNG_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace contagion::rng {

// Counter-based generation (Salmon et al., SC 2011): every variate is a pure
// function of (seed, key words), with no generator state threaded through the
// simulation. Runs can therefore be replayed, subset, and parallelized with
// any scheduling and still see identical draws.

// Philox-4x32, 10 rounds. One 128-bit block per (key, counter) pair.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 2> key,
                                        std::array<std::uint32_t, 4> counter);

// SplitMix64 finalizer; bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

// Folds an arbitrary word sequence into a 128-bit counter block.
std::array<std::uint64_t, 2> fold128(std::span<const std::uint64_t> words);

// Maps a 64-bit word to a double in [0, 1) with 53-bit resolution.
double u64_to_unit(std::uint64_t x);

// One-shot draws keyed by (seed, words). Distinct word sequences give
// statistically independent values.
std::uint64_t keyed_u64(std::uint64_t seed, std::initializer_list<std::uint64_t> words);
double keyed_uniform(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

// A sequential substream rooted at (seed, words): the counter advances one
// block per 64 bits consumed. Used where variable-length draw sequences are
// needed (rejection sampling, per-entity generation loops).
class Stream {
 public:
  Stream(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

  std::uint64_t next_u64();
  double uniform();       // [0, 1)
  double uniform_open();  // (0, 1)

  // Exponential with the given rate; rate <= 0 yields +infinity.
  double exponential(double rate);

  // Standard normal via Box-Muller (pairs are cached).
  double normal();

  // Uniform integer in [0, n), rejection-corrected.
  std::uint64_t below(std::uint64_t n);

  // Poisson by sequential inversion, chunked so large means stay stable.
  long poisson(double mean);

  // Gamma(shape, 1) via Marsaglia-Tsang squeeze.
  double gamma(double shape);

 private:
  std::array<std::uint32_t, 4> block(std::uint64_t index) const;

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint64_t, 2> base_;
  std::uint64_t next_block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_u64s_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace contagion::rng

#endif  // CONTAGION_RNG_HPP
