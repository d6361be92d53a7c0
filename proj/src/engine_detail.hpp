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

#ifndef CONTAGION_SRC_ENGINE_DETAIL_HPP
#define CONTAGION_SRC_ENGINE_DETAIL_HPP

#include <cstdint>

#include "contagion/epidemic.hpp"

namespace contagion::detail {

// Shared forward pass used by simulate_once and the sick-day policy. When
// isolation_lag_days is non-null, an individual infected at time tau has all
// events suppressed from the start of day(tau) + lag until recovery, and the
// flagged working days are accumulated into *person_days_absent.
EpidemicOutcome simulate_engine(const ContactLog& log, const DiseaseParams& params,
                                PersonId seed, int seed_day, std::uint64_t replicate,
                                std::uint64_t master_seed, const int* isolation_lag_days,
                                long* person_days_absent);

}  // namespace contagion::detail

#endif  // CONTAGION_SRC_ENGINE_DETAIL_HPP
