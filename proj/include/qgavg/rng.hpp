// Copyright 2026 The qgavg developers
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

#pragma once

#include <cstdint>
#include <random>

#include "qgavg/dense.hpp"

namespace qgavg {

/// Deterministic generator. Mapping from raw mt19937_64 output is done by
/// hand so streams are identical across standard libraries.
class Rng {
  std::mt19937_64 g_;

 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  /// Stream for the i-th independent sub-task of a seeded run; stable under
  /// any parallel schedule.
  static Rng for_subtask(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  }

  std::uint64_t raw() { return g_(); }

  long pick(long lo, long hi) {
    return lo + (long)(raw() % (std::uint64_t)(hi - lo + 1));
  }

  double unit() { return (raw() >> 11) * (1.0 / 9007199254740992.0); }
};

/// Random scalar with entries small enough that exact-backend arithmetic
/// stays cheap: float in [-1,1]^2, rational p/q with p in [-3,3], q in {1,2}.
template <class S>
S random_scalar(Rng& rng);

template <>
inline Complex random_scalar<Complex>(Rng& rng) {
  double re = 2.0 * rng.unit() - 1.0;
  double im = 2.0 * rng.unit() - 1.0;
  return {re, im};
}

template <>
inline GaussianRational random_scalar<GaussianRational>(Rng& rng) {
  auto part = [&rng] { return BigRational(rng.pick(-3, 3), rng.pick(1, 2)); };
  return {part(), part()};
}

template <class S>
Vec<S> random_vec(Rng& rng, std::size_t n) {
  Vec<S> v(n);
  for (auto& x : v) x = random_scalar<S>(rng);
  return v;
}

}  // namespace qgavg
