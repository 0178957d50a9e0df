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

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgavg/scalar.hpp"

namespace qgavg::exec {

/// Execution policy for the data-parallel check kernels. threads == 1 is
/// the serial reference path (no OpenMP constructs touched); threads == 0
/// means all hardware threads.
struct Context {
  int threads = 1;

  bool serial() const { return threads == 1; }
  int resolved_threads() const {
#ifdef _OPENMP
    return threads == 0 ? omp_get_max_threads() : threads;
#else
    return 1;
#endif
  }
};

inline Context serial_context() { return Context{1}; }
inline Context parallel_context() { return Context{0}; }

/// Runs body(i) for i in [0, n). Iterations must be independent.
template <class F>
void parallel_for(const Context& cx, std::size_t n, F&& body) {
  if (cx.serial()) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(cx.resolved_threads())
  for (long long i = 0; i < (long long)n; ++i) body((std::size_t)i);
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

/// Max-reduction of per-index squared residuals. f(i) returns the backend
/// real type; the combine (max) is order-independent, so serial and
/// parallel runs agree exactly.
template <class S, class F>
ResidualMax<S> max_norm2(const Context& cx, std::size_t n, F&& f) {
  ResidualMax<S> acc;
  if (cx.serial()) {
    for (std::size_t i = 0; i < n; ++i) acc.add_norm2(f(i));
    return acc;
  }
#ifdef _OPENMP
#pragma omp parallel num_threads(cx.resolved_threads())
  {
    ResidualMax<S> local;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < (long long)n; ++i) local.add_norm2(f((std::size_t)i));
#pragma omp critical(qgavg_max_norm2)
    acc.merge(local);
  }
#else
  for (std::size_t i = 0; i < n; ++i) acc.add_norm2(f(i));
#endif
  return acc;
}

/// Fills out[i] = f(i) for i in [0, n).
template <class T, class F>
void parallel_fill(const Context& cx, std::vector<T>& out, F&& f) {
  parallel_for(cx, out.size(), [&](std::size_t i) { out[i] = f(i); });
}

}  // namespace qgavg::exec
