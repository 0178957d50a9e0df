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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qgavg/scalar.hpp"

namespace qgavg {

/// One check outcome. `residual` is reported as a double in every backend;
/// the pass decision is made in backend-exact arithmetic before conversion.
struct Report {
  std::string name;
  double residual = 0.0;
  bool pass = false;
  std::optional<Complex> witness;
  std::string notes;
};

template <class S>
Report residual_report(std::string name, const ResidualMax<S>& r, double tol,
                       std::string notes = {}) {
  Report rep;
  rep.name = std::move(name);
  rep.residual = r.value();
  rep.pass = r.within(tol);
  rep.notes = std::move(notes);
  return rep;
}

inline Report flag_report(std::string name, bool pass, std::string notes = {}) {
  Report rep;
  rep.name = std::move(name);
  rep.residual = pass ? 0.0 : 1.0;
  rep.pass = pass;
  rep.notes = std::move(notes);
  return rep;
}

inline bool all_pass(const std::vector<Report>& reps) {
  return std::all_of(reps.begin(), reps.end(), [](const Report& r) { return r.pass; });
}

inline void sort_by_name(std::vector<Report>& reps) {
  std::stable_sort(reps.begin(), reps.end(),
                   [](const Report& a, const Report& b) { return a.name < b.name; });
}

inline void append(std::vector<Report>& dst, std::vector<Report> src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

/// Prefixes every report name, e.g. "algebra." + "assoc".
inline std::vector<Report> prefixed(std::string prefix, std::vector<Report> reps) {
  for (auto& r : reps) r.name = prefix + r.name;
  return reps;
}

}  // namespace qgavg
