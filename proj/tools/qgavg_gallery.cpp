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

// Regenerates the documents shipped under gallery/. Output is canonical, so
// a regeneration of an unchanged build must be byte-identical with the
// committed files.

#include <CLI11.hpp>
#include <iostream>

#include "qgavg/document.hpp"

namespace {

using namespace qgavg;

template <class S>
Mat<S> edge_weights(std::size_t n, const std::vector<long>& w) {
  Mat<S> m(n, n);
  std::size_t t = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) m.at(x, y) = ScalarTraits<S>::from_int(w[t++]);
  return m;
}

/// Z2 swapping the two points of X2, edge weights (3, 1).
Json z2swap() {
  using S = GaussianRational;
  auto co = build_classical_coaction<S>(cyclic_group_table(2), {{0, 1}, {1, 0}});
  auto calc = universal_calculus(co.base);
  auto g = edge_metric(calc, edge_weights<S>(2, {3, 1}));
  return document_to_json(co, std::optional<InnerProduct<S>>(g), 1e-9);
}

/// S3 permuting the three points of X3, six distinct edge weights.
Json s3x3() {
  using S = GaussianRational;
  auto co = build_classical_coaction<S>(symmetric_group3_table(), s3_natural_action());
  auto calc = universal_calculus(co.base);
  auto g = edge_metric(calc, edge_weights<S>(3, {1, 2, 3, 4, 5, 6}));
  return document_to_json(co, std::optional<InnerProduct<S>>(g), 1e-9);
}

/// C(Z2) coacting on itself by its coproduct; since Z2 is abelian this is the
/// classical translation action, so provenance is attached and the document
/// stays oracle-comparable.
Json reg_cz2() {
  using S = GaussianRational;
  GroupTable t = cyclic_group_table(2);
  ActionTable act(2, std::vector<int>(2));
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t x = 0; x < 2; ++x) act[g][x] = t[x][g];
  auto co = build_classical_coaction<S>(t, act);
  auto calc = universal_calculus(co.base);
  auto g = edge_metric(calc, edge_weights<S>(2, {1, 2}));
  return document_to_json(co, std::optional<InnerProduct<S>>(g), 1e-9);
}

/// Group algebra C[Z3] coacting on itself; seeded positive metric.
Json reg_cz3() {
  using S = GaussianRational;
  auto co = build_regular_coaction(build_group_algebra<S>(cyclic_group_table(3)));
  auto calc = universal_calculus(co.base);
  auto g = seeded_row_metric(calc, 7);
  return document_to_json(co, std::optional<InnerProduct<S>>(g), 1e-9);
}

/// Group algebra C[S3] coacting on itself: the noncommutative-base case.
/// Float backend; the 30-dimensional universal calculus makes exact
/// arithmetic needlessly slow for a seeded generic metric.
Json reg_cs3() {
  using S = Complex;
  auto co = build_regular_coaction(build_group_algebra<S>(symmetric_group3_table()));
  auto calc = universal_calculus(co.base);
  auto g = seeded_row_metric(calc, 42);
  return document_to_json(co, std::optional<InnerProduct<S>>(g), 1e-9);
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_dir = "gallery";
  CLI::App app{"regenerate the shipped gallery documents"};
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    const std::pair<const char*, Json (*)()> docs[] = {
        {"z2swap.spec", z2swap},
        {"s3x3.spec", s3x3},
        {"reg_cz2.spec", reg_cz2},
        {"reg_cz3.spec", reg_cz3},
        {"reg_cs3.spec", reg_cs3},
    };
    for (const auto& [name, fn] : docs) {
      std::string path = out_dir + "/" + name;
      write_text_file(path, canonical_dump(fn()));
      std::cout << "wrote " << path << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
