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

#include <doctest.h>

#include "oracles.hpp"

using namespace qgavg;
using namespace qgavg::testing;

namespace {

template <class S>
Coaction<S> z2_swap() {
  return build_classical_coaction<S>(cyclic_group_table(2), {{0, 1}, {1, 0}});
}

template <class S>
Coaction<S> s3_on_x3() {
  return build_classical_coaction<S>(symmetric_group3_table(), s3_natural_action());
}

}  // namespace

TEST_CASE_TEMPLATE("trivial coaction with Q = C passes everything", S, Complex,
                   GaussianRational) {
  auto base = make_algebra(function_algebra<S>(2));
  Coaction<S> c = trivial_coaction(base, trivial_cqg<S>());
  CHECK(all_pass(check_coaction_axioms(c, 1e-9)));
  CHECK(all_pass(check_faithfulness(c, 1e-9)));  // Q = C: scalars are all of Q
  CHECK(all_pass(check_injectivity(c, 1e-9)));
}

TEST_CASE_TEMPLATE("trivial coaction with Q = C(Z2) is dense but unfaithful", S, Complex,
                   GaussianRational) {
  auto base = make_algebra(function_algebra<S>(2));
  Coaction<S> c = trivial_coaction(base, build_function_algebra_of_group<S>(cyclic_group_table(2)));
  CHECK(all_pass(check_coaction_axioms(c, 1e-9)));
  auto reps = check_faithfulness(c, 1e-9);
  CHECK(!all_pass(reps));  // slices span only the scalars
}

TEST_CASE_TEMPLATE("Z2 swap on C(X2): the spec coaction", S, Complex, GaussianRational) {
  Coaction<S> c = z2_swap<S>();
  // alpha(d0) = d0 (x) de + d1 (x) ds
  Vec<S> a0 = c.apply(c.base->basis(0));
  Vec<S> expect = zeros<S>(4);
  expect[0 * 2 + 0] = ScalarTraits<S>::one();  // d0 (x) de
  expect[1 * 2 + 1] = ScalarTraits<S>::one();  // d1 (x) ds
  CHECK(max_abs_diff(a0, expect) == 0.0);
  CHECK(all_pass(check_coaction_axioms(c, 1e-9)));
  CHECK(all_pass(check_faithfulness(c, 1e-9)));
  CHECK(all_pass(check_injectivity(c, 1e-9)));
}

TEST_CASE_TEMPLATE("regular coaction of C[S3] on itself", S, Complex, GaussianRational) {
  auto c = build_regular_coaction(build_group_algebra<S>(symmetric_group3_table()));
  auto reps = check_coaction_axioms(c, 1e-9);
  CHECK(all_pass(reps));
  for (const auto& r : reps)
    if (r.name == "podles_density") CHECK(r.notes == "rank 36 of 36");
  CHECK(all_pass(check_faithfulness(c, 1e-9)));
  CHECK(all_pass(check_injectivity(c, 1e-9)));
}

TEST_CASE_TEMPLATE("S3 on X3 is faithful with Podles rank 18", S, Complex, GaussianRational) {
  Coaction<S> c = s3_on_x3<S>();
  auto reps = check_coaction_axioms(c, 1e-9);
  CHECK(all_pass(reps));
  for (const auto& r : reps)
    if (r.name == "podles_density") CHECK(r.notes == "rank 18 of 18");
  CHECK(all_pass(check_faithfulness(c, 1e-9)));
}

TEST_CASE("injectivity flags a zeroed row") {
  using S = Complex;
  auto base = make_algebra(function_algebra<S>(2));
  Coaction<S> c = trivial_coaction(base, trivial_cqg<S>());
  CHECK(all_pass(check_injectivity(c, 1e-9)));
  for (std::size_t j = 0; j < c.alpha.cols; ++j) c.alpha.at(0, j) = ScalarTraits<S>::zero();
  CHECK(!all_pass(check_injectivity(c, 1e-9)));
}

TEST_CASE_TEMPLATE("slices: counit, Haar and point evaluations", S, Complex, GaussianRational) {
  SUBCASE("slice at eps is the identity") {
    Coaction<S> c = s3_on_x3<S>();
    Mat<S> m = slice_matrix(c, c.cqg.counit);
    CHECK(max_abs_diff(m, Mat<S>::identity(3)) == 0.0);
  }
  SUBCASE("slice at h averages the orbit") {
    Coaction<S> c = z2_swap<S>();
    Vec<S> avg = slice(c, *c.cqg.haar, c.base->basis(0));
    Vec<S> expect = {from_ratio<S>(1, 2), from_ratio<S>(1, 2)};
    CHECK(max_abs_diff(avg, expect) == 0.0);
  }
  SUBCASE("slice at evaluation-in-g is the pullback permutation") {
    Coaction<S> c = s3_on_x3<S>();
    GroupTable t = symmetric_group3_table();
    ActionTable act = s3_natural_action();
    for (std::size_t g = 0; g < 6; ++g) {
      Functional<S> evalg{zeros<S>(6)};
      evalg.coeffs[g] = ScalarTraits<S>::one();
      Mat<S> got = slice_matrix(c, evalg);
      Mat<S> expect = pullback_matrix<S>(act, t, g);
      CHECK(max_abs_diff(got, expect) == 0.0);
    }
  }
}

TEST_CASE_TEMPLATE("slice at the Haar state is idempotent", S, Complex, GaussianRational) {
  std::vector<Coaction<S>> gallery;
  gallery.push_back(z2_swap<S>());
  gallery.push_back(s3_on_x3<S>());
  gallery.push_back(build_regular_coaction(build_group_algebra<S>(cyclic_group_table(3))));
  gallery.push_back(build_regular_coaction(build_group_algebra<S>(symmetric_group3_table())));
  for (const auto& c : gallery) CHECK(all_pass(check_haar_slice_idempotent(c, 1e-9)));
}

TEST_CASE("regular coaction of C(Z2) equals the translation-action coaction") {
  using S = GaussianRational;
  GroupTable t = cyclic_group_table(2);
  ActionTable act(2, std::vector<int>(2));
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t x = 0; x < 2; ++x) act[g][x] = t[x][g];
  Coaction<S> classical = build_classical_coaction<S>(t, act);
  Coaction<S> regular = build_regular_coaction(build_function_algebra_of_group<S>(t));
  CHECK(max_abs_diff(classical.alpha, regular.alpha) == 0.0);
}

TEST_CASE("group and action validation reject defects") {
  GroupTable bad = {{0, 1}, {1, 1}};  // 1 has no inverse
  CHECK_THROWS_AS(validate_group(bad), Error);
  GroupTable t = cyclic_group_table(2);
  ActionTable not_bijective = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(validate_action(t, not_bijective), Error);
  ActionTable wrong_identity = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(validate_action(t, wrong_identity), Error);
}
