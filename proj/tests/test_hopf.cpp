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
std::vector<HopfData<S>> hopf_gallery() {
  std::vector<HopfData<S>> g;
  g.push_back(build_function_algebra_of_group<S>(cyclic_group_table(2)));   // C(Z2)
  g.push_back(build_group_algebra<S>(cyclic_group_table(3)));               // C[Z3]
  g.push_back(build_function_algebra_of_group<S>(symmetric_group3_table()));  // C(S3)
  g.push_back(build_group_algebra<S>(symmetric_group3_table()));            // C[S3]
  return g;
}

}  // namespace

TEST_CASE_TEMPLATE("hopf axioms pass across the gallery", S, Complex, GaussianRational) {
  for (const auto& H : hopf_gallery<S>()) {
    CHECK(all_pass(check_algebra_axioms(*H.algebra, 1e-9)));
    auto reps = check_hopf_axioms(H, 1e-9);
    CHECK(all_pass(reps));
    if constexpr (ScalarTraits<S>::exact) {
      for (const auto& r : reps) CHECK(r.residual == 0.0);
    }
    CHECK(is_kac(H, 1e-9));
  }
}

TEST_CASE("computed Haar matches the hand values") {
  using S = GaussianRational;
  SUBCASE("C(Z2): h = (1/2, 1/2)") {
    auto H = build_function_algebra_of_group<S>(cyclic_group_table(2));
    CHECK(H.haar->coeffs[0] == from_ratio<S>(1, 2));
    CHECK(H.haar->coeffs[1] == from_ratio<S>(1, 2));
  }
  SUBCASE("C[Z3]: h = delta at the identity") {
    auto H = build_group_algebra<S>(cyclic_group_table(3));
    CHECK(H.haar->coeffs[0] == from_int<S>(1));
    CHECK(H.haar->coeffs[1] == from_int<S>(0));
    CHECK(H.haar->coeffs[2] == from_int<S>(0));
  }
  SUBCASE("C(S3): h uniform 1/6 (classical Haar measure)") {
    auto H = build_function_algebra_of_group<S>(symmetric_group3_table());
    for (std::size_t i = 0; i < 6; ++i) CHECK(H.haar->coeffs[i] == from_ratio<S>(1, 6));
  }
  SUBCASE("C[S3]: h = delta at the identity") {
    auto H = build_group_algebra<S>(symmetric_group3_table());
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(H.haar->coeffs[i] == (i == 0 ? from_int<S>(1) : from_int<S>(0)));
  }
}

TEST_CASE_TEMPLATE("Haar invariance and faithfulness", S, Complex, GaussianRational) {
  for (const auto& H : hopf_gallery<S>()) {
    CHECK(all_pass(check_haar_invariance(H, 1e-9)));
    auto reps = gram_check(*H.haar, *H.algebra, 1e-9);
    CHECK(all_pass(reps));
    for (const auto& r : reps)
      if (r.name == "gram_faithful") CHECK(r.witness->real() > 0.0);
  }
}

TEST_CASE("Haar solving rejects degenerate coproducts") {
  using S = Complex;
  auto H = build_function_algebra_of_group<S>(cyclic_group_table(2));
  H.coproduct = Mat<S>(4, 2);  // zero map: every functional is "invariant"
  CHECK_THROWS_AS((void)compute_haar(H, 1e-9), Error);
}

TEST_CASE_TEMPLATE("traciality holds, and fails for a skewed functional", S, Complex,
                   GaussianRational) {
  auto H = build_group_algebra<S>(symmetric_group3_table());
  CHECK(all_pass(check_traciality(H, 1e-9)));

  // delta at a transposition is not tracial: search confirms a violating pair
  HopfData<S> skew = H;
  skew.haar->coeffs = zeros<S>(6);
  skew.haar->coeffs[2] = ScalarTraits<S>::one();  // perm (1 0 2), a transposition
  auto reps = check_traciality(skew, 1e-9);
  CHECK(!all_pass(reps));
  const StarAlgebra<S>& a = *H.algebra;
  bool found = false;
  for (std::size_t i = 0; i < 6 && !found; ++i)
    for (std::size_t j = 0; j < 6 && !found; ++j) {
      S d = (*skew.haar)(a.mul(a.basis(i), a.basis(j))) -
            (*skew.haar)(a.mul(a.basis(j), a.basis(i)));
      found = !ScalarTraits<S>::is_zero(d);
    }
  CHECK(found);
}

TEST_CASE_TEMPLATE("antipode inverse identity z_(2) k(z_(1)) = eps(z) 1", S, Complex,
                   GaussianRational) {
  for (const auto& H : hopf_gallery<S>()) {
    auto reps = check_sweedler_inverse_identity(H, 1e-9);
    CHECK(all_pass(reps));
    if constexpr (ScalarTraits<S>::exact) CHECK(reps[0].residual == 0.0);
  }
}

TEST_CASE("group-like inverse identity by hand on C[Z3]") {
  using S = GaussianRational;
  auto H = build_group_algebra<S>(cyclic_group_table(3));
  const StarAlgebra<S>& a = *H.algebra;
  // u_g . u_{g^{-1}} = u_0 = eps(u_g) 1 for each group element
  for (std::size_t g = 0; g < 3; ++g) {
    Vec<S> prod = a.mul(a.basis(g), a.basis((3 - g) % 3));
    CHECK(max_abs_diff(prod, a.basis(0)) == 0.0);
  }
}

TEST_CASE_TEMPLATE("T-transform identities", S, Complex, GaussianRational) {
  for (const auto& H : hopf_gallery<S>()) {
    auto reps = check_T_transform_identity(H, 1e-9);
    CHECK(all_pass(reps));
    if constexpr (ScalarTraits<S>::exact)
      for (const auto& r : reps) CHECK(r.residual == 0.0);
  }
}

TEST_CASE("contracted T-transform identity on group-likes, by hand") {
  using S = GaussianRational;
  auto H = build_group_algebra<S>(cyclic_group_table(3));
  const StarAlgebra<S>& a = *H.algebra;
  const Functional<S>& h = *H.haar;
  // For b = u_g, c = u_k: h(k(u_k) u_g) u_g = [g==k] u_g and
  // h(k(u_g) u_k) u_k = [g==k] u_k; equal exactly when g == k, and both
  // vanish otherwise.
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t k = 0; k < 3; ++k) {
      Vec<S> lhs = scaled(a.basis(g), h(a.mul(H.kappa(a.basis(k)), a.basis(g))));
      Vec<S> rhs = scaled(a.basis(k), h(a.mul(H.kappa(a.basis(g)), a.basis(k))));
      Vec<S> expect = g == k ? a.basis(g) : zeros<S>(3);
      CHECK(max_abs_diff(lhs, expect) == 0.0);
      CHECK(max_abs_diff(rhs, expect) == 0.0);
    }
}

TEST_CASE_TEMPLATE("h and eps are antipode-invariant", S, Complex, GaussianRational) {
  for (const auto& H : hopf_gallery<S>()) {
    CHECK(all_pass(check_haar_antipode_invariance(H, 1e-9)));
    CHECK(all_pass(check_counit_antipode(H, 1e-9)));
  }
}

TEST_CASE_TEMPLATE("injected defects trip the suite", S, Complex, GaussianRational) {
  S eps = from_ratio<S>(1, 1000);
  SUBCASE("perturbed coproduct") {
    auto H = build_function_algebra_of_group<S>(symmetric_group3_table());
    H.coproduct.at(3, 1) += eps;
    CHECK(!all_pass(check_hopf_axioms(H, 1e-9)));
  }
  SUBCASE("perturbed antipode") {
    auto H = build_group_algebra<S>(symmetric_group3_table());
    H.antipode.at(2, 4) += eps;
    CHECK(!all_pass(check_hopf_axioms(H, 1e-9)));
  }
  SUBCASE("perturbed Haar") {
    auto H = build_group_algebra<S>(symmetric_group3_table());
    H.haar->coeffs[3] += eps;
    CHECK(!all_pass(check_haar_invariance(H, 1e-9)));
  }
}

TEST_CASE("Fourier transform identifies C[Z2] with C(Z2)") {
  using S = GaussianRational;
  auto HG = build_group_algebra<S>(cyclic_group_table(2));    // source
  auto HF = build_function_algebra_of_group<S>(cyclic_group_table(2));  // target
  const StarAlgebra<S>& g = *HG.algebra;
  const StarAlgebra<S>& f = *HF.algebra;
  // u_0 -> d0 + d1, u_1 -> d0 - d1
  Mat<S> T(2, 2);
  T.at(0, 0) = from_int<S>(1);
  T.at(0, 1) = from_int<S>(1);
  T.at(1, 0) = from_int<S>(1);
  T.at(1, 1) = from_int<S>(-1);

  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec<S> lhs = T.apply(g.mul(g.basis(i), g.basis(j)));
      Vec<S> rhs = f.mul(T.apply(g.basis(i)), T.apply(g.basis(j)));
      CHECK(max_abs_diff(lhs, rhs) == 0.0);
    }
  CHECK(max_abs_diff(T.apply(g.unit), f.unit) == 0.0);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(max_abs_diff(T.apply(g.star_of(g.basis(i))), f.star_of(T.apply(g.basis(i)))) == 0.0);
    // coproduct intertwines through T (x) T
    Vec<S> lhs = map_leg1(T, map_leg2(T, HG.delta(g.basis(i)), 2, 2), 2, 2);
    Vec<S> rhs = HF.delta(T.apply(g.basis(i)));
    CHECK(max_abs_diff(lhs, rhs) == 0.0);
    CHECK(ScalarTraits<S>::is_zero(HG.counit(g.basis(i)) - HF.counit(T.apply(g.basis(i)))));
    CHECK(max_abs_diff(T.apply(HG.kappa(g.basis(i))), HF.kappa(T.apply(g.basis(i)))) == 0.0);
  }
}
