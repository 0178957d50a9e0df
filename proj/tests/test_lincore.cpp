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

TEST_CASE("rational scalar arithmetic is exact") {
  GaussianRational a{BigRational(1, 3)}, b{BigRational(1, 6), BigRational(-2)};
  GaussianRational c = (a + b) * b / b - b;
  CHECK(c == a);
  ResidualMax<GaussianRational> r;
  r.add(a - a);
  CHECK(r.within(0.0));  // literally zero, not just small
  r.add(GaussianRational{BigRational(1, 1000)});
  CHECK(!r.within(1e-9));
  CHECK(r.value() == doctest::Approx(1e-3));
}

TEST_CASE_TEMPLATE("tensor product of function algebras is pointwise", S, Complex,
                   GaussianRational) {
  StarAlgebra<S> x2 = function_algebra<S>(2);
  StarAlgebra<S> t = tensor_algebra(x2, x2);
  CHECK(t.dim == 4);
  CHECK(t.is_commutative());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec<S> p = t.mul(t.basis(i), t.basis(j));
      Vec<S> expect = i == j ? t.basis(i) : zeros<S>(4);
      CHECK(max_abs_diff(p, expect) == 0.0);
    }
  CHECK(all_pass(check_algebra_axioms(t, 1e-9)));
}

TEST_CASE("tensoring with the scalars relabels the basis") {
  using S = GaussianRational;
  StarAlgebra<S> one = *trivial_cqg<S>().algebra;
  StarAlgebra<S> a = *build_group_algebra<S>(cyclic_group_table(3)).algebra;
  StarAlgebra<S> t = tensor_algebra(one, a);
  REQUIRE(t.dim == a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        CHECK(t.mult.at(i, j, k) == a.mult.at(i, j, k));
  CHECK(max_abs_diff(t.unit, a.unit) == 0.0);
}

TEST_CASE("C[Z3] (x) C(Z2) is a 6-dimensional *-algebra") {
  using S = GaussianRational;
  StarAlgebra<S> a = *build_group_algebra<S>(cyclic_group_table(3)).algebra;
  StarAlgebra<S> b = function_algebra<S>(2);
  StarAlgebra<S> t = tensor_algebra(a, b);
  REQUIRE(t.dim == 6);
  CHECK(all_pass(check_algebra_axioms(t, 1e-9)));
  // independent associativity oracle: direct triple products of basis vectors
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) {
        Vec<S> lhs = t.mul(t.mul(t.basis(i), t.basis(j)), t.basis(k));
        Vec<S> rhs = t.mul(t.basis(i), t.mul(t.basis(j), t.basis(k)));
        CHECK(max_abs_diff(lhs, rhs) == 0.0);
      }
}

TEST_CASE_TEMPLATE("tensor_algebra is associative up to index flattening", S, Complex,
                   GaussianRational) {
  StarAlgebra<S> a = function_algebra<S>(2);
  StarAlgebra<S> b = *build_group_algebra<S>(cyclic_group_table(2)).algebra;
  StarAlgebra<S> c = function_algebra<S>(3);
  StarAlgebra<S> l = tensor_algebra(tensor_algebra(a, b), c);
  StarAlgebra<S> r = tensor_algebra(a, tensor_algebra(b, c));
  REQUIRE(l.dim == r.dim);
  // composite index ((i,a),x) and (i,(a,x)) flatten identically
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j)
      for (std::size_t k = 0; k < l.dim; ++k)
        CHECK(ScalarTraits<S>::is_zero(l.mult.at(i, j, k) - r.mult.at(i, j, k)));
}

TEST_CASE("axiom checker flags an injected multiplication defect") {
  using S = Complex;
  StarAlgebra<S> a = function_algebra<S>(3);
  CHECK(all_pass(check_algebra_axioms(a, 1e-9)));
  a.mult.at(0, 1, 2) += Complex(1e-3, 0.0);
  auto reps = check_algebra_axioms(a, 1e-9);
  CHECK(!all_pass(reps));
  double assoc_residual = 0.0;
  for (const auto& r : reps)
    if (r.name == "assoc") assoc_residual = r.residual;
  CHECK(assoc_residual >= 1e-3);
}

TEST_CASE("C[S3] built from the group table passes the axioms") {
  using S = GaussianRational;
  GroupTable t = symmetric_group3_table();
  validate_group(t);  // oracle: the table is a group
  StarAlgebra<S> a = *build_group_algebra<S>(t).algebra;
  CHECK(!a.is_commutative());
  CHECK(all_pass(check_algebra_axioms(a, 1e-9)));
}

TEST_CASE_TEMPLATE("positivity of left multiplication", S, Complex, GaussianRational) {
  StarAlgebra<S> a = function_algebra<S>(2);
  Functional<S> phi = canonical_trace(a);

  PositivityResult unit = positivity_check(a.unit, a, phi, 1e-9);
  CHECK(unit.positive);
  CHECK(unit.min_eig == doctest::Approx(1.0));

  Vec<S> diff = {from_int<S>(1), from_int<S>(-1)};
  PositivityResult neg = positivity_check(diff, a, phi, 1e-9);
  CHECK(!neg.positive);
  CHECK(neg.min_eig == doctest::Approx(-1.0));
}

TEST_CASE("positivity of b*b in C[Z3], cross-checked by the char-poly oracle") {
  using S = GaussianRational;
  HopfData<S> h = build_group_algebra<S>(cyclic_group_table(3));
  const StarAlgebra<S>& a = *h.algebra;
  Functional<S> phi = canonical_trace(a);
  Mat<S> H = gram_matrix(a, phi);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Vec<S> b = random_vec<S>(rng, 3);
    Vec<S> bb = a.mul(a.star_of(b), b);
    PositivityResult p = positivity_check(bb, a, phi, 1e-9);
    CHECK(p.positive);
    CHECK(psd_charpoly_oracle(H * left_mult_matrix(a, bb)));
  }
}

TEST_CASE("char-poly oracle agrees with psd_pivot on random hermitian matrices") {
  using S = GaussianRational;
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + (std::size_t)rng.pick(0, 3);
    Mat<S> x(n, n);
    for (auto& v : x.a) v = random_scalar<S>(rng);
    Mat<S> herm(n, n);
    if (trial % 2 == 0) {
      herm = conj_transpose(x) * x;  // PSD by construction
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          herm.at(i, j) = x.at(i, j) + ScalarTraits<S>::conj(x.at(j, i));
    }
    CHECK(psd_pivot(herm) == psd_charpoly_oracle(herm));
  }
}

TEST_CASE_TEMPLATE("gram_check on the canonical faithful functionals", S, Complex,
                   GaussianRational) {
  SUBCASE("uniform trace on C(X_n) has min eigenvalue 1/n") {
    for (std::size_t n : {2, 3, 5}) {
      StarAlgebra<S> a = function_algebra<S>(n);
      auto reps = gram_check(canonical_trace(a), a, 1e-9);
      CHECK(all_pass(reps));
      for (const auto& r : reps)
        if (r.name == "gram_faithful")
          CHECK(r.witness->real() == doctest::Approx(1.0 / (double)n));
    }
  }
  SUBCASE("point evaluation is positive but not faithful") {
    StarAlgebra<S> a = function_algebra<S>(2);
    Functional<S> eval0{{ScalarTraits<S>::one(), ScalarTraits<S>::zero()}};
    auto reps = gram_check(eval0, a, 1e-9);
    bool positive = false, faithful = true;
    for (const auto& r : reps) {
      if (r.name == "gram_positive") positive = r.pass;
      if (r.name == "gram_faithful") faithful = r.pass;
    }
    CHECK(positive);
    CHECK(!faithful);
    CHECK_THROWS_AS((void)positivity_check(a.unit, a, eval0, 1e-9), Error);
  }
  SUBCASE("Haar on C[S3] has the identity as Gram matrix") {
    HopfData<S> h = build_group_algebra<S>(symmetric_group3_table());
    const StarAlgebra<S>& a = *h.algebra;
    Mat<S> H = gram_matrix(a, *h.haar);
    CHECK(max_abs_diff(H, Mat<S>::identity(6)) == 0.0);
    CHECK(all_pass(gram_check(*h.haar, a, 1e-9)));
  }
}

TEST_CASE_TEMPLATE("a*a is positive for 100 random elements per gallery algebra", S, Complex,
                   GaussianRational) {
  std::vector<StarAlgebra<S>> gallery;
  gallery.push_back(function_algebra<S>(2));
  gallery.push_back(function_algebra<S>(3));
  gallery.push_back(*build_group_algebra<S>(cyclic_group_table(3)).algebra);
  gallery.push_back(*build_group_algebra<S>(symmetric_group3_table()).algebra);
  gallery.push_back(*build_function_algebra_of_group<S>(symmetric_group3_table()).algebra);
  for (const auto& a : gallery) {
    Functional<S> phi = canonical_trace(a);
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      Vec<S> v = random_vec<S>(rng, a.dim);
      PositivityResult p = positivity_check(a.mul(a.star_of(v), v), a, phi, 1e-9);
      CHECK(p.positive);
    }
  }
}

TEST_CASE("rref rank and kernel behave on both backends") {
  using S = GaussianRational;
  Mat<S> m(2, 3);
  m.at(0, 0) = from_int<S>(1);
  m.at(0, 1) = from_int<S>(2);
  m.at(0, 2) = from_int<S>(3);
  m.at(1, 0) = from_int<S>(2);
  m.at(1, 1) = from_int<S>(4);
  m.at(1, 2) = from_int<S>(6);
  CHECK(rank(m, 1e-9) == 1);
  KernelBasis<S> k = kernel_basis(m, 1e-9);
  CHECK(k.basis.cols == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    Vec<S> v = k.basis.column(c);
    Vec<S> mv = m.apply(v);
    CHECK(max_abs_diff(mv, zeros<S>(2)) == 0.0);
  }
}
