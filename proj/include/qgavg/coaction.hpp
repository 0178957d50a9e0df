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

#include <optional>

#include "qgavg/hopf.hpp"

namespace qgavg {

/// Finite group action data carried by coactions built from classical
/// actions; enables the classical averaging oracle.
struct GroupProvenance {
  std::vector<std::vector<int>> group;   // group[a][b] = a.b
  std::vector<std::vector<int>> action;  // action[g][x] = g.x
};

/// Coaction alpha: A -> A (x) Q as a (dim A * dim Q) x (dim A) matrix,
/// composite row (i,a) = i*dimQ + a.
template <class S>
struct Coaction {
  AlgebraPtr<S> base;
  HopfData<S> cqg;
  Mat<S> alpha;
  std::optional<GroupProvenance> provenance;

  std::size_t base_dim() const { return base->dim; }
  std::size_t cqg_dim() const { return cqg.dim(); }

  Vec<S> apply(const Vec<S>& x) const { return alpha.apply(x); }
};

/// Homomorphism, unitality, star compatibility, coassociativity, counit
/// property and Podles density (full rank of span alpha(A)(1 (x) Q)).
template <class S>
std::vector<Report> check_coaction_axioms(const Coaction<S>& c, double tol,
                                          const exec::Context& cx = {}) {
  const StarAlgebra<S>& A = *c.base;
  const StarAlgebra<S>& Q = *c.cqg.algebra;
  const std::size_t nA = A.dim, nQ = Q.dim;
  StarAlgebra<S> AQ = tensor_algebra(A, Q);
  std::vector<Report> reps;

  {
    ResidualMax<S> r;
    r.add_norm2(norm2_max(sub(c.apply(A.unit), AQ.unit)));
    reps.push_back(residual_report("alpha_unital", r, tol));
  }

  auto hom = exec::max_norm2<S>(cx, nA * nA, [&](std::size_t t) {
    std::size_t i = t / nA, j = t % nA;
    Vec<S> lhs = c.apply(A.mul(A.basis(i), A.basis(j)));
    Vec<S> rhs = AQ.mul(c.apply(A.basis(i)), c.apply(A.basis(j)));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("alpha_hom", hom, tol));

  auto star = exec::max_norm2<S>(cx, nA, [&](std::size_t i) {
    Vec<S> lhs = c.apply(A.star_of(A.basis(i)));
    Vec<S> rhs = AQ.star_of(c.apply(A.basis(i)));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("alpha_star", star, tol));

  auto coassoc = exec::max_norm2<S>(cx, nA, [&](std::size_t k) {
    Vec<S> v = c.apply(A.basis(k));
    Vec<S> lhs = map_leg1(c.alpha, v, nA, nQ);
    Vec<S> rhs = map_leg2(c.cqg.coproduct, v, nA, nQ);
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("alpha_coassoc", coassoc, tol));

  auto counit = exec::max_norm2<S>(cx, nA, [&](std::size_t k) {
    Vec<S> v = c.apply(A.basis(k));
    return norm2_max(sub(contract_leg2(c.cqg.counit.coeffs, v, nA, nQ), A.basis(k)));
  });
  reps.push_back(residual_report("alpha_counit", counit, tol));

  {
    Mat<S> span(nA * nQ, nA * nQ);
    for (std::size_t i = 0; i < nA; ++i) {
      Vec<S> ai = c.apply(A.basis(i));
      for (std::size_t j = 0; j < nQ; ++j) {
        Vec<S> v = AQ.mul(ai, outer(A.unit, Q.basis(j)));
        for (std::size_t r = 0; r < nA * nQ; ++r) span.at(r, i * nQ + j) = v[r];
      }
    }
    std::size_t rk = rank(span, tol);
    Report rep = flag_report("podles_density", rk == nA * nQ,
                             "rank " + std::to_string(rk) + " of " + std::to_string(nA * nQ));
    rep.witness = Complex(smallest_singular_value(span), 0.0);
    reps.push_back(rep);
  }

  return reps;
}

/// Closes the coordinate slices (omega_i (x) id) alpha(e_j) under products
/// and star; the coaction is faithful when the generated *-subalgebra is all
/// of Q. Iteration is capped at dim(Q)^2 rounds.
template <class S>
std::vector<Report> check_faithfulness(const Coaction<S>& c, double tol) {
  const StarAlgebra<S>& Q = *c.cqg.algebra;
  const std::size_t nA = c.base_dim(), nQ = Q.dim;

  std::vector<Vec<S>> gens;
  for (std::size_t i = 0; i < nA; ++i)
    for (std::size_t j = 0; j < nA; ++j) {
      Vec<S> s(nQ);
      for (std::size_t a = 0; a < nQ; ++a) s[a] = c.alpha.at(i * nQ + a, j);
      gens.push_back(std::move(s));
    }

  auto row_space = [&](const std::vector<Vec<S>>& rows) {
    Mat<S> m(rows.size(), nQ);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t j = 0; j < nQ; ++j) m.at(r, j) = rows[r][j];
    RrefResult<S> rr = rref(std::move(m), tol);
    std::vector<Vec<S>> basis;
    for (std::size_t r = 0; r < rr.rank; ++r) {
      Vec<S> v(nQ);
      for (std::size_t j = 0; j < nQ; ++j) v[j] = rr.r.at(r, j);
      basis.push_back(std::move(v));
    }
    return basis;
  };

  std::vector<Vec<S>> basis = row_space(gens);
  for (std::size_t round = 0; round < nQ * nQ; ++round) {
    std::size_t before = basis.size();
    std::vector<Vec<S>> cand = basis;
    for (const auto& v : basis) cand.push_back(Q.star_of(v));
    for (const auto& v : basis)
      for (const auto& w : basis) cand.push_back(Q.mul(v, w));
    basis = row_space(cand);
    if (basis.size() == before || basis.size() == nQ) break;
  }

  Report rep = flag_report("faithful_slices", basis.size() == nQ,
                           "generated *-subalgebra has dim " + std::to_string(basis.size()) +
                               " of " + std::to_string(nQ));
  return {rep};
}

/// rank(alpha) = dim A, with the smallest singular value as witness.
template <class S>
std::vector<Report> check_injectivity(const Coaction<S>& c, double tol) {
  std::size_t rk = rank(c.alpha, tol);
  Report rep = flag_report("alpha_injective", rk == c.base_dim(),
                           "rank " + std::to_string(rk) + " of " + std::to_string(c.base_dim()));
  rep.witness = Complex(smallest_singular_value(c.alpha), 0.0);
  return {rep};
}

/// alpha_phi(a) = (id (x) phi) alpha(a).
template <class S>
Vec<S> slice(const Coaction<S>& c, const Functional<S>& phi, const Vec<S>& a) {
  return contract_leg2(phi.coeffs, c.apply(a), c.base_dim(), c.cqg_dim());
}

/// Matrix of a -> (id (x) phi) alpha(a).
template <class S>
Mat<S> slice_matrix(const Coaction<S>& c, const Functional<S>& phi) {
  const std::size_t nA = c.base_dim(), nQ = c.cqg_dim();
  Mat<S> m(nA, nA);
  for (std::size_t k = 0; k < nA; ++k) {
    Vec<S> v = slice(c, phi, c.base->basis(k));
    for (std::size_t i = 0; i < nA; ++i) m.at(i, k) = v[i];
  }
  return m;
}

/// alpha_h is a conditional expectation; its idempotence is a consequence of
/// Haar invariance and is re-verified here.
template <class S>
std::vector<Report> check_haar_slice_idempotent(const Coaction<S>& c, double tol) {
  Mat<S> e = slice_matrix(c, c.cqg.haar_state());
  Mat<S> ee = e * e;
  ResidualMax<S> r;
  for (std::size_t i = 0; i < e.rows; ++i)
    for (std::size_t j = 0; j < e.cols; ++j) r.add(ee.at(i, j) - e.at(i, j));
  return {residual_report("haar_slice_idempotent", r, tol)};
}

}  // namespace qgavg
