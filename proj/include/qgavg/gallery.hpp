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

#include <array>
#include <string>

#include "qgavg/metric.hpp"

namespace qgavg {

using GroupTable = std::vector<std::vector<int>>;
using ActionTable = std::vector<std::vector<int>>;

// ---- finite group plumbing ------------------------------------------------

inline void validate_group(const GroupTable& t) {
  const std::size_t n = t.size();
  require(n > 0, Errc::NotAGroup, "empty table");
  for (const auto& row : t) {
    require(row.size() == n, Errc::NotAGroup, "table is not square");
    for (int v : row) require(v >= 0 && (std::size_t)v < n, Errc::NotAGroup, "entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        require(t[t[a][b]][c] == t[a][t[b][c]], Errc::NotAGroup, "table is not associative");
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool ident = true;
    for (std::size_t j = 0; j < n; ++j) ident = ident && t[i][j] == (int)j && t[j][i] == (int)j;
    if (ident) e = i;
  }
  require(e < n, Errc::NotAGroup, "no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inv = false;
    for (std::size_t b = 0; b < n; ++b) has_inv = has_inv || (t[a][b] == (int)e && t[b][a] == (int)e);
    require(has_inv, Errc::NotAGroup, "element without inverse");
  }
}

inline std::size_t group_identity(const GroupTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool ident = true;
    for (std::size_t j = 0; j < t.size(); ++j)
      ident = ident && t[i][j] == (int)j && t[j][i] == (int)j;
    if (ident) return i;
  }
  throw Error(Errc::NotAGroup, "no identity element");
}

inline std::vector<std::size_t> group_inverses(const GroupTable& t) {
  std::size_t e = group_identity(t);
  std::vector<std::size_t> inv(t.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[a][b] == (int)e && t[b][a] == (int)e) inv[a] = b;
  return inv;
}

inline void validate_action(const GroupTable& t, const ActionTable& act) {
  validate_group(t);
  require(act.size() == t.size(), Errc::NotAnAction, "one row per group element expected");
  const std::size_t nx = act.empty() ? 0 : act[0].size();
  require(nx > 0, Errc::NotAnAction, "empty set");
  for (const auto& row : act) {
    require(row.size() == nx, Errc::NotAnAction, "ragged action table");
    std::vector<char> seen(nx, 0);
    for (int v : row) {
      require(v >= 0 && (std::size_t)v < nx, Errc::NotAnAction, "action entry out of range");
      require(!seen[v], Errc::NotAnAction, "group element does not act bijectively");
      seen[v] = 1;
    }
  }
  std::size_t e = group_identity(t);
  for (std::size_t x = 0; x < nx; ++x)
    require(act[e][x] == (int)x, Errc::NotAnAction, "identity does not act trivially");
  for (std::size_t g = 0; g < t.size(); ++g)
    for (std::size_t h = 0; h < t.size(); ++h)
      for (std::size_t x = 0; x < nx; ++x)
        require(act[t[g][h]][x] == act[g][act[h][x]], Errc::NotAnAction,
                "action is not compatible with the group law");
}

inline GroupTable cyclic_group_table(std::size_t n) {
  GroupTable t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (int)((a + b) % n);
  return t;
}

/// Permutations of {0,1,2} in lexicographic one-line order; composition
/// (p.q)(x) = p(q(x)).
inline const std::vector<std::array<int, 3>>& s3_permutations() {
  static const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return perms;
}

inline GroupTable symmetric_group3_table() {
  const auto& perms = s3_permutations();
  GroupTable t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      for (std::size_t c = 0; c < 6; ++c)
        if (perms[c] == comp) t[a][b] = (int)c;
    }
  return t;
}

inline ActionTable s3_natural_action() {
  const auto& perms = s3_permutations();
  ActionTable act(6, std::vector<int>(3));
  for (std::size_t g = 0; g < 6; ++g)
    for (int x = 0; x < 3; ++x) act[g][x] = perms[g][x];
  return act;
}

inline std::vector<std::string> element_names(const GroupTable& t) {
  if (t.size() == 6 && t == symmetric_group3_table()) {
    std::vector<std::string> names;
    for (const auto& p : s3_permutations())
      names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    return names;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t.size(); ++i) names.push_back(std::to_string(i));
  return names;
}

// ---- algebra builders -----------------------------------------------------

/// C(X_n): functions on n points, pointwise product.
template <class S>
StarAlgebra<S> function_algebra(std::size_t n, const std::string& prefix = "x") {
  StarAlgebra<S> a;
  a.dim = n;
  for (std::size_t i = 0; i < n; ++i) a.basis_labels.push_back(prefix + std::to_string(i));
  a.mult = Tensor3<S>(n, n, n);
  for (std::size_t i = 0; i < n; ++i) a.mult.at(i, i, i) = ScalarTraits<S>::one();
  a.unit = Vec<S>(n, ScalarTraits<S>::one());
  a.star = Mat<S>::identity(n);
  return a;
}

/// C(G): Delta delta_g = sum_{ab=g} delta_a (x) delta_b, eps = evaluation at
/// the identity, kappa(delta_g) = delta_{g^{-1}}; Haar computed (uniform).
template <class S>
HopfData<S> build_function_algebra_of_group(const GroupTable& t, double tol = 1e-9) {
  validate_group(t);
  const std::size_t n = t.size();
  auto names = element_names(t);
  StarAlgebra<S> a = function_algebra<S>(n, "d");
  for (std::size_t i = 0; i < n; ++i) a.basis_labels[i] = "d" + names[i];

  HopfData<S> H;
  H.algebra = make_algebra(std::move(a));
  H.coproduct = Mat<S>(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      H.coproduct.at(x * n + y, (std::size_t)t[x][y]) = ScalarTraits<S>::one();
  H.counit.coeffs = zeros<S>(n);
  H.counit.coeffs[group_identity(t)] = ScalarTraits<S>::one();
  auto inv = group_inverses(t);
  H.antipode = Mat<S>(n, n);
  for (std::size_t g = 0; g < n; ++g) H.antipode.at(inv[g], g) = ScalarTraits<S>::one();
  H.haar = compute_haar(H, tol);
  return H;
}

/// C[G]: convolution product, group-like coproduct, eps = 1,
/// kappa(u_g) = u_g^* = u_{g^{-1}}; Haar computed (delta at the identity).
template <class S>
HopfData<S> build_group_algebra(const GroupTable& t, double tol = 1e-9) {
  validate_group(t);
  const std::size_t n = t.size();
  auto names = element_names(t);
  auto inv = group_inverses(t);

  StarAlgebra<S> a;
  a.dim = n;
  for (std::size_t i = 0; i < n; ++i) a.basis_labels.push_back("u" + names[i]);
  a.mult = Tensor3<S>(n, n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      a.mult.at(g, h, (std::size_t)t[g][h]) = ScalarTraits<S>::one();
  a.unit = zeros<S>(n);
  a.unit[group_identity(t)] = ScalarTraits<S>::one();
  a.star = Mat<S>(n, n);
  for (std::size_t g = 0; g < n; ++g) a.star.at(g, inv[g]) = ScalarTraits<S>::one();

  HopfData<S> H;
  H.algebra = make_algebra(std::move(a));
  H.coproduct = Mat<S>(n * n, n);
  for (std::size_t g = 0; g < n; ++g)
    H.coproduct.at(g * n + g, g) = ScalarTraits<S>::one();
  H.counit.coeffs = Vec<S>(n, ScalarTraits<S>::one());
  H.antipode = Mat<S>(n, n);
  for (std::size_t g = 0; g < n; ++g) H.antipode.at(inv[g], g) = ScalarTraits<S>::one();
  H.haar = compute_haar(H, tol);
  return H;
}

/// The one-dimensional CQG (Q = C).
template <class S>
HopfData<S> trivial_cqg(double tol = 1e-9) {
  return build_group_algebra<S>(GroupTable{{0}}, tol);
}

// ---- coaction builders ----------------------------------------------------

/// Classical action as a coaction of C(G) on C(X):
/// alpha(delta_x) = sum_g delta_{g^{-1}.x} (x) delta_g, so the slice at
/// evaluation-in-g is the pullback by g. Provenance is recorded for the
/// classical oracle.
template <class S>
Coaction<S> build_classical_coaction(const GroupTable& t, const ActionTable& act,
                                     double tol = 1e-9) {
  validate_action(t, act);
  const std::size_t ng = t.size(), nx = act[0].size();
  Coaction<S> c;
  c.cqg = build_function_algebra_of_group<S>(t, tol);
  c.base = make_algebra(function_algebra<S>(nx));
  c.alpha = Mat<S>(nx * ng, nx);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t g = 0; g < ng; ++g) {
      std::size_t y = 0;
      while ((std::size_t)act[g][y] != x) ++y;  // y = g^{-1}.x
      c.alpha.at(y * ng + g, x) = ScalarTraits<S>::one();
    }
  c.provenance = GroupProvenance{t, act};
  return c;
}

/// The coproduct as a coaction of H on its own algebra.
template <class S>
Coaction<S> build_regular_coaction(const HopfData<S>& H, double tol = 1e-9) {
  Coaction<S> c;
  c.cqg = H;
  if (!c.cqg.haar) c.cqg.haar = compute_haar(c.cqg, tol);
  c.base = H.algebra;
  c.alpha = H.coproduct;
  return c;
}

/// alpha(a) = a (x) 1 for a given CQG.
template <class S>
Coaction<S> trivial_coaction(AlgebraPtr<S> base, const HopfData<S>& H) {
  Coaction<S> c;
  c.cqg = H;
  c.base = std::move(base);
  const std::size_t nA = c.base->dim, nQ = c.cqg.dim();
  c.alpha = Mat<S>(nA * nQ, nA);
  for (std::size_t i = 0; i < nA; ++i)
    for (std::size_t q = 0; q < nQ; ++q)
      c.alpha.at(i * nQ + q, i) = ScalarTraits<S>::one() * c.cqg.algebra->unit[q];
  return c;
}

// ---- gallery metrics ------------------------------------------------------

/// Diagonal edge metric on the universal calculus of C(X_n):
/// << e_xy, e_xy >> = w(x,y) delta_y. Weights must be real (self-adjoint).
template <class S>
InnerProduct<S> edge_metric(const Calculus<S>& calc, const Mat<S>& weights) {
  const StarAlgebra<S>& A = *calc.base;
  require(A.is_commutative() && calc.embedding.has_value(), Errc::Inconsistent,
          "edge metric lives on the universal calculus of a function algebra");
  const std::size_t n = A.dim, m = calc.module_dim;
  InnerProduct<S> g = zero_inner_product(calc);
  for (std::size_t w = 0; w < m; ++w) {
    std::size_t idx = calc.coordinate_rows[w];
    std::size_t x = idx / n, y = idx % n;
    g.at(w, w)[y] = weights.at(x, y);
  }
  return g;
}

/// Strictly positive seeded metric on a universal calculus over any base:
/// with omega = sum_r e_r (x) omega_r, set
/// << omega, eta >> = sum_r omega_r^* (q_r^* q_r + 1) eta_r
/// for seeded random q_r. Hermitian, right-linear and definite by
/// construction.
template <class S>
InnerProduct<S> seeded_row_metric(const Calculus<S>& calc, std::uint64_t seed) {
  const StarAlgebra<S>& A = *calc.base;
  require(calc.embedding.has_value(), Errc::Inconsistent,
          "row metric needs the universal-calculus embedding");
  const std::size_t n = A.dim, m = calc.module_dim;
  Rng rng(seed);
  std::vector<Vec<S>> pos(n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec<S> q = random_vec<S>(rng, n);
    pos[r] = A.mul(A.star_of(q), q);
    for (std::size_t t = 0; t < n; ++t) pos[r][t] += A.unit[t];
  }
  // row_r(i) in A: the r-th row of the embedded basis vector omega_i.
  std::vector<Vec<S>> srow(n * m), prow(n * m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec<S> big = calc.embedding->column(i);
    for (std::size_t r = 0; r < n; ++r) {
      Vec<S> row(n);
      for (std::size_t b = 0; b < n; ++b) row[b] = big[r * n + b];
      srow[r * m + i] = A.star_of(row);
      prow[r * m + i] = A.mul(pos[r], row);
    }
  }
  InnerProduct<S> g = zero_inner_product(calc);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec<S> acc = zeros<S>(n);
      for (std::size_t r = 0; r < n; ++r)
        axpy(acc, ScalarTraits<S>::one(), A.mul(srow[r * m + i], prow[r * m + j]));
      g.at(i, j) = std::move(acc);
    }
  return g;
}

}  // namespace qgavg
