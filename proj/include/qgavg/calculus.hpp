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

#include "qgavg/coaction.hpp"

namespace qgavg {

/// First-order differential calculus over A: an A-bimodule Omega with a
/// derivation d. The universal calculus Omega = ker(mult) in A (x) A also
/// carries the embedding and its coordinate rows (the kernel basis is in
/// reduced form, so module coordinates are read off at those rows).
template <class S>
struct Calculus {
  AlgebraPtr<S> base;
  std::size_t module_dim = 0;
  Tensor3<S> left;    // left.at(f, w, w'): e_f . omega_w = sum_{w'} ... omega_{w'}
  Tensor3<S> right;   // right.at(w, f, w'): omega_w . e_f
  Mat<S> diff;        // (module_dim x dim A)
  std::optional<Mat<S>> embedding;            // (dim A)^2 x module_dim
  std::vector<std::size_t> coordinate_rows;   // valid when embedding present

  Vec<S> left_act(const Vec<S>& f, const Vec<S>& w) const {
    Vec<S> out = zeros<S>(module_dim);
    for (std::size_t i = 0; i < base->dim; ++i) {
      if (ScalarTraits<S>::is_zero(f[i])) continue;
      for (std::size_t a = 0; a < module_dim; ++a) {
        S c = f[i] * w[a];
        if (ScalarTraits<S>::is_zero(w[a])) continue;
        for (std::size_t b = 0; b < module_dim; ++b) out[b] += c * left.at(i, a, b);
      }
    }
    return out;
  }

  Vec<S> right_act(const Vec<S>& w, const Vec<S>& f) const {
    Vec<S> out = zeros<S>(module_dim);
    for (std::size_t a = 0; a < module_dim; ++a) {
      if (ScalarTraits<S>::is_zero(w[a])) continue;
      for (std::size_t i = 0; i < base->dim; ++i) {
        S c = w[a] * f[i];
        if (ScalarTraits<S>::is_zero(f[i])) continue;
        for (std::size_t b = 0; b < module_dim; ++b) out[b] += c * right.at(a, i, b);
      }
    }
    return out;
  }

  Vec<S> d(const Vec<S>& f) const { return diff.apply(f); }

  /// Module coordinates of a vector of A (x) A known to lie in the kernel.
  Vec<S> coords(const Vec<S>& big) const {
    Vec<S> out(module_dim);
    for (std::size_t t = 0; t < module_dim; ++t) out[t] = big[coordinate_rows[t]];
    return out;
  }

  Vec<S> embed(const Vec<S>& w) const {
    require(embedding.has_value(), Errc::Inconsistent, "calculus has no embedding");
    return embedding->apply(w);
  }
};

/// The universal first-order calculus Omega = ker(mult: A (x) A -> A) with
/// f.(a (x) b) = fa (x) b, (a (x) b).f = a (x) bf and d f = 1 (x) f - f (x) 1.
template <class S>
Calculus<S> universal_calculus(const AlgebraPtr<S>& A, double tol = 1e-9) {
  const StarAlgebra<S>& a = *A;
  const std::size_t n = a.dim;
  Mat<S> mult_map(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mult_map.at(k, i * n + j) = a.mult.at(i, j, k);

  KernelBasis<S> ker = kernel_basis(mult_map, tol);
  Calculus<S> c;
  c.base = A;
  c.module_dim = ker.free_cols.size();
  c.embedding = ker.basis;
  c.coordinate_rows = ker.free_cols;
  require(c.module_dim == n * n - n, Errc::Inconsistent,
          "multiplication map of a unital algebra must have full rank");

  const Mat<S>& E = *c.embedding;
  c.left = Tensor3<S>(n, c.module_dim, c.module_dim);
  c.right = Tensor3<S>(c.module_dim, n, c.module_dim);
  for (std::size_t w = 0; w < c.module_dim; ++w) {
    Vec<S> big = E.column(w);
    for (std::size_t f = 0; f < n; ++f) {
      Vec<S> lbig = zeros<S>(n * n), rbig = zeros<S>(n * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const S& v = big[p * n + q];
          if (ScalarTraits<S>::is_zero(v)) continue;
          for (std::size_t k = 0; k < n; ++k) {
            lbig[k * n + q] += v * a.mult.at(f, p, k);
            rbig[p * n + k] += v * a.mult.at(q, f, k);
          }
        }
      Vec<S> lc = c.coords(lbig), rc = c.coords(rbig);
      for (std::size_t b = 0; b < c.module_dim; ++b) {
        c.left.at(f, w, b) = lc[b];
        c.right.at(w, f, b) = rc[b];
      }
    }
  }

  c.diff = Mat<S>(c.module_dim, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec<S> big = sub(outer(a.unit, a.basis(k)), outer(a.basis(k), a.unit));
    Vec<S> cc = c.coords(big);
    for (std::size_t b = 0; b < c.module_dim; ++b) c.diff.at(b, k) = cc[b];
  }
  return c;
}

/// Bimodule laws, Leibniz rule and generation of Omega by { f . dg }.
template <class S>
std::vector<Report> check_calculus_axioms(const Calculus<S>& c, double tol,
                                          const exec::Context& cx = {}) {
  const StarAlgebra<S>& A = *c.base;
  const std::size_t n = A.dim, m = c.module_dim;
  std::vector<Report> reps;

  auto bimod = exec::max_norm2<S>(cx, n * m * n, [&](std::size_t t) {
    std::size_t f = t / (m * n), w = (t / n) % m, g = t % n;
    Vec<S> ef = A.basis(f), eg = A.basis(g), ew = unit_vec<S>(m, w);
    auto r1 = norm2_max(sub(c.right_act(c.left_act(ef, ew), eg),
                            c.left_act(ef, c.right_act(ew, eg))));
    auto r2 = norm2_max(sub(c.left_act(A.mul(ef, eg), ew),
                            c.left_act(ef, c.left_act(eg, ew))));
    auto r3 = norm2_max(sub(c.right_act(ew, A.mul(ef, eg)),
                            c.right_act(c.right_act(ew, ef), eg)));
    auto mx = r1 < r2 ? r2 : r1;
    return mx < r3 ? r3 : mx;
  });
  reps.push_back(residual_report("bimodule_assoc", bimod, tol));

  auto unit = exec::max_norm2<S>(cx, m, [&](std::size_t w) {
    Vec<S> ew = unit_vec<S>(m, w);
    auto r1 = norm2_max(sub(c.left_act(A.unit, ew), ew));
    auto r2 = norm2_max(sub(c.right_act(ew, A.unit), ew));
    return r1 < r2 ? r2 : r1;
  });
  reps.push_back(residual_report("bimodule_unit", unit, tol));

  auto leibniz = exec::max_norm2<S>(cx, n * n, [&](std::size_t t) {
    std::size_t i = t / n, j = t % n;
    Vec<S> ei = A.basis(i), ej = A.basis(j);
    Vec<S> lhs = c.d(A.mul(ei, ej));
    Vec<S> rhs = c.right_act(c.d(ei), ej);
    axpy(rhs, ScalarTraits<S>::one(), c.left_act(ei, c.d(ej)));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("leibniz", leibniz, tol));

  {
    Mat<S> span(m, n * n);
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g) {
        Vec<S> v = c.left_act(A.basis(f), c.d(A.basis(g)));
        for (std::size_t b = 0; b < m; ++b) span.at(b, f * n + g) = v[b];
      }
    std::size_t rk = rank(span, tol);
    reps.push_back(flag_report("generation", rk == m,
                               "rank " + std::to_string(rk) + " of " + std::to_string(m)));
  }

  return reps;
}

/// Right multiplication of Omega (x) Q by an element of A (x) Q.
template <class S>
Vec<S> module_right_mult(const Calculus<S>& c, const StarAlgebra<S>& Q, const Vec<S>& xi,
                         const Vec<S>& F) {
  const std::size_t m = c.module_dim, nA = c.base->dim, nQ = Q.dim;
  Vec<S> out = zeros<S>(m * nQ);
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t q = 0; q < nQ; ++q) {
      const S& x = xi[w * nQ + q];
      if (ScalarTraits<S>::is_zero(x)) continue;
      for (std::size_t a = 0; a < nA; ++a)
        for (std::size_t r = 0; r < nQ; ++r) {
          const S& f = F[a * nQ + r];
          if (ScalarTraits<S>::is_zero(f)) continue;
          S cfac = x * f;
          for (std::size_t w2 = 0; w2 < m; ++w2) {
            const S& rc = c.right.at(w, a, w2);
            if (ScalarTraits<S>::is_zero(rc)) continue;
            for (std::size_t k = 0; k < nQ; ++k)
              out[w2 * nQ + k] += cfac * rc * Q.mult.at(q, r, k);
          }
        }
    }
  return out;
}

/// Left multiplication of Omega (x) Q by an element of A (x) Q.
template <class S>
Vec<S> module_left_mult(const Calculus<S>& c, const StarAlgebra<S>& Q, const Vec<S>& F,
                        const Vec<S>& xi) {
  const std::size_t m = c.module_dim, nA = c.base->dim, nQ = Q.dim;
  Vec<S> out = zeros<S>(m * nQ);
  for (std::size_t a = 0; a < nA; ++a)
    for (std::size_t r = 0; r < nQ; ++r) {
      const S& f = F[a * nQ + r];
      if (ScalarTraits<S>::is_zero(f)) continue;
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t q = 0; q < nQ; ++q) {
          const S& x = xi[w * nQ + q];
          if (ScalarTraits<S>::is_zero(x)) continue;
          S cfac = f * x;
          for (std::size_t w2 = 0; w2 < m; ++w2) {
            const S& lc = c.left.at(a, w, w2);
            if (ScalarTraits<S>::is_zero(lc)) continue;
            for (std::size_t k = 0; k < nQ; ++k)
              out[w2 * nQ + k] += cfac * lc * Q.mult.at(r, q, k);
          }
        }
    }
  return out;
}

/// Lifted coaction Gamma: Omega -> Omega (x) Q, (module_dim * dim Q) x
/// module_dim matrix.
template <class S>
struct LiftedCoaction {
  Calculus<S> calculus;
  Coaction<S> coaction;
  Mat<S> gamma;

  Vec<S> apply(const Vec<S>& w) const { return gamma.apply(w); }
};

/// Gamma(df) = (d (x) id) alpha(f), bimodule covariance on both sides, and
/// coassociativity of Gamma.
template <class S>
std::vector<Report> check_lift_invariants(const LiftedCoaction<S>& L, double tol,
                                          const exec::Context& cx = {}) {
  const Calculus<S>& c = L.calculus;
  const StarAlgebra<S>& A = *c.base;
  const StarAlgebra<S>& Q = *L.coaction.cqg.algebra;
  const std::size_t nA = A.dim, nQ = Q.dim, m = c.module_dim;
  std::vector<Report> reps;

  auto compat = exec::max_norm2<S>(cx, nA, [&](std::size_t k) {
    Vec<S> lhs = L.apply(c.d(A.basis(k)));
    Vec<S> rhs = map_leg1(c.diff, L.coaction.apply(A.basis(k)), nA, nQ);
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("gamma_diff_compat", compat, tol));

  auto cov_r = exec::max_norm2<S>(cx, m * nA, [&](std::size_t t) {
    std::size_t w = t / nA, f = t % nA;
    Vec<S> ew = unit_vec<S>(m, w);
    Vec<S> lhs = L.apply(c.right_act(ew, A.basis(f)));
    Vec<S> rhs = module_right_mult(c, Q, L.apply(ew), L.coaction.apply(A.basis(f)));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("gamma_covariant_right", cov_r, tol));

  auto cov_l = exec::max_norm2<S>(cx, m * nA, [&](std::size_t t) {
    std::size_t w = t / nA, f = t % nA;
    Vec<S> ew = unit_vec<S>(m, w);
    Vec<S> lhs = L.apply(c.left_act(A.basis(f), ew));
    Vec<S> rhs = module_left_mult(c, Q, L.coaction.apply(A.basis(f)), L.apply(ew));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("gamma_covariant_left", cov_l, tol));

  auto coassoc = exec::max_norm2<S>(cx, m, [&](std::size_t w) {
    Vec<S> v = L.apply(unit_vec<S>(m, w));
    Vec<S> lhs = map_leg1(L.gamma, v, m, nQ);
    Vec<S> rhs = map_leg2(L.coaction.cqg.coproduct, v, m, nQ);
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("gamma_coassoc", coassoc, tol));

  return reps;
}

/// (id (x) eps) Gamma = id on Omega.
template <class S>
std::vector<Report> check_counit_section(const LiftedCoaction<S>& L, double tol,
                                         const exec::Context& cx = {}) {
  const std::size_t m = L.calculus.module_dim, nQ = L.coaction.cqg_dim();
  auto res = exec::max_norm2<S>(cx, m, [&](std::size_t w) {
    Vec<S> ew = unit_vec<S>(m, w);
    Vec<S> v = L.apply(ew);
    return norm2_max(sub(contract_leg2(L.coaction.cqg.counit.coeffs, v, m, nQ), ew));
  });
  return {residual_report("counit_section", res, tol)};
}

/// Builds Gamma. On the universal calculus this is the restriction of
/// (id (x) id (x) m_Q)(id (x) swap (x) id)(alpha (x) alpha), which lands in
/// Omega (x) Q because alpha is an algebra homomorphism; membership is still
/// verified. For an explicit calculus Gamma is determined on the spanning
/// set { f . dg } by covariance and solved for; if no map satisfies every
/// invariant within tol, the calculus admits no covariant lift and
/// NotCovariant is thrown.
template <class S>
LiftedCoaction<S> lift_coaction(const Coaction<S>& co, const Calculus<S>& calc,
                                double tol = 1e-9, const exec::Context& cx = {}) {
  const StarAlgebra<S>& A = *calc.base;
  const StarAlgebra<S>& Q = *co.cqg.algebra;
  const std::size_t nA = A.dim, nQ = Q.dim, m = calc.module_dim;
  require(co.base.get() == calc.base.get(), Errc::Inconsistent,
          "coaction and calculus have different base algebras");

  LiftedCoaction<S> L;
  L.calculus = calc;
  L.coaction = co;
  L.gamma = Mat<S>(m * nQ, m);

  if (calc.embedding) {
    const Mat<S>& E = *calc.embedding;
    ResidualMax<S> membership;
    for (std::size_t w = 0; w < m; ++w) {
      Vec<S> v = E.column(w);
      // alpha on both A legs, then multiply the two Q legs together.
      Vec<S> w1 = map_leg1(co.alpha, v, nA, nA);            // ((i,p), b)
      Vec<S> w2 = map_leg2(co.alpha, w1, nA * nQ, nA);      // ((i,p), (j,q))
      Vec<S> u = zeros<S>(nA * nA * nQ);                    // ((i,j), k)
      for (std::size_t ip = 0; ip < nA * nQ; ++ip) {
        std::size_t i = ip / nQ, p = ip % nQ;
        for (std::size_t jq = 0; jq < nA * nQ; ++jq) {
          const S& coef = w2[ip * nA * nQ + jq];
          if (ScalarTraits<S>::is_zero(coef)) continue;
          std::size_t j = jq / nQ, q = jq % nQ;
          for (std::size_t k = 0; k < nQ; ++k)
            u[(i * nA + j) * nQ + k] += coef * Q.mult.at(p, q, k);
        }
      }
      for (std::size_t k = 0; k < nQ; ++k) {
        Vec<S> leg(nA * nA);
        for (std::size_t ij = 0; ij < nA * nA; ++ij) leg[ij] = u[ij * nQ + k];
        Vec<S> cc = calc.coords(leg);
        membership.add_norm2(norm2_max(sub(calc.embed(cc), leg)));
        for (std::size_t w2i = 0; w2i < m; ++w2i) L.gamma.at(w2i * nQ + k, w) = cc[w2i];
      }
    }
    require(membership.within(tol), Errc::NotCovariant,
            "lifted coaction does not preserve the kernel of multiplication");
  } else {
    // Spanning vectors f.dg and their forced images alpha(f).(d (x) id)alpha(g).
    Mat<S> V(m, nA * nA), W(m * nQ, nA * nA);
    for (std::size_t f = 0; f < nA; ++f)
      for (std::size_t g = 0; g < nA; ++g) {
        Vec<S> v = calc.left_act(A.basis(f), calc.d(A.basis(g)));
        Vec<S> target = module_left_mult(
            calc, Q, co.apply(A.basis(f)),
            map_leg1(calc.diff, co.apply(A.basis(g)), nA, nQ));
        for (std::size_t b = 0; b < m; ++b) V.at(b, f * nA + g) = v[b];
        for (std::size_t r = 0; r < m * nQ; ++r) W.at(r, f * nA + g) = target[r];
      }
    auto X = solve_through_spanning(V, W, tol);
    require(X.has_value(), Errc::NotCovariant,
            "calculus is not generated by { f.dg }; no covariant lift");
    L.gamma = *X;
    ResidualMax<S> welldef;
    Mat<S> resid = L.gamma * V;
    for (std::size_t r = 0; r < W.rows; ++r)
      for (std::size_t col = 0; col < W.cols; ++col)
        welldef.add(resid.at(r, col) - W.at(r, col));
    require(welldef.within(tol), Errc::NotCovariant,
            "covariance constraints are inconsistent on the spanning set");
  }

  std::vector<Report> invariants = check_lift_invariants(L, tol, cx);
  append(invariants, check_counit_section(L, tol, cx));
  for (const Report& r : invariants)
    require(r.pass, Errc::NotCovariant,
            "lift invariant failed: " + r.name + " residual " + std::to_string(r.residual));
  return L;
}

}  // namespace qgavg
