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

#include "qgavg/algebra.hpp"

namespace qgavg {

/// Hopf *-algebra data on a StarAlgebra: coproduct (dim^2 x dim matrix,
/// composite row (i,j) = i*dim + j), counit, antipode, and the Haar
/// functional once computed.
template <class S>
struct HopfData {
  AlgebraPtr<S> algebra;
  Mat<S> coproduct;
  Functional<S> counit;
  Mat<S> antipode;
  std::optional<Functional<S>> haar;

  std::size_t dim() const { return algebra->dim; }

  Vec<S> delta(const Vec<S>& x) const { return coproduct.apply(x); }
  Vec<S> kappa(const Vec<S>& x) const { return antipode.apply(x); }

  const Functional<S>& haar_state() const {
    require(haar.has_value(), Errc::Inconsistent, "Haar functional not computed");
    return *haar;
  }
};

/// Coassociativity, counit laws, *-homomorphism properties of the coproduct
/// and counit, the antipode law, and the Kac-type properties kappa^2 = id,
/// kappa(a^*) = kappa(a)^*.
template <class S>
std::vector<Report> check_hopf_axioms(const HopfData<S>& H, double tol,
                                      const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  const std::size_t n = Q.dim;
  StarAlgebra<S> QQ = tensor_algebra(Q, Q);
  std::vector<Report> reps;

  auto coassoc = exec::max_norm2<S>(cx, n, [&](std::size_t k) {
    Vec<S> d = H.delta(Q.basis(k));
    Vec<S> lhs = map_leg1(H.coproduct, d, n, n);
    Vec<S> rhs = map_leg2(H.coproduct, d, n, n);
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("coassoc", coassoc, tol));

  auto counit_law = exec::max_norm2<S>(cx, n, [&](std::size_t k) {
    Vec<S> e = Q.basis(k);
    Vec<S> d = H.delta(e);
    auto r1 = norm2_max(sub(contract_leg1(H.counit.coeffs, d, n, n), e));
    auto r2 = norm2_max(sub(contract_leg2(H.counit.coeffs, d, n, n), e));
    return r1 < r2 ? r2 : r1;
  });
  reps.push_back(residual_report("counit_law", counit_law, tol));

  {
    ResidualMax<S> r;
    r.add_norm2(norm2_max(sub(H.delta(Q.unit), QQ.unit)));
    reps.push_back(residual_report("coproduct_unital", r, tol));
  }

  auto hom = exec::max_norm2<S>(cx, n * n, [&](std::size_t t) {
    std::size_t i = t / n, j = t % n;
    Vec<S> prod = Q.mul(Q.basis(i), Q.basis(j));
    Vec<S> lhs = H.delta(prod);
    Vec<S> rhs = QQ.mul(H.delta(Q.basis(i)), H.delta(Q.basis(j)));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("coproduct_hom", hom, tol));

  auto dstar = exec::max_norm2<S>(cx, n, [&](std::size_t i) {
    Vec<S> lhs = H.delta(Q.star_of(Q.basis(i)));
    Vec<S> rhs = QQ.star_of(H.delta(Q.basis(i)));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("coproduct_star", dstar, tol));

  {
    ResidualMax<S> r;
    r.add(H.counit(Q.unit) - ScalarTraits<S>::one());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.add(H.counit(Q.mul(Q.basis(i), Q.basis(j))) -
              H.counit(Q.basis(i)) * H.counit(Q.basis(j)));
    for (std::size_t i = 0; i < n; ++i)
      r.add(H.counit(Q.star_of(Q.basis(i))) -
            ScalarTraits<S>::conj(H.counit(Q.basis(i))));
    reps.push_back(residual_report("counit_hom", r, tol));
  }

  auto antipode_law = exec::max_norm2<S>(cx, n, [&](std::size_t k) {
    Vec<S> e = Q.basis(k);
    Vec<S> d = H.delta(e);
    Vec<S> target = scaled(Q.unit, H.counit(e));
    auto r1 = norm2_max(sub(mul_contract(Q, map_leg1(H.antipode, d, n, n)), target));
    auto r2 = norm2_max(sub(mul_contract(Q, map_leg2(H.antipode, d, n, n)), target));
    return r1 < r2 ? r2 : r1;
  });
  reps.push_back(residual_report("antipode_law", antipode_law, tol));

  auto invol = exec::max_norm2<S>(cx, n, [&](std::size_t i) {
    Vec<S> e = Q.basis(i);
    return norm2_max(sub(H.kappa(H.kappa(e)), e));
  });
  reps.push_back(residual_report("antipode_involutive", invol, tol));

  auto kstar = exec::max_norm2<S>(cx, n, [&](std::size_t i) {
    Vec<S> e = Q.basis(i);
    return norm2_max(sub(H.kappa(Q.star_of(e)), Q.star_of(H.kappa(e))));
  });
  reps.push_back(residual_report("antipode_star", kstar, tol));

  return reps;
}

/// True when the Kac-type identities needed by the averaging pipeline hold:
/// kappa^2 = id, kappa commutes with *, and (when present) the Haar state is
/// tracial.
template <class S>
bool is_kac(const HopfData<S>& H, double tol) {
  const StarAlgebra<S>& Q = *H.algebra;
  ResidualMax<S> r;
  for (std::size_t i = 0; i < Q.dim; ++i) {
    Vec<S> e = Q.basis(i);
    r.add_norm2(norm2_max(sub(H.kappa(H.kappa(e)), e)));
    r.add_norm2(norm2_max(sub(H.kappa(Q.star_of(e)), Q.star_of(H.kappa(e)))));
  }
  if (H.haar) {
    const Functional<S>& h = *H.haar;
    for (std::size_t i = 0; i < Q.dim; ++i)
      for (std::size_t j = 0; j < Q.dim; ++j)
        r.add(h(Q.mul(Q.basis(i), Q.basis(j))) - h(Q.mul(Q.basis(j), Q.basis(i))));
  }
  return r.within(tol);
}

/// Solves the two-sided invariance system (h (x) id)Delta(a) = h(a) 1 =
/// (id (x) h)Delta(a), normalized to h(1) = 1. Unique solvability is part of
/// the contract; positivity is post-checked.
template <class S>
Functional<S> compute_haar(const HopfData<S>& H, double tol) {
  const StarAlgebra<S>& Q = *H.algebra;
  const std::size_t n = Q.dim;
  Mat<S> sys(2 * n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec<S> d = H.delta(Q.basis(k));
    // (h (x) id)Delta(e_k) - h(e_k) u: row (k,t), unknown index i
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t i = 0; i < n; ++i) {
        S c = d[i * n + t];
        if (i == k) c -= Q.unit[t];
        sys.at(k * n + t, i) = c;
      }
    // (id (x) h)Delta(e_k) - h(e_k) u: row offset n*n
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < n; ++j) {
        S c = d[t * n + j];
        if (j == k) c -= Q.unit[t];
        sys.at(n * n + k * n + t, j) = c;
      }
  }
  KernelBasis<S> ker = kernel_basis(sys, tol);
  require(ker.basis.cols >= 1, Errc::NoSolution, "Haar invariance system has no solution");
  require(ker.basis.cols == 1, Errc::NonUnique, "Haar invariance system is not unique");
  Vec<S> h = ker.basis.column(0);
  S norm = ScalarTraits<S>::zero();
  for (std::size_t i = 0; i < n; ++i) norm += Q.unit[i] * h[i];
  {
    ResidualMax<S> z;
    z.add(norm);
    require(!z.within(tol), Errc::NoSolution, "invariant functional kills the unit");
  }
  S inv = ScalarTraits<S>::one() / norm;
  for (auto& v : h) v = inv * v;
  Functional<S> out{std::move(h)};
  PsdVerdict g = hermitian_psd(gram_matrix(Q, out), tol);
  require(g.psd, Errc::NotPositive, "computed Haar functional is not positive");
  return out;
}

/// Residual of the defining invariance of the Haar functional.
template <class S>
std::vector<Report> check_haar_invariance(const HopfData<S>& H, double tol,
                                          const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  const Functional<S>& h = H.haar_state();
  const std::size_t n = Q.dim;
  auto res = exec::max_norm2<S>(cx, n, [&](std::size_t k) {
    Vec<S> e = Q.basis(k);
    Vec<S> d = H.delta(e);
    Vec<S> target = scaled(Q.unit, h(e));
    auto r1 = norm2_max(sub(contract_leg1(h.coeffs, d, n, n), target));
    auto r2 = norm2_max(sub(contract_leg2(h.coeffs, d, n, n), target));
    return r1 < r2 ? r2 : r1;
  });
  return {residual_report("haar_invariance", res, tol)};
}

template <class S>
std::vector<Report> check_traciality(const HopfData<S>& H, double tol,
                                     const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  const Functional<S>& h = H.haar_state();
  const std::size_t n = Q.dim;
  auto res = exec::max_norm2<S>(cx, n * n, [&](std::size_t t) {
    std::size_t i = t / n, j = t % n;
    S d = h(Q.mul(Q.basis(i), Q.basis(j))) - h(Q.mul(Q.basis(j), Q.basis(i)));
    return ScalarTraits<S>::norm2(d);
  });
  return {residual_report("haar_tracial", res, tol)};
}

/// z_(2) kappa(z_(1)) = eps(z) 1 over the basis, i.e.
/// m (id (x) kappa) flip Delta(z) - eps(z) 1.
template <class S>
std::vector<Report> check_sweedler_inverse_identity(const HopfData<S>& H, double tol,
                                                    const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  const std::size_t n = Q.dim;
  auto res = exec::max_norm2<S>(cx, n, [&](std::size_t k) {
    Vec<S> e = Q.basis(k);
    Vec<S> flipped = flip_legs(H.delta(e), n, n);
    Vec<S> lhs = mul_contract(Q, map_leg2(H.antipode, flipped, n, n));
    return norm2_max(sub(lhs, scaled(Q.unit, H.counit(e))));
  });
  return {residual_report("sweedler_inverse", res, tol)};
}

/// The transformation T(a (x) b) = Delta(kappa(a)) (1 (x) b) and the two
/// identities it certifies:
///   (i)  T(b_(2) kappa(c) (x) b_(1)) = c_(1) kappa(b) (x) c_(2)
///   (ii) h(kappa(c) b_(2)) b_(1)     = h(kappa(b) c_(1)) c_(2)
template <class S>
std::vector<Report> check_T_transform_identity(const HopfData<S>& H, double tol,
                                               const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  const Functional<S>& h = H.haar_state();
  const std::size_t n = Q.dim;
  StarAlgebra<S> QQ = tensor_algebra(Q, Q);

  // T as a matrix on Q (x) Q.
  Mat<S> T(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    Vec<S> dk = H.delta(H.kappa(Q.basis(p)));
    for (std::size_t q = 0; q < n; ++q) {
      Vec<S> col = QQ.mul(dk, outer(Q.unit, Q.basis(q)));
      for (std::size_t r = 0; r < n * n; ++r) T.at(r, p * n + q) = col[r];
    }
  }

  std::vector<Report> reps;
  auto map_res = exec::max_norm2<S>(cx, n * n, [&](std::size_t t) {
    std::size_t b = t / n, c = t % n;
    Vec<S> db = H.delta(Q.basis(b)), dc = H.delta(Q.basis(c));
    Vec<S> kb = H.kappa(Q.basis(b)), kc = H.kappa(Q.basis(c));
    Vec<S> u = zeros<S>(n * n), rhs = zeros<S>(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const S& cb = db[i * n + j];
        if (!ScalarTraits<S>::is_zero(cb))
          axpy(u, cb, outer(Q.mul(Q.basis(j), kc), Q.basis(i)));
        const S& cc = dc[i * n + j];
        if (!ScalarTraits<S>::is_zero(cc))
          axpy(rhs, cc, outer(Q.mul(Q.basis(i), kb), Q.basis(j)));
      }
    return norm2_max(sub(T.apply(u), rhs));
  });
  reps.push_back(residual_report("t_transform_map", map_res, tol));

  auto contracted = exec::max_norm2<S>(cx, n * n, [&](std::size_t t) {
    std::size_t b = t / n, c = t % n;
    Vec<S> db = H.delta(Q.basis(b)), dc = H.delta(Q.basis(c));
    Vec<S> kb = H.kappa(Q.basis(b)), kc = H.kappa(Q.basis(c));
    Vec<S> lhs = zeros<S>(n), rhs = zeros<S>(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const S& cb = db[i * n + j];
        if (!ScalarTraits<S>::is_zero(cb)) lhs[i] += cb * h(Q.mul(kc, Q.basis(j)));
        const S& cc = dc[i * n + j];
        if (!ScalarTraits<S>::is_zero(cc)) rhs[j] += cc * h(Q.mul(kb, Q.basis(i)));
      }
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("t_transform_contracted", contracted, tol));
  return reps;
}

/// h(kappa(a)) = h(a) over the basis.
template <class S>
std::vector<Report> check_haar_antipode_invariance(const HopfData<S>& H, double tol,
                                                   const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  const Functional<S>& h = H.haar_state();
  auto res = exec::max_norm2<S>(cx, Q.dim, [&](std::size_t i) {
    return ScalarTraits<S>::norm2(h(H.kappa(Q.basis(i))) - h(Q.basis(i)));
  });
  return {residual_report("haar_antipode_invariance", res, tol)};
}

/// eps(kappa(a)) = eps(a) over the basis.
template <class S>
std::vector<Report> check_counit_antipode(const HopfData<S>& H, double tol,
                                          const exec::Context& cx = {}) {
  const StarAlgebra<S>& Q = *H.algebra;
  auto res = exec::max_norm2<S>(cx, Q.dim, [&](std::size_t i) {
    return ScalarTraits<S>::norm2(H.counit(H.kappa(Q.basis(i))) - H.counit(Q.basis(i)));
  });
  return {residual_report("counit_antipode", res, tol)};
}

}  // namespace qgavg
