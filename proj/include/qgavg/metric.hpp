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

#include "qgavg/calculus.hpp"
#include "qgavg/rng.hpp"

namespace qgavg {

/// A-valued inner product on Omega in coordinates:
/// << omega_i, omega_j >> = gram(i,j), an element of A; conjugate-linear in
/// the first slot, linear in the second.
template <class S>
struct InnerProduct {
  Calculus<S> calculus;
  std::vector<Vec<S>> gram;  // module_dim^2 entries, row-major (i,j)

  const Vec<S>& at(std::size_t i, std::size_t j) const {
    return gram[i * calculus.module_dim + j];
  }
  Vec<S>& at(std::size_t i, std::size_t j) { return gram[i * calculus.module_dim + j]; }
};

template <class S>
InnerProduct<S> zero_inner_product(Calculus<S> calc) {
  InnerProduct<S> g;
  std::size_t m = calc.module_dim, n = calc.base->dim;
  g.calculus = std::move(calc);
  g.gram.assign(m * m, zeros<S>(n));
  return g;
}

/// Precomputed averaging data: the matrix of
/// Psi = (id (x) h)(id (x) m)(id (x) kappa (x) id)(alpha (x) id)
/// as a map A (x) Q -> A, plus the tensor-product algebra for products.
template <class S>
struct Averager {
  Coaction<S> coaction;     // with Haar present
  StarAlgebra<S> aq;        // A (x) Q
  Mat<S> psi_map;           // dim A x (dim A * dim Q)
};

/// Builds the averaging data. Refuses non-Kac input: kappa must be a
/// *-preserving involution and the Haar state tracial and faithful.
template <class S>
Averager<S> make_averager(Coaction<S> co, double tol = 1e-9) {
  if (!co.cqg.haar) co.cqg.haar = compute_haar(co.cqg, tol);
  require(is_kac(co.cqg, tol), Errc::NotKac,
          "averaging requires kappa^2 = id, kappa * -preserving and tracial Haar");
  const StarAlgebra<S>& Q = *co.cqg.algebra;
  PsdVerdict g = hermitian_psd(gram_matrix(Q, *co.cqg.haar), tol);
  require(g.definite, Errc::NotKac, "averaging requires a faithful Haar state");

  const StarAlgebra<S>& A = *co.base;
  const std::size_t nA = A.dim, nQ = Q.dim;
  const Functional<S>& h = *co.cqg.haar;

  // hk(p,q) = h(kappa(e_p) e_q)
  Mat<S> hk(nQ, nQ);
  for (std::size_t p = 0; p < nQ; ++p) {
    Vec<S> kp = co.cqg.kappa(Q.basis(p));
    for (std::size_t q = 0; q < nQ; ++q) hk.at(p, q) = h(Q.mul(kp, Q.basis(q)));
  }

  Averager<S> av;
  av.psi_map = Mat<S>(nA, nA * nQ);
  for (std::size_t i = 0; i < nA; ++i)
    for (std::size_t q = 0; q < nQ; ++q)
      for (std::size_t j = 0; j < nA; ++j) {
        S acc = ScalarTraits<S>::zero();
        for (std::size_t p = 0; p < nQ; ++p) acc += co.alpha.at(j * nQ + p, i) * hk.at(p, q);
        av.psi_map.at(j, i * nQ + q) = acc;
      }
  av.aq = tensor_algebra(A, Q);
  av.coaction = std::move(co);
  return av;
}

/// Psi applied to an element of A (x) Q in coordinates.
template <class S>
Vec<S> psi(const Averager<S>& av, const Vec<S>& F) {
  return av.psi_map.apply(F);
}

/// One-shot form of the averaging map.
template <class S>
Vec<S> psi(const Coaction<S>& co, const Vec<S>& F, double tol = 1e-9) {
  return psi(make_averager<S>(co, tol), F);
}

/// Seeded complete-positivity check: positivity of Psi(G^* G) for `trials`
/// random G in A (x) Q, and k-positivity via entrywise application to
/// X^* X over M_k(A (x) Q) for k up to dim A.
template <class S>
std::vector<Report> psi_cp_check(const Coaction<S>& co, long trials, double tol,
                                 std::uint64_t seed, const exec::Context& cx = {}) {
  Averager<S> av = make_averager<S>(co, tol);
  const StarAlgebra<S>& A = *av.coaction.base;
  const std::size_t nA = A.dim, nAQ = av.aq.dim;
  Functional<S> phi = canonical_trace(A);
  Mat<S> H = gram_matrix(A, phi);
  {
    PsdVerdict g = hermitian_psd(H, tol);
    require(g.definite, Errc::SingularGram, "canonical trace not faithful");
  }

  std::vector<Report> reps;
  {
    std::vector<double> eig(trials);
    std::vector<char> ok(trials);
    exec::parallel_for(cx, (std::size_t)trials, [&](std::size_t t) {
      Rng rng = Rng::for_subtask(seed, t);
      Vec<S> G = random_vec<S>(rng, nAQ);
      Vec<S> F = av.aq.mul(av.aq.star_of(G), G);
      PsdVerdict v = weighted_psd(left_mult_matrix(A, psi(av, F)), H, tol);
      eig[t] = v.min_eig;
      ok[t] = v.psd ? 1 : 0;
    });
    double min_eig = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (long t = 0; t < trials; ++t) {
      min_eig = std::min(min_eig, eig[t]);
      pass = pass && ok[t];
    }
    Report rep = flag_report("psi_cp_rank1", pass,
                             std::to_string(trials) + " trials");
    rep.residual = std::max(0.0, -min_eig);
    rep.witness = Complex(min_eig, 0.0);
    reps.push_back(rep);
  }

  {
    const long per_k = std::max(1L, trials / 10);
    std::vector<double> eig;
    std::vector<char> ok;
    struct Job {
      std::size_t k;
      long t;
    };
    std::vector<Job> jobs;
    for (std::size_t k = 2; k <= nA; ++k)
      for (long t = 0; t < per_k; ++t) jobs.push_back({k, t});
    eig.assign(jobs.size(), 0.0);
    ok.assign(jobs.size(), 1);
    exec::parallel_for(cx, jobs.size(), [&](std::size_t idx) {
      const auto [k, t] = jobs[idx];
      Rng rng = Rng::for_subtask(seed ^ (0xABCDull + k), (std::uint64_t)t);
      std::vector<Vec<S>> X(k * k);
      for (auto& x : X) x = random_vec<S>(rng, nAQ);
      std::vector<Vec<S>> blocks(k * k);
      for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) {
          Vec<S> acc = zeros<S>(nAQ);
          for (std::size_t w = 0; w < k; ++w) {
            Vec<S> term = av.aq.mul(av.aq.star_of(X[w * k + u]), X[w * k + v]);
            for (std::size_t z = 0; z < nAQ; ++z) acc[z] += term[z];
          }
          blocks[u * k + v] = psi(av, acc);
        }
      PsdVerdict v = module_psd(A, blocks, k, phi, tol);
      eig[idx] = v.min_eig;
      ok[idx] = v.psd ? 1 : 0;
    });
    double min_eig = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      min_eig = std::min(min_eig, eig[i]);
      pass = pass && ok[i];
    }
    Report rep = flag_report("psi_cp_kpos", pass,
                             "k up to " + std::to_string(nA) + ", " +
                                 std::to_string(per_k) + " matrices per k");
    rep.residual = std::max(0.0, -min_eig);
    rep.witness = Complex(min_eig, 0.0);
    reps.push_back(rep);
  }

  return reps;
}

/// The Gamma-twisted Gram: X(i,j) = sum_{k,l} << omega_k, omega_l >> (x)
/// q_k^* r_l in A (x) Q, where Gamma omega_i = sum omega_k (x) q_k and
/// Gamma omega_j = sum omega_l (x) r_l. This is the Q-extension
/// << w (x) q, e (x) r >> = << w, e >> (x) q^* r evaluated on Gamma images.
template <class S>
std::vector<Vec<S>> gamma_twisted_gram(const LiftedCoaction<S>& L,
                                       const std::vector<Vec<S>>& gram,
                                       const exec::Context& cx = {}) {
  const StarAlgebra<S>& A = *L.calculus.base;
  const StarAlgebra<S>& Q = *L.coaction.cqg.algebra;
  const std::size_t m = L.calculus.module_dim, nA = A.dim, nQ = Q.dim;

  // star_products(a,b) = e_a^* e_b
  Tensor3<S> sp(nQ, nQ, nQ);
  for (std::size_t a = 0; a < nQ; ++a) {
    Vec<S> sa = Q.star_of(Q.basis(a));
    for (std::size_t b = 0; b < nQ; ++b) {
      Vec<S> v = Q.mul(sa, Q.basis(b));
      for (std::size_t cidx = 0; cidx < nQ; ++cidx) sp.at(a, b, cidx) = v[cidx];
    }
  }

  auto gcoef = [&](std::size_t col, std::size_t k, std::size_t a) -> const S& {
    return L.gamma.at(k * nQ + a, col);
  };

  std::vector<Vec<S>> X(m * m);
  exec::parallel_for(cx, m, [&](std::size_t i) {
    // Y(l, a, t) = sum_k conj(gamma[i](k,a)) gram(k,l)[t]
    std::vector<S> Y(m * nQ * nA, ScalarTraits<S>::zero());
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t a = 0; a < nQ; ++a) {
        S cg = ScalarTraits<S>::conj(gcoef(i, k, a));
        if (ScalarTraits<S>::is_zero(cg)) continue;
        for (std::size_t l = 0; l < m; ++l) {
          const Vec<S>& gkl = gram[k * m + l];
          for (std::size_t t = 0; t < nA; ++t) Y[(l * nQ + a) * nA + t] += cg * gkl[t];
        }
      }
    for (std::size_t j = 0; j < m; ++j) {
      // Z(a, b, t) = sum_l gamma[j](l,b) Y(l, a, t)
      std::vector<S> Z(nQ * nQ * nA, ScalarTraits<S>::zero());
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t b = 0; b < nQ; ++b) {
          const S& gj = gcoef(j, l, b);
          if (ScalarTraits<S>::is_zero(gj)) continue;
          for (std::size_t a = 0; a < nQ; ++a)
            for (std::size_t t = 0; t < nA; ++t)
              Z[(a * nQ + b) * nA + t] += gj * Y[(l * nQ + a) * nA + t];
        }
      Vec<S> out = zeros<S>(nA * nQ);
      for (std::size_t a = 0; a < nQ; ++a)
        for (std::size_t b = 0; b < nQ; ++b)
          for (std::size_t t = 0; t < nA; ++t) {
            const S& z = Z[(a * nQ + b) * nA + t];
            if (ScalarTraits<S>::is_zero(z)) continue;
            for (std::size_t cidx = 0; cidx < nQ; ++cidx)
              out[t * nQ + cidx] += z * sp.at(a, b, cidx);
          }
      X[i * m + j] = std::move(out);
    }
  });
  return X;
}

/// Hermitian symmetry and right-A-linearity of the Gram, plus the derived
/// first-slot rule << w.f, e >> = f^* << w, e >>. The left-action variant is
/// verified on commutative bases, where it is equivalent.
template <class S>
std::vector<Report> check_hermitian_module(const InnerProduct<S>& g, double tol,
                                           const exec::Context& cx = {}) {
  const Calculus<S>& c = g.calculus;
  const StarAlgebra<S>& A = *c.base;
  const std::size_t m = c.module_dim, n = A.dim;
  std::vector<Report> reps;

  auto herm = exec::max_norm2<S>(cx, m * m, [&](std::size_t t) {
    std::size_t i = t / m, j = t % m;
    return norm2_max(sub(A.star_of(g.at(i, j)), g.at(j, i)));
  });
  reps.push_back(residual_report("metric_hermitian", herm, tol));

  auto rlin = exec::max_norm2<S>(cx, m * m * n, [&](std::size_t t) {
    std::size_t i = t / (m * n), j = (t / n) % m, f = t % n;
    Vec<S> lhs = zeros<S>(n);
    for (std::size_t k = 0; k < m; ++k) {
      const S& r = c.right.at(j, f, k);
      if (!ScalarTraits<S>::is_zero(r)) axpy(lhs, r, g.at(i, k));
    }
    Vec<S> rhs = A.mul(g.at(i, j), A.basis(f));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("metric_right_linear", rlin, tol));

  auto fslot = exec::max_norm2<S>(cx, m * m * n, [&](std::size_t t) {
    std::size_t i = t / (m * n), j = (t / n) % m, f = t % n;
    Vec<S> lhs = zeros<S>(n);
    for (std::size_t k = 0; k < m; ++k) {
      S r = ScalarTraits<S>::conj(c.right.at(i, f, k));
      if (!ScalarTraits<S>::is_zero(r)) axpy(lhs, r, g.at(k, j));
    }
    Vec<S> rhs = A.mul(A.star_of(A.basis(f)), g.at(i, j));
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("metric_first_slot", fslot, tol));

  return reps;
}

/// << w, e >>' = Psi( Gamma-twisted Gram of << , >> ). The output is
/// re-verified against the hermitian/right-linearity invariants.
template <class S>
InnerProduct<S> average_inner_product(const LiftedCoaction<S>& L, const InnerProduct<S>& g,
                                      double tol = 1e-9, const exec::Context& cx = {}) {
  Averager<S> av = make_averager<S>(L.coaction, tol);
  const std::size_t m = L.calculus.module_dim;
  std::vector<Vec<S>> X = gamma_twisted_gram(L, g.gram, cx);
  InnerProduct<S> out;
  out.calculus = L.calculus;
  out.gram.resize(m * m);
  exec::parallel_for(cx, m * m, [&](std::size_t t) { out.gram[t] = psi(av, X[t]); });
  std::vector<Report> verify = check_hermitian_module(out, tol, cx);
  verify.resize(2);  // hermitian + right-linearity are the contract
  for (const Report& r : verify)
    require(r.pass, Errc::InvariantViolation,
            "averaged metric violates " + r.name + " (residual " +
                std::to_string(r.residual) + ")");
  return out;
}

/// alpha(<< w_i, w_j >>') vs the Gamma-twisted primed Gram: the statement
/// that the coaction preserves the averaged inner product.
template <class S>
std::vector<Report> check_equivariance(const LiftedCoaction<S>& L,
                                       const InnerProduct<S>& g_avg, double tol,
                                       const exec::Context& cx = {}) {
  const std::size_t m = L.calculus.module_dim;
  std::vector<Vec<S>> X = gamma_twisted_gram(L, g_avg.gram, cx);
  auto res = exec::max_norm2<S>(cx, m * m, [&](std::size_t t) {
    Vec<S> lhs = L.coaction.apply(g_avg.gram[t]);
    return norm2_max(sub(lhs, X[t]));
  });
  return {residual_report("equivariance", res, tol)};
}

/// Positivity is judged blockwise in M_m(A) through the GNS representation
/// of the canonical trace; definiteness is the trivial-kernel condition on
/// Omega, equivalently positive definiteness of the scalar Gram
/// K(i,j) = phi(<< omega_i, omega_j >>) (phi faithful). The reported
/// min eigenvalue is that of K.
template <class S>
std::vector<Report> check_definiteness(const InnerProduct<S>& g, double tol) {
  const StarAlgebra<S>& A = *g.calculus.base;
  const std::size_t m = g.calculus.module_dim;
  Functional<S> phi = canonical_trace(A);
  PsdVerdict block = module_psd(A, g.gram, m, phi, tol);
  Mat<S> K(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) K.at(i, j) = phi(g.at(i, j));
  PsdVerdict scalar = hermitian_psd(K, tol);
  bool definite = block.psd && scalar.definite;
  const char* verdict = definite ? "definite" : (block.psd ? "semidefinite" : "indefinite");
  Report rep = flag_report("metric_definite", definite, verdict);
  rep.witness = Complex(scalar.min_eig, 0.0);
  rep.residual = std::max(0.0, -std::min(block.min_eig, scalar.min_eig));
  return {rep};
}

/// Classical orbit average of a metric, computable only from the group
/// action tables and the calculus embedding: the independent oracle the
/// quantum averaging must reproduce on commutative, group-derived cases.
template <class S>
InnerProduct<S> classical_average_oracle(const InnerProduct<S>& g,
                                         const GroupProvenance& prov) {
  const Calculus<S>& c = g.calculus;
  const StarAlgebra<S>& A = *c.base;
  const std::size_t n = A.dim, m = c.module_dim;
  require(c.embedding.has_value(), Errc::NotClassical,
          "classical oracle needs the universal-calculus embedding");
  require(A.is_commutative(), Errc::NotClassical, "classical oracle needs a function algebra");
  const std::size_t gsz = prov.group.size();
  require(!prov.action.empty() && prov.action.size() == gsz && prov.action[0].size() == n,
          Errc::NotClassical, "action table does not match the base algebra");

  // inverses from the group table
  std::size_t e = gsz;
  for (std::size_t i = 0; i < gsz; ++i) {
    bool ident = true;
    for (std::size_t j = 0; j < gsz; ++j)
      ident = ident && prov.group[i][j] == (int)j && prov.group[j][i] == (int)j;
    if (ident) {
      e = i;
      break;
    }
  }
  require(e < gsz, Errc::NotClassical, "group table has no identity");
  std::vector<std::size_t> inv(gsz);
  for (std::size_t i = 0; i < gsz; ++i)
    for (std::size_t j = 0; j < gsz; ++j)
      if (prov.group[i][j] == (int)e) inv[i] = j;

  InnerProduct<S> out = zero_inner_product(c);
  S weight = ScalarTraits<S>::one() / ScalarTraits<S>::from_int((long)gsz);
  for (std::size_t gidx = 0; gidx < gsz; ++gidx) {
    // theta_g on A: delta_x -> delta_{g^{-1}.x}; Theta_g = theta_g (x) theta_g on Omega.
    Mat<S> theta_inv(n, n);  // theta_{g^{-1}}
    std::vector<std::size_t> to(n);
    for (std::size_t x = 0; x < n; ++x) {
      to[x] = (std::size_t)prov.action[inv[gidx]][x];  // g^{-1}.x
      theta_inv.at((std::size_t)prov.action[gidx][x], x) = ScalarTraits<S>::one();
    }
    Mat<S> T(m, m);
    for (std::size_t w = 0; w < m; ++w) {
      Vec<S> big = c.embedding->column(w);
      Vec<S> moved = zeros<S>(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) moved[to[x] * n + to[y]] = big[x * n + y];
      Vec<S> cc = c.coords(moved);
      require(ScalarTraits<S>::real_to_double(norm2_max(sub(c.embed(cc), moved))) < 1e-12,
              Errc::NotClassical, "pullback does not preserve the calculus");
      for (std::size_t w2 = 0; w2 < m; ++w2) T.at(w2, w) = cc[w2];
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec<S> acc = zeros<S>(n);
        for (std::size_t k = 0; k < m; ++k) {
          S ck = ScalarTraits<S>::conj(T.at(k, i));
          if (ScalarTraits<S>::is_zero(ck)) continue;
          for (std::size_t l = 0; l < m; ++l) {
            S coef = ck * T.at(l, j);
            if (!ScalarTraits<S>::is_zero(coef)) axpy(acc, coef, g.at(k, l));
          }
        }
        axpy(out.at(i, j), weight, theta_inv.apply(acc));
      }
  }
  return out;
}

template <class S>
InnerProduct<S> classical_average_oracle(const InnerProduct<S>& g, const Coaction<S>& co) {
  require(co.provenance.has_value(), Errc::NotClassical, "coaction lacks group provenance");
  return classical_average_oracle(g, *co.provenance);
}

}  // namespace qgavg
