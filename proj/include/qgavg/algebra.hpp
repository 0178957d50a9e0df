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

#include <memory>
#include <string>
#include <vector>

#include "qgavg/dense.hpp"
#include "qgavg/errors.hpp"
#include "qgavg/exec.hpp"
#include "qgavg/linalg.hpp"
#include "qgavg/report.hpp"

namespace qgavg {

template <class S>
using LinearMap = Mat<S>;

/// Finite-dimensional associative *-algebra given by structure tensors:
/// e_i e_j = sum_k mult(i,j,k) e_k, and e_i^* = sum_j star(i,j) e_j with
/// coefficient conjugation applied to inputs.
template <class S>
struct StarAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  Tensor3<S> mult;
  Vec<S> unit;
  Mat<S> star;

  Vec<S> basis(std::size_t i) const { return unit_vec<S>(dim, i); }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const {
    require(x.size() == dim && y.size() == dim, Errc::Inconsistent, "algebra mul size");
    Vec<S> out = zeros<S>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (ScalarTraits<S>::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (ScalarTraits<S>::is_zero(y[j])) continue;
        S c = x[i] * y[j];
        for (std::size_t k = 0; k < dim; ++k) out[k] += c * mult.at(i, j, k);
      }
    }
    return out;
  }

  Vec<S> star_of(const Vec<S>& x) const {
    require(x.size() == dim, Errc::Inconsistent, "algebra star size");
    Vec<S> out = zeros<S>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      S c = ScalarTraits<S>::conj(x[i]);
      if (ScalarTraits<S>::is_zero(c)) continue;
      for (std::size_t j = 0; j < dim; ++j) out[j] += c * star.at(i, j);
    }
    return out;
  }

  /// Structural commutativity test (exact on the structure tensor).
  bool is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < i; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (!ScalarTraits<S>::is_zero(mult.at(i, j, k) - mult.at(j, i, k))) return false;
    return true;
  }
};

template <class S>
using AlgebraPtr = std::shared_ptr<const StarAlgebra<S>>;

template <class S>
AlgebraPtr<S> make_algebra(StarAlgebra<S> a) {
  return std::make_shared<const StarAlgebra<S>>(std::move(a));
}

/// Linear functional in coordinates: phi(e_i) = coeffs[i].
template <class S>
struct Functional {
  Vec<S> coeffs;

  S operator()(const Vec<S>& x) const {
    require(x.size() == coeffs.size(), Errc::Inconsistent, "functional size");
    S acc = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc += coeffs[i] * x[i];
    return acc;
  }
};

/// A (x) B with componentwise product, unit u_A (x) u_B and
/// (a (x) b)^* = a^* (x) b^*; composite index (i,a) -> i*dim(B) + a.
template <class S>
StarAlgebra<S> tensor_algebra(const StarAlgebra<S>& A, const StarAlgebra<S>& B) {
  StarAlgebra<S> out;
  out.dim = A.dim * B.dim;
  out.basis_labels.reserve(out.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t a = 0; a < B.dim; ++a)
      out.basis_labels.push_back(A.basis_labels[i] + "(x)" + B.basis_labels[a]);
  out.mult = Tensor3<S>(out.dim, out.dim, out.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j)
      for (std::size_t k = 0; k < A.dim; ++k) {
        const S& ma = A.mult.at(i, j, k);
        if (ScalarTraits<S>::is_zero(ma)) continue;
        for (std::size_t a = 0; a < B.dim; ++a)
          for (std::size_t b = 0; b < B.dim; ++b)
            for (std::size_t c = 0; c < B.dim; ++c) {
              const S& mb = B.mult.at(a, b, c);
              if (ScalarTraits<S>::is_zero(mb)) continue;
              out.mult.at(i * B.dim + a, j * B.dim + b, k * B.dim + c) = ma * mb;
            }
      }
  out.unit = outer(A.unit, B.unit);
  out.star = kron(A.star, B.star);
  return out;
}

/// Max residuals for associativity, unit law and the involution laws.
template <class S>
std::vector<Report> check_algebra_axioms(const StarAlgebra<S>& A, double tol,
                                         const exec::Context& cx = {}) {
  const std::size_t n = A.dim;
  std::vector<Report> reps;

  auto assoc = exec::max_norm2<S>(cx, n * n * n, [&](std::size_t t) {
    std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
    Vec<S> lhs = zeros<S>(n), rhs = zeros<S>(n);
    for (std::size_t u = 0; u < n; ++u) {
      const S& cu = A.mult.at(i, j, u);
      if (!ScalarTraits<S>::is_zero(cu))
        for (std::size_t v = 0; v < n; ++v) lhs[v] += cu * A.mult.at(u, k, v);
      const S& cv = A.mult.at(j, k, u);
      if (!ScalarTraits<S>::is_zero(cv))
        for (std::size_t v = 0; v < n; ++v) rhs[v] += cv * A.mult.at(i, u, v);
    }
    return norm2_max(sub(lhs, rhs));
  });
  reps.push_back(residual_report("assoc", assoc, tol));

  auto unit = exec::max_norm2<S>(cx, n, [&](std::size_t i) {
    auto e = A.basis(i);
    auto r1 = norm2_max(sub(A.mul(A.unit, e), e));
    auto r2 = norm2_max(sub(A.mul(e, A.unit), e));
    return r1 < r2 ? r2 : r1;
  });
  reps.push_back(residual_report("unit_law", unit, tol));

  auto invol = exec::max_norm2<S>(cx, n, [&](std::size_t i) {
    auto e = A.basis(i);
    return norm2_max(sub(A.star_of(A.star_of(e)), e));
  });
  reps.push_back(residual_report("star_involution", invol, tol));

  auto antihom = exec::max_norm2<S>(cx, n * n, [&](std::size_t t) {
    std::size_t i = t / n, j = t % n;
    auto ei = A.basis(i), ej = A.basis(j);
    return norm2_max(
        sub(A.star_of(A.mul(ei, ej)), A.mul(A.star_of(ej), A.star_of(ei))));
  });
  reps.push_back(residual_report("star_antihom", antihom, tol));

  return reps;
}

/// Multiplication map A (x) A -> A applied to tensor coordinates.
template <class S>
Vec<S> mul_contract(const StarAlgebra<S>& A, const Vec<S>& v) {
  require(v.size() == A.dim * A.dim, Errc::Inconsistent, "mul_contract size");
  Vec<S> out = zeros<S>(A.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      const S& c = v[i * A.dim + j];
      if (ScalarTraits<S>::is_zero(c)) continue;
      for (std::size_t k = 0; k < A.dim; ++k) out[k] += c * A.mult.at(i, j, k);
    }
  return out;
}

template <class S>
Mat<S> left_mult_matrix(const StarAlgebra<S>& A, const Vec<S>& x) {
  Mat<S> L(A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (ScalarTraits<S>::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < A.dim; ++j)
      for (std::size_t k = 0; k < A.dim; ++k) L.at(k, j) += x[i] * A.mult.at(i, j, k);
  }
  return L;
}

template <class S>
Mat<S> gram_matrix(const StarAlgebra<S>& A, const Functional<S>& phi) {
  Mat<S> H(A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    Vec<S> si = A.star_of(A.basis(i));
    for (std::size_t j = 0; j < A.dim; ++j) H.at(i, j) = phi(A.mul(si, A.basis(j)));
  }
  return H;
}

/// Normalized left-regular trace a -> tr(L_a)/dim: a positive faithful
/// functional on every algebra in scope, with phi(1) = 1.
template <class S>
Functional<S> canonical_trace(const StarAlgebra<S>& A) {
  Functional<S> phi;
  phi.coeffs = zeros<S>(A.dim);
  S inv_dim = ScalarTraits<S>::one() / ScalarTraits<S>::from_int((long)A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    S tr = ScalarTraits<S>::zero();
    for (std::size_t j = 0; j < A.dim; ++j) tr += A.mult.at(i, j, j);
    phi.coeffs[i] = tr * inv_dim;
  }
  return phi;
}

/// Positivity of phi (Gram PSD) and faithfulness (Gram nonsingular), with a
/// min-eigenvalue witness and the hermiticity defect of the Gram matrix.
template <class S>
std::vector<Report> gram_check(const Functional<S>& phi, const StarAlgebra<S>& A, double tol) {
  Mat<S> H = gram_matrix(A, phi);
  PsdVerdict v = hermitian_psd(H, tol);
  std::vector<Report> reps;
  {
    ResidualMax<S> r;
    r.add_norm2(hermiticity_defect2(H));
    reps.push_back(residual_report("gram_hermitian", r, tol));
  }
  {
    Report rep = flag_report("gram_positive", v.psd);
    rep.witness = Complex(v.min_eig, 0.0);
    reps.push_back(rep);
  }
  {
    Report rep = flag_report("gram_faithful", v.definite, v.definite ? "" : "Gram singular");
    rep.witness = Complex(v.min_eig, 0.0);
    reps.push_back(rep);
  }
  return reps;
}

struct PositivityResult {
  bool positive = false;
  double min_eig = 0.0;
};

/// Decides whether left multiplication by `a` is PSD on the GNS space of
/// phi (inner product <x,y> = phi(x^* y)). Throws SingularGram when phi
/// fails to be faithful, since the representation then misses part of A.
template <class S>
PositivityResult positivity_check(const Vec<S>& a, const StarAlgebra<S>& A,
                                  const Functional<S>& phi, double tol) {
  Mat<S> H = gram_matrix(A, phi);
  PsdVerdict g = hermitian_psd(H, tol);
  require(g.definite, Errc::SingularGram, "functional is not faithful/positive on this algebra");
  PsdVerdict v = weighted_psd(left_mult_matrix(A, a), H, tol);
  return {v.psd, v.min_eig};
}

/// Positivity of a k x k matrix [blocks(i,j)] over A in M_k(A), decided
/// through the GNS representation of phi. blocks is row-major k*k with
/// A-coordinate entries.
template <class S>
PsdVerdict module_psd(const StarAlgebra<S>& A, const std::vector<Vec<S>>& blocks,
                      std::size_t k, const Functional<S>& phi, double tol) {
  require(blocks.size() == k * k, Errc::Inconsistent, "module_psd block count");
  Mat<S> H = gram_matrix(A, phi);
  PsdVerdict g = hermitian_psd(H, tol);
  require(g.definite, Errc::SingularGram, "functional is not faithful/positive on this algebra");
  const std::size_t n = A.dim;
  Mat<S> T(k * n, k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Mat<S> L = left_mult_matrix(A, blocks[i * k + j]);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) T.at(i * n + s, j * n + t) = L.at(s, t);
    }
  Mat<S> W = kron(Mat<S>::identity(k), H);
  return weighted_psd(T, W, tol);
}

}  // namespace qgavg
