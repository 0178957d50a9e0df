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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <limits>
#include <optional>
#include <vector>

#include "qgavg/dense.hpp"
#include "qgavg/errors.hpp"
#include "qgavg/scalar.hpp"

namespace qgavg {

// Pivot policy: first entry in column order whose magnitude clears
// tol * (max input magnitude). The rational backend tests exact nonzero-ness,
// so both backends pick the same pivots on exactly-representable input.
template <class S>
struct RrefResult {
  Mat<S> r;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
  std::size_t rank = 0;
};

namespace detail {

template <class S>
typename ScalarTraits<S>::Real max_norm2_entry(const Mat<S>& m) {
  typename ScalarTraits<S>::Real s{};
  for (const S& v : m.a) {
    auto n = ScalarTraits<S>::norm2(v);
    if (s < n) s = n;
  }
  return s;
}

template <class S>
bool negligible(const S& v, double thresh2) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)thresh2;
    return ScalarTraits<S>::is_zero(v);
  } else {
    return ScalarTraits<S>::norm2(v) <= thresh2;
  }
}

}  // namespace detail

template <class S>
RrefResult<S> rref(Mat<S> m, double tol) {
  RrefResult<S> out;
  double scale2 = 1.0;
  if constexpr (!ScalarTraits<S>::exact) {
    double s = ScalarTraits<S>::real_to_double(detail::max_norm2_entry(m));
    if (s > 0) scale2 = s;
  }
  const double thresh2 = tol * tol * scale2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && detail::negligible(m.at(p, c), thresh2)) ++p;
    if (p == m.rows) {
      out.free_cols.push_back(c);
      continue;
    }
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    S inv = ScalarTraits<S>::one() / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = inv * m.at(r, j);
    m.at(r, c) = ScalarTraits<S>::one();
    for (std::size_t q = 0; q < m.rows; ++q) {
      if (q == r || ScalarTraits<S>::is_zero(m.at(q, c))) continue;
      S f = m.at(q, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(q, j) -= f * m.at(r, j);
      m.at(q, c) = ScalarTraits<S>::zero();
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t c = (out.pivot_cols.empty() ? 0 : out.pivot_cols.back() + 1); c < m.cols; ++c)
    if (r >= m.rows) out.free_cols.push_back(c);
  out.rank = r;
  out.r = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Mat<S>& m, double tol) {
  return rref(m, tol).rank;
}

/// Kernel basis as matrix columns. Each basis vector carries a 1 at "its"
/// free column and 0 at every other free column, so coordinates w.r.t. this
/// basis of any kernel vector are just its entries at the free columns.
template <class S>
struct KernelBasis {
  Mat<S> basis;                         // (cols x nullity), columns span ker
  std::vector<std::size_t> free_cols;   // coordinate rows, one per basis vector
};

template <class S>
KernelBasis<S> kernel_basis(const Mat<S>& m, double tol) {
  RrefResult<S> rr = rref(m, tol);
  KernelBasis<S> out;
  out.free_cols = rr.free_cols;
  out.basis = Mat<S>(m.cols, rr.free_cols.size());
  for (std::size_t t = 0; t < rr.free_cols.size(); ++t) {
    std::size_t f = rr.free_cols[t];
    out.basis.at(f, t) = ScalarTraits<S>::one();
    for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
      out.basis.at(rr.pivot_cols[p], t) = -rr.r.at(p, f);
  }
  return out;
}

template <class S>
std::optional<Mat<S>> try_invert(const Mat<S>& m, double tol) {
  require(m.rows == m.cols, Errc::Inconsistent, "inverse of non-square matrix");
  std::size_t n = m.rows;
  Mat<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = ScalarTraits<S>::one();
  }
  RrefResult<S> rr = rref(std::move(aug), tol);
  if (rr.rank < n) return std::nullopt;
  for (std::size_t p = 0; p < n; ++p)
    if (rr.pivot_cols[p] != p) return std::nullopt;
  Mat<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

/// Solves X * V = W for X given V (d x k) of full row rank d.
/// Returns nullopt when the columns of V do not span S^d; the caller is
/// expected to measure ||X*V - W|| itself to judge well-definedness.
template <class S>
std::optional<Mat<S>> solve_through_spanning(const Mat<S>& V, const Mat<S>& W, double tol) {
  require(V.cols == W.cols, Errc::Inconsistent, "solve_through_spanning shape");
  RrefResult<S> rr = rref(V, tol);
  if (rr.rank < V.rows) return std::nullopt;
  // Independent column subset of V; X is determined on it.
  Mat<S> vb(V.rows, V.rows), wb(W.rows, V.rows);
  for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) {
    std::size_t c = rr.pivot_cols[t];
    for (std::size_t i = 0; i < V.rows; ++i) vb.at(i, t) = V.at(i, c);
    for (std::size_t i = 0; i < W.rows; ++i) wb.at(i, t) = W.at(i, c);
  }
  auto inv = try_invert(vb, tol);
  if (!inv) return std::nullopt;
  return wb * *inv;
}

// ---- hermitian positivity ------------------------------------------------

template <class S>
Mat<S> conj_transpose(const Mat<S>& m) {
  Mat<S> out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out.at(j, i) = ScalarTraits<S>::conj(m.at(i, j));
  return out;
}

template <class S>
typename ScalarTraits<S>::Real hermiticity_defect2(const Mat<S>& m) {
  typename ScalarTraits<S>::Real d{};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      auto n = ScalarTraits<S>::norm2(m.at(i, j) - ScalarTraits<S>::conj(m.at(j, i)));
      if (d < n) d = n;
    }
  return d;
}

/// Exact PSD decision for an exactly hermitian matrix: repeatedly pivot on a
/// positive diagonal entry and pass to the Schur complement. A negative
/// diagonal entry, or a zero diagonal with a nonzero residual row, refutes
/// positivity. Intended for the exact backend.
template <class S>
bool psd_pivot(Mat<S> h) {
  using T = ScalarTraits<S>;
  const std::size_t n = h.rows;
  std::vector<char> active(n, 1);
  for (;;) {
    std::ptrdiff_t piv = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      int s = T::sign_real(h.at(i, i));
      if (s < 0) return false;
      if (s > 0 && piv < 0) piv = (std::ptrdiff_t)i;
    }
    if (piv < 0) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (active[j] && !T::is_zero(h.at(i, j))) return false;
      }
      return true;
    }
    std::size_t p = (std::size_t)piv;
    S d = h.at(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || i == p || T::is_zero(h.at(i, p))) continue;
      S f = h.at(i, p) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || j == p) continue;
        h.at(i, j) -= f * h.at(p, j);
      }
    }
    active[p] = 0;
  }
}

inline Eigen::MatrixXcd to_eigen(const Mat<Complex>& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m.at(i, j);
  return out;
}

template <class S>
Eigen::MatrixXcd to_eigen_complex(const Mat<S>& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out(i, j) = ScalarTraits<S>::to_complex(m.at(i, j));
  return out;
}

struct PsdVerdict {
  bool psd = false;
  bool definite = false;
  double min_eig = std::numeric_limits<double>::infinity();
  double herm_residual = 0.0;
};

namespace detail {

inline double min_eig_of(const Eigen::MatrixXcd& h) {
  if (h.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline double min_gen_eig_of(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& w) {
  if (a.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd asym = 0.5 * (a + a.adjoint());
  Eigen::MatrixXcd wsym = 0.5 * (w + w.adjoint());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(asym, wsym,
                                                                Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  return es.eigenvalues().minCoeff();
}

}  // namespace detail

/// PSD/definiteness verdict for a hermitian matrix. Exact backend: exact
/// decision, double witness; float backend: eigenvalue thresholding at tol.
template <class S>
PsdVerdict hermitian_psd(const Mat<S>& h, double tol) {
  PsdVerdict v;
  v.herm_residual =
      std::sqrt(ScalarTraits<S>::real_to_double(hermiticity_defect2(h)));
  if (h.rows == 0) {
    v.psd = v.definite = true;
    return v;
  }
  v.min_eig = detail::min_eig_of(to_eigen_complex(h));
  if constexpr (ScalarTraits<S>::exact) {
    if (hermiticity_defect2(h) != typename ScalarTraits<S>::Real{}) {
      v.psd = v.definite = false;
      return v;
    }
    v.psd = psd_pivot(h);
    v.definite = v.psd && rank(h, tol) == h.rows;
  } else {
    double scale = std::max(
        1.0, std::sqrt(ScalarTraits<S>::real_to_double(detail::max_norm2_entry(h))));
    v.psd = v.min_eig >= -tol && v.herm_residual <= tol * scale;
    v.definite = v.psd && v.min_eig > tol;
  }
  return v;
}

/// Verdict for an operator T that is required to be positive w.r.t. the
/// weighted inner product <x,y> = x^* W y (W hermitian positive definite):
/// equivalently W*T is hermitian PSD. The witness eigenvalue solves the
/// generalized problem (W T) x = lambda W x.
template <class S>
PsdVerdict weighted_psd(const Mat<S>& t, const Mat<S>& w, double tol) {
  PsdVerdict v;
  Mat<S> b = w * t;
  v.herm_residual =
      std::sqrt(ScalarTraits<S>::real_to_double(hermiticity_defect2(b)));
  if (t.rows == 0) {
    v.psd = v.definite = true;
    return v;
  }
  v.min_eig = detail::min_gen_eig_of(to_eigen_complex(b), to_eigen_complex(w));
  if constexpr (ScalarTraits<S>::exact) {
    if (hermiticity_defect2(b) != typename ScalarTraits<S>::Real{}) {
      v.psd = v.definite = false;
      return v;
    }
    v.psd = psd_pivot(b);
    v.definite = v.psd && rank(b, tol) == b.rows;
  } else {
    double scale = std::max(
        1.0, std::sqrt(ScalarTraits<S>::real_to_double(detail::max_norm2_entry(b))));
    v.psd = v.min_eig >= -tol && v.herm_residual <= tol * scale;
    v.definite = v.psd && v.min_eig > tol;
  }
  return v;
}

/// Smallest singular value (float witness in every backend).
template <class S>
double smallest_singular_value(const Mat<S>& m) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen_complex(m));
  return svd.singularValues().minCoeff();
}

}  // namespace qgavg
