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

#include <cstddef>
#include <vector>

#include "qgavg/errors.hpp"
#include "qgavg/scalar.hpp"

namespace qgavg {

template <class S>
using Vec = std::vector<S>;

/// Row-major dense matrix; at(r, c) reads [output index][input index]
/// for matrices of linear maps.
template <class S>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, ScalarTraits<S>::zero()) {}

  S& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const S& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ScalarTraits<S>::one();
    return m;
  }

  Vec<S> apply(const Vec<S>& x) const {
    require(x.size() == cols, Errc::Inconsistent, "matrix-vector size mismatch");
    Vec<S> y(rows, ScalarTraits<S>::zero());
    for (std::size_t r = 0; r < rows; ++r) {
      S acc = ScalarTraits<S>::zero();
      for (std::size_t c = 0; c < cols; ++c) acc += at(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

  Vec<S> column(std::size_t c) const {
    Vec<S> y(rows);
    for (std::size_t r = 0; r < rows; ++r) y[r] = at(r, c);
    return y;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    require(a.cols == b.rows, Errc::Inconsistent, "matrix-matrix size mismatch");
    Mat out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        const S& v = a.at(i, k);
        if (ScalarTraits<S>::is_zero(v)) continue;
        for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
      }
    return out;
  }
};

/// Kronecker product, composite indices (i,a) -> i*B.rows + a on rows,
/// (j,b) -> j*B.cols + b on columns.
template <class S>
Mat<S> kron(const Mat<S>& A, const Mat<S>& B) {
  Mat<S> out(A.rows * B.rows, A.cols * B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) {
      const S& v = A.at(i, j);
      if (ScalarTraits<S>::is_zero(v)) continue;
      for (std::size_t a = 0; a < B.rows; ++a)
        for (std::size_t b = 0; b < B.cols; ++b)
          out.at(i * B.rows + a, j * B.cols + b) = v * B.at(a, b);
    }
  return out;
}

/// Rank-3 tensor, e.g. structure constants M[i][j][k].
template <class S>
struct Tensor3 {
  std::size_t n0 = 0, n1 = 0, n2 = 0;
  std::vector<S> a;

  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : n0(d0), n1(d1), n2(d2), a(d0 * d1 * d2, ScalarTraits<S>::zero()) {}

  S& at(std::size_t i, std::size_t j, std::size_t k) { return a[(i * n1 + j) * n2 + k]; }
  const S& at(std::size_t i, std::size_t j, std::size_t k) const {
    return a[(i * n1 + j) * n2 + k];
  }
};

// ---- small vector helpers ----------------------------------------------

template <class S>
Vec<S> zeros(std::size_t n) {
  return Vec<S>(n, ScalarTraits<S>::zero());
}

template <class S>
Vec<S> unit_vec(std::size_t n, std::size_t i) {
  Vec<S> v = zeros<S>(n);
  v[i] = ScalarTraits<S>::one();
  return v;
}

template <class S>
void axpy(Vec<S>& y, const S& a, const Vec<S>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

template <class S>
Vec<S> sub(const Vec<S>& x, const Vec<S>& y) {
  Vec<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

template <class S>
Vec<S> scaled(const Vec<S>& x, const S& a) {
  Vec<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
  return out;
}

template <class S>
typename ScalarTraits<S>::Real norm2_max(const Vec<S>& x) {
  typename ScalarTraits<S>::Real m{};
  for (const S& v : x) {
    auto n = ScalarTraits<S>::norm2(v);
    if (m < n) m = n;
  }
  return m;
}

/// Outer product into composite coordinates (i,j) -> i*y.size() + j.
template <class S>
Vec<S> outer(const Vec<S>& x, const Vec<S>& y) {
  Vec<S> out(x.size() * y.size(), ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (ScalarTraits<S>::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

/// (f (x) id) on a vector in V1 (x) V2 given the functional's coefficients on V1.
template <class S>
Vec<S> contract_leg1(const Vec<S>& f, const Vec<S>& v, std::size_t n1, std::size_t n2) {
  Vec<S> out = zeros<S>(n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) out[j] += f[i] * v[i * n2 + j];
  return out;
}

/// (id (x) f) on a vector in V1 (x) V2.
template <class S>
Vec<S> contract_leg2(const Vec<S>& f, const Vec<S>& v, std::size_t n1, std::size_t n2) {
  Vec<S> out = zeros<S>(n1);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) out[i] += f[j] * v[i * n2 + j];
  return out;
}

/// (K (x) id) on a vector in V1 (x) V2, K: V1 -> W.
template <class S>
Vec<S> map_leg1(const Mat<S>& K, const Vec<S>& v, std::size_t n1, std::size_t n2) {
  require(K.cols == n1, Errc::Inconsistent, "map_leg1 shape");
  Vec<S> out = zeros<S>(K.rows * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t w = 0; w < K.rows; ++w) {
      const S& c = K.at(w, i);
      if (ScalarTraits<S>::is_zero(c)) continue;
      for (std::size_t j = 0; j < n2; ++j) out[w * n2 + j] += c * v[i * n2 + j];
    }
  return out;
}

/// (id (x) K) on a vector in V1 (x) V2, K: V2 -> W.
template <class S>
Vec<S> map_leg2(const Mat<S>& K, const Vec<S>& v, std::size_t n1, std::size_t n2) {
  require(K.cols == n2, Errc::Inconsistent, "map_leg2 shape");
  Vec<S> out = zeros<S>(n1 * K.rows);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const S& c = v[i * n2 + j];
      if (ScalarTraits<S>::is_zero(c)) continue;
      for (std::size_t w = 0; w < K.rows; ++w) out[i * K.rows + w] += K.at(w, j) * c;
    }
  return out;
}

/// Leg swap V1 (x) V2 -> V2 (x) V1.
template <class S>
Vec<S> flip_legs(const Vec<S>& v, std::size_t n1, std::size_t n2) {
  Vec<S> out(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) out[j * n1 + i] = v[i * n2 + j];
  return out;
}

}  // namespace qgavg
