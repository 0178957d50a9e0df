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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

namespace qgavg {

/// Floating backend scalar.
using Complex = std::complex<double>;

/// Exact rational used by the Gaussian-rational backend.
using BigRational = boost::multiprecision::cpp_rational;

/// Exact complex scalar: re + im*i with rational re, im.
struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  GaussianRational() = default;
  GaussianRational(BigRational r) : re(std::move(r)) {}
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    BigRational n2 = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr const char* backend_name = "float";

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {double(v), 0.0}; }
  static Complex from_ratio(long p, long q) { return {double(p) / double(q), 0.0}; }
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
  static Real norm2(const Complex& z) { return std::norm(z); }
  static double real_to_double(Real r) { return r; }
  /// a <= b with a a squared-magnitude in the backend's real type.
  static bool real_leq(Real a, double b) { return a <= b; }
  static Complex to_complex(const Complex& z) { return z; }
  static double real_part(const Complex& z) { return z.real(); }
  static int sign_real(const Complex& z) { return z.real() < 0 ? -1 : (z.real() > 0 ? 1 : 0); }
};

template <>
struct ScalarTraits<GaussianRational> {
  using Real = BigRational;
  static constexpr bool exact = true;
  static constexpr const char* backend_name = "rational";

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {BigRational(1)}; }
  static GaussianRational from_int(long v) { return {BigRational(v)}; }
  static GaussianRational from_ratio(long p, long q) { return {BigRational(p) / BigRational(q)}; }
  static GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
  static bool is_zero(const GaussianRational& z) { return z.re == 0 && z.im == 0; }
  static Real norm2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }
  static double real_to_double(const Real& r) { return r.convert_to<double>(); }
  // Exact comparison; the double bound converts to a rational exactly.
  static bool real_leq(const Real& a, double b) { return a <= BigRational(b); }
  static Complex to_complex(const GaussianRational& z) {
    return {z.re.convert_to<double>(), z.im.convert_to<double>()};
  }
  static double real_part(const GaussianRational& z) { return z.re.convert_to<double>(); }
  static int sign_real(const GaussianRational& z) { return z.re < 0 ? -1 : (z.re > 0 ? 1 : 0); }
};

/// Formats a rational the way documents store it: "p" or "p/q".
inline std::string rational_to_string(const BigRational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << "/" << boost::multiprecision::denominator(r);
  }
  return os.str();
}

/// Running maximum of squared residual magnitudes, with backend-exact
/// pass decisions and a double-valued report figure.
template <class S>
class ResidualMax {
  using T = ScalarTraits<S>;
  typename T::Real m_{};

 public:
  void add(const S& x) { add_norm2(T::norm2(x)); }
  void add_norm2(typename T::Real n2) {
    if (m_ < n2) m_ = std::move(n2);
  }
  void merge(const ResidualMax& o) { add_norm2(o.m_); }
  double value() const { return std::sqrt(T::real_to_double(m_)); }
  bool within(double tol) const { return T::real_leq(m_, tol * tol); }
  const typename T::Real& norm2max() const { return m_; }
};

}  // namespace qgavg
