#pragma once

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over exact
// rationals (mpq_class) or complex doubles.

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zreg/error.hpp"

namespace zreg {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

template <class T>
concept ComplexField = std::same_as<T, Complex>;

template <class T>
class PowerSeries {
 public:
  using value_type = T;

  explicit PowerSeries(std::size_t order = kDefaultOrder) : coeffs_(order + 1, T(0)) {}

  // Coefficients beyond `order` are dropped; missing ones are zero.
  PowerSeries(std::vector<T> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, T(0));
  }

  static PowerSeries constant(const T& c, std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static PowerSeries identity(std::size_t order) {
    PowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const T> coeffs() const noexcept { return coeffs_; }

  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }

  // Coefficient of z^i, zero past the truncation order.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  PowerSeries truncated(std::size_t order) const { return PowerSeries(coeffs_, order); }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<T> coeffs_;
};

template <class T>
PowerSeries<T> operator+(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
PowerSeries<T> operator-(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
PowerSeries<T> operator*(const T& c, const PowerSeries<T>& a) {
  PowerSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = c * a[i];
  return r;
}

// Cauchy product truncated at the smaller order.
template <class T>
PowerSeries<T> operator*(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class T>
PowerSeries<T> reciprocal(const PowerSeries<T>& a) {
  if (is_zero(a[0])) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal of series with c_0 = 0");
  const std::size_t n = a.order();
  PowerSeries<T> b(n);
  const T inv0 = T(1) / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return b;
}

// f(g(z)) by Horner's scheme; g must vanish exactly at the origin.
template <class T>
PowerSeries<T> compose(const PowerSeries<T>& f, const PowerSeries<T>& g) {
  if (!is_zero(g[0])) throw Error(ErrorCode::NonzeroInnerConstant, "inner series has g(0) != 0");
  const std::size_t n = std::min(f.order(), g.order());
  PowerSeries<T> r = PowerSeries<T>::constant(f[n], n);
  const PowerSeries<T> inner = g.truncated(n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * inner;
    r[0] += f[k];
  }
  return r;
}

// Termwise antiderivative with zero constant; the order grows by one.
template <class T>
PowerSeries<T> integrate(const PowerSeries<T>& a) {
  PowerSeries<T> r(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) r[i + 1] = a[i] / T(static_cast<long>(i + 1));
  return r;
}

template <class T>
PowerSeries<T> derivative(const PowerSeries<T>& a) {
  if (a.order() == 0) return PowerSeries<T>(0);
  PowerSeries<T> r(a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i) r[i - 1] = a[i] * T(static_cast<long>(i));
  return r;
}

// a^k for integer k by binary powering; negative k goes through reciprocal.
template <class T>
PowerSeries<T> pow_int(const PowerSeries<T>& a, long k) {
  PowerSeries<T> base = k < 0 ? reciprocal(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  PowerSeries<T> r = PowerSeries<T>::constant(T(1), a.order());
  while (e != 0) {
    if (e & 1UL) r = r * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return r;
}

template <class T>
T evaluate(const PowerSeries<T>& a, const T& z) {
  T acc(0);
  for (std::size_t i = a.order() + 1; i-- > 0;) acc = acc * z + a[i];
  return acc;
}

// Principal logarithm: log(c_0) + log(a / c_0).
template <ComplexField T>
PowerSeries<T> log(const PowerSeries<T>& a) {
  if (is_zero(a[0])) throw Error(ErrorCode::ZeroConstantTerm, "log of series with c_0 = 0");
  const std::size_t n = a.order();
  // (log a)' = a'/a, solved coefficientwise.
  PowerSeries<T> r(n);
  r[0] = std::log(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    T acc = T(static_cast<double>(k)) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= T(static_cast<double>(j)) * r[j] * a[k - j];
    r[k] = acc / (T(static_cast<double>(k)) * a[0]);
  }
  return r;
}

template <ComplexField T>
PowerSeries<T> exp(const PowerSeries<T>& a) {
  const std::size_t n = a.order();
  PowerSeries<T> r(n);
  r[0] = std::exp(a[0]);
  // r' = a' r
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += T(static_cast<double>(j)) * a[j] * r[k - j];
    r[k] = acc / T(static_cast<double>(k));
  }
  return r;
}

// a^s = exp(s log a) with the principal branch at the constant term.
template <ComplexField T>
PowerSeries<T> powc(const PowerSeries<T>& a, const T& s) {
  return exp(s * log(a));
}

inline PowerSeries<Complex> to_complex(const PowerSeries<Rational>& a) {
  PowerSeries<Complex> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = Complex(a[i].get_d(), 0.0);
  return r;
}

}  // namespace zreg
