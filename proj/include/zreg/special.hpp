#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "zreg/series.hpp"

namespace zreg {

/// Bernoulli numbers B_0..B_K as exact rationals, with B_1 = -1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index);
  // Wraps an explicit list; used to check that consumers detect a bad table.
  explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t k) const { return values_.at(k); }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

// Shared read-only table of B_0..B_255; larger indices build a fresh table.
Rational bernoulli(std::size_t k);

/// Eulerian numbers <m, k> for 0 <= k < m <= M (row 0 is {1}).
class EulerianTable {
 public:
  explicit EulerianTable(std::size_t max_m);

  const mpz_class& operator()(std::size_t m, std::size_t k) const { return rows_.at(m).at(k); }
  const std::vector<mpz_class>& row(std::size_t m) const { return rows_.at(m); }
  std::size_t max_m() const noexcept { return rows_.size() - 1; }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

/// zeta(-m) = (-1)^m B_{m+1}/(m+1), exact.
Rational zeta_neg_int(unsigned m);

/// Complex Gamma via Lanczos (g = 7) with reflection for Re z < 1/2.
Complex gamma_c(Complex z);

/// 1/Gamma(z); entire, exactly zero at the non-positive integers.
Complex rgamma_c(Complex z);

/// Riemann zeta: Borwein-accelerated eta series for Re s >= 1/2,
/// functional equation otherwise.
Complex zeta_c(Complex s);

/// sin(pi z) with the real part reduced first.
Complex sin_pi(Complex z);

/// e^w - 1 without cancellation for small |w|.
Complex expm1_c(Complex w);

/// Li_{-m}(x), closed form via Eulerian numbers; m = 0 gives x/(1-x).
Complex polylog_neg_int(unsigned m, Complex x);

struct PolylogSum {
  Complex value;
  std::size_t terms = 0;
  double remainder_bound = 0.0;
};

inline constexpr std::size_t kPolylogTermCap = 1'000'000;

/// Li_s(w) = sum_{k>=1} k^{-s} w^k for |w| < 1, stopped once the tail bound
/// drops below `tol`. Throws ConvergenceCap past kPolylogTermCap terms.
PolylogSum polylog_series_sum(Complex s, Complex w, double tol);

inline Complex polylog_series(Complex s, Complex w, double tol = 1e-14) {
  return polylog_series_sum(s, w, tol).value;
}

/// Li_s(e^mu) = Gamma(1-s)(-mu)^{s-1} + zeta(s) + sum_{k=1}^{terms} zeta(s-k) mu^k/k!
/// for |mu| < 2 pi and s not a positive integer.
Complex polylog_expand_near_one(Complex s, Complex mu, int terms = 40);

}  // namespace zreg
