#include "zreg/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace zreg {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Borwein's algorithm 2 for the alternating zeta function.
constexpr int kBorweinTerms = 60;

const std::array<double, kBorweinTerms + 1>& borwein_d() {
  static const auto table = [] {
    std::array<double, kBorweinTerms + 1> d{};
    const double n = kBorweinTerms;
    double term = 1.0 / n;  // (n-1)! 4^0 / (n! 0!)
    double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= kBorweinTerms; ++i) {
      term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
      acc += term;
      d[i] = n * acc;
    }
    return d;
  }();
  return table;
}

Complex eta_borwein(Complex s) {
  const auto& d = borwein_d();
  const double dn = d[kBorweinTerms];
  Complex sum(0.0, 0.0);
  for (int k = kBorweinTerms - 1; k >= 0; --k) {
    const double weight = (d[k] - dn) / dn;
    const Complex term = weight * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? term : -term;
  }
  return -sum;
}

}  // namespace

BernoulliTable::BernoulliTable(std::size_t max_index) {
  values_.reserve(max_index + 1);
  values_.emplace_back(1);
  // sum_{j=0}^{k} C(k+1, j) B_j = 0
  for (std::size_t k = 1; k <= max_index; ++k) {
    mpz_class binom = 1;  // C(k+1, 0)
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      acc += Rational(binom) * values_[j];
      binom = binom * static_cast<unsigned long>(k + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    Rational b = -acc / Rational(binom);
    b.canonicalize();
    values_.push_back(b);
  }
}

Rational bernoulli(std::size_t k) {
  static const BernoulliTable shared(255);
  if (k < shared.size()) return shared[k];
  return BernoulliTable(k)[k];
}

EulerianTable::EulerianTable(std::size_t max_m) {
  rows_.push_back({mpz_class(1)});
  for (std::size_t m = 1; m <= max_m; ++m) {
    const auto& prev = rows_.back();
    std::vector<mpz_class> row(m);
    for (std::size_t k = 0; k < m; ++k) {
      mpz_class v = 0;
      if (k < prev.size()) v += static_cast<unsigned long>(k + 1) * prev[k];
      if (k >= 1 && k - 1 < prev.size()) v += static_cast<unsigned long>(m - k) * prev[k - 1];
      row[k] = v;
    }
    rows_.push_back(std::move(row));
  }
}

Rational zeta_neg_int(unsigned m) {
  Rational v = bernoulli(m + 1) / Rational(m + 1);
  if (m % 2 == 1) v = -v;
  v.canonicalize();
  return v;
}

Complex sin_pi(Complex z) {
  const double shift = 2.0 * std::round(z.real() / 2.0);
  const Complex r(z.real() - shift, z.imag());
  if (r.imag() == 0.0) {
    if (r.real() == 0.0 || std::abs(r.real()) == 1.0) return {0.0, 0.0};
  }
  return std::sin(kPi * r);
}

Complex expm1_c(Complex w) {
  if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
  Complex term = w;
  Complex sum = w;
  for (int k = 2; k < 40; ++k) {
    term *= w / static_cast<double>(k);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

Complex gamma_c(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorCode::PoleAtNonpositiveInteger, "Gamma has a pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return kPi / (sin_pi(z) * gamma_c(1.0 - z));
  }
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const Complex w = z - 1.0;
  Complex series = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) series += c[i] / (w + static_cast<double>(i));
  const Complex t = w + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((w + 0.5) * std::log(t) - t) * series;
}

Complex rgamma_c(Complex z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.real() < 0.5) return sin_pi(z) * gamma_c(1.0 - z) / kPi;
  return 1.0 / gamma_c(z);
}

Complex zeta_c(Complex s) {
  if (s == Complex(1.0, 0.0)) throw Error(ErrorCode::PoleAtOne, "zeta has a pole at s = 1");
  if (is_nonpositive_integer(s)) {
    return {zeta_neg_int(static_cast<unsigned>(-s.real())).get_d(), 0.0};
  }
  // Near s = 0 the reflection would evaluate zeta next to its pole at 1 - s.
  if (s.real() >= 0.5 || std::abs(s) < 0.25) {
    // 1 - 2^{1-s}
    const Complex denom = -expm1_c((1.0 - s) * std::numbers::ln2);
    return eta_borwein(s) / denom;
  }
  const Complex one_minus = 1.0 - s;
  return std::pow(2.0, s) * std::pow(Complex(kPi, 0.0), s - 1.0) * sin_pi(s / 2.0) *
         gamma_c(one_minus) * zeta_c(one_minus);
}

Complex polylog_neg_int(unsigned m, Complex x) {
  if (x == Complex(1.0, 0.0)) throw Error(ErrorCode::PoleAtOne, "Li_{-m} has a pole at x = 1");
  const Complex one_minus = 1.0 - x;
  if (m == 0) return x / one_minus;
  static const EulerianTable eulerian(64);
  const EulerianTable local = m <= eulerian.max_m() ? EulerianTable(0) : EulerianTable(m);
  const auto& row = m <= eulerian.max_m() ? eulerian.row(m) : local.row(m);
  // sum_k <m,k> x^{m-k}, Horner in x from the highest power down.
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < m; ++k) acc = acc * x + row[k].get_d();
  acc *= x;
  return acc / std::pow(one_minus, static_cast<double>(m + 1));
}

PolylogSum polylog_series_sum(Complex s, Complex w, double tol) {
  const double aw = std::abs(w);
  if (aw >= 1.0) throw Error(ErrorCode::DivergentArgument, "polylog series needs |w| < 1");
  PolylogSum out;
  if (aw == 0.0) return out;

  const double re_s = s.real();
  // |w|^K / (1 - |w|) <= tol is necessary for the bound below to pass.
  const double min_terms = std::log(tol * (1.0 - aw)) / std::log(aw);
  if (min_terms > static_cast<double>(kPolylogTermCap)) {
    throw Error(ErrorCode::ConvergenceCap, "polylog series would exceed the term cap");
  }
  Complex sum(0.0, 0.0);
  Complex comp(0.0, 0.0);  // Kahan compensation
  Complex wk(1.0, 0.0);
  for (std::size_t k = 1; k <= kPolylogTermCap; ++k) {
    wk *= w;
    const double kd = static_cast<double>(k);
    const Complex term = std::exp(-s * std::log(kd)) * wk;
    const Complex y = term - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    // Terms past k shrink at least by the ratio r once r < 1.
    const double growth = std::pow((kd + 2.0) / (kd + 1.0), -re_s);
    const double r = aw * std::max(1.0, growth);
    if (r < 1.0) {
      const double next = std::abs(term) * std::pow((kd + 1.0) / kd, -re_s) * aw;
      const double bound = next / (1.0 - r);
      if (bound <= tol) {
        out.value = sum;
        out.terms = k;
        out.remainder_bound = bound;
        return out;
      }
    }
  }
  throw Error(ErrorCode::ConvergenceCap, "polylog series did not reach tolerance within the term cap");
}

Complex polylog_expand_near_one(Complex s, Complex mu, int terms) {
  if (s.imag() == 0.0 && s.real() >= 1.0 && s.real() == std::floor(s.real())) {
    throw Error(ErrorCode::InvalidOrder, "expansion is invalid for positive integer order");
  }
  if (std::abs(mu) >= 2.0 * kPi) throw Error(ErrorCode::OutOfDisk, "expansion needs |mu| < 2 pi");
  Complex result = gamma_c(1.0 - s) * std::exp((s - 1.0) * std::log(-mu)) + zeta_c(s);
  Complex power(1.0, 0.0);
  for (int k = 1; k <= terms; ++k) {
    power *= mu / static_cast<double>(k);
    result += zeta_c(s - static_cast<double>(k)) * power;
  }
  return result;
}

}  // namespace zreg
