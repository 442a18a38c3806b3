#include "zreg/stirling.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zreg {

namespace {

Complex pairwise_sum(std::span<const Complex> v) {
  if (v.size() <= 4) {
    Complex s(0.0, 0.0);
    for (const Complex& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// n! / (n-k)!
double falling_factorial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

// Correctly rounded integers; exact below 2^53.
double binomial(unsigned k, unsigned l) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), k, l);
  return c.get_d();
}

double factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f.get_d();
}

// l^a for l > 0; std::pow keeps integer powers exact.
Complex real_base_pow(unsigned l, Complex a) {
  const double base = static_cast<double>(l);
  const double mag = std::pow(base, a.real());
  if (a.imag() == 0.0) return {mag, 0.0};
  const double phase = a.imag() * std::log(base);
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

bool collapse_identity_holds(unsigned n) {
  for (unsigned l = 1; l <= n; ++l) {
    mpz_class acc = 0;
    for (unsigned k = l; k <= n; ++k) {
      mpz_class ckl, cnk;
      mpz_bin_uiui(ckl.get_mpz_t(), k, l);
      mpz_bin_uiui(cnk.get_mpz_t(), n, k);
      if ((k - l) % 2 == 0) {
        acc += ckl * cnk;
      } else {
        acc -= ckl * cnk;
      }
    }
    if (acc != (l == n ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

FracStirling stirling2_frac_detail(Complex alpha, unsigned k) {
  if (k == 0 || k > kStirlingMaxK) {
    throw Error(ErrorCode::InvalidOrder, "Stirling order k must lie in 1.." + std::to_string(kStirlingMaxK));
  }
  std::vector<Complex> terms(k);
  double magnitude = 0.0;
  for (unsigned l = 1; l <= k; ++l) {
    // The 1/k! is applied once after summing, so integer orders stay exact.
    Complex t = binomial(k, l) * real_base_pow(l, alpha);
    if ((k - l) % 2 == 1) t = -t;
    terms[l - 1] = t;
    magnitude += std::abs(t);
  }
  FracStirling s;
  s.alpha = alpha;
  s.k = k;
  const Complex sum = pairwise_sum(terms);
  s.value = sum / factorial(k);
  const double v = std::abs(sum);
  s.lost_bits = v > 0.0 ? std::max(0.0, std::log2(magnitude / v)) : std::numeric_limits<double>::infinity();
  return s;
}

PowerSeries<Complex> frac_operator_apply(Complex alpha, const PowerSeries<Complex>& f) {
  PowerSeries<Complex> r(f.order());
  // {a, 0} is 1 only for a = 0.
  r[0] = alpha == Complex(0.0, 0.0) ? f[0] : Complex(0.0, 0.0);
  const unsigned top = static_cast<unsigned>(std::min<std::size_t>(f.order(), kStirlingMaxK));
  std::vector<Complex> stirling(top + 1);
  for (unsigned k = 1; k <= top; ++k) stirling[k] = stirling2_frac(alpha, k);
  for (unsigned n = 1; n <= top; ++n) {
    if (is_zero(f[n])) continue;
    Complex acc(0.0, 0.0);
    for (unsigned k = 1; k <= n; ++k) acc += stirling[k] * falling_factorial(n, k);
    r[n] = acc * f[n];
  }
  return r;
}

double eigen_check(Complex alpha, unsigned n) {
  if (!collapse_identity_holds(n)) return std::numeric_limits<double>::infinity();
  PowerSeries<Complex> monomial(n);
  monomial[n] = 1.0;
  const Complex got = frac_operator_apply(alpha, monomial)[n];
  const Complex want = real_base_pow(n, alpha);
  return std::abs(got - want);
}

}  // namespace zreg
