#pragma once

#include <complex>
#include <random>

#include "doctest.h"
#include "zreg/generator.hpp"

namespace test {

using zreg::Complex;
using zreg::Rational;

inline bool near(Complex got, Complex want, double tol) { return std::abs(got - want) <= tol; }

#define CHECK_NEAR(got, want, tol)                                               \
  do {                                                                           \
    const ::zreg::Complex got_ = (got), want_ = (want);                          \
    INFO("got " << got_ << " want " << want_ << " |diff| " << std::abs(got_ - want_)); \
    CHECK(std::abs(got_ - want_) <= (tol));                                      \
  } while (0)

// Degree <= 4, coefficients in [-5, 5], p(0) in 1..5.
inline zreg::GeneratorSpec random_generator(std::mt19937& rng) {
  std::uniform_int_distribution<long> p0(1, 5), coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 4);
  std::vector<long> c{p0(rng)};
  for (int i = deg(rng); i > 0; --i) c.push_back(coef(rng));
  return zreg::polynomial_generator("random", c);
}

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace test
