#pragma once

// Shared views of phi(z) = Phi(z)/z used by both fractional routes.

#include <vector>

#include "zreg/generator.hpp"

namespace zreg::detail {

// phi_0..phi_{d-1}
inline std::vector<double> reduced_coeffs(const GeneratorSpec& g) {
  return {g.phi_coeffs.begin() + 1, g.phi_coeffs.end()};
}

// phi(-x) on the negative real axis; positive for Hankel generators.
inline double reduced_neg_axis(const std::vector<double>& phi, double x) {
  double acc = 0.0;
  for (std::size_t i = phi.size(); i-- > 0;) acc = acc * (-x) + phi[i];
  return acc;
}

// G(u) = u^{d-1} phi(-1/u) in ascending powers of u: G_j = (-1)^{d-1-j} phi_{d-1-j}.
inline std::vector<double> reversed_tail(const std::vector<double>& phi) {
  const std::size_t n = phi.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = n - 1 - j;
    out[j] = (i % 2 == 0) ? phi[i] : -phi[i];
  }
  return out;
}

inline double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline bool is_nonnegative_integer(Complex a) {
  return a.imag() == 0.0 && a.real() >= 0.0 && a.real() == std::floor(a.real());
}

}  // namespace zreg::detail
