#include "zreg/roots.hpp"

#include <Eigen/Eigenvalues>

namespace zreg {

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex(0.0, 0.0)) --n;
  if (n <= 1) return {};
  const std::size_t degree = n - 1;
  const Complex lead = coeffs[degree];

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[i] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  std::vector<Complex> roots(ev.data(), ev.data() + ev.size());

  // Polish each root with a few Newton steps on the original coefficients.
  for (auto& z : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex p = coeffs[degree], dp = 0.0;
      for (std::size_t i = degree; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs[i];
      }
      if (dp == Complex(0.0, 0.0)) break;
      z -= p / dp;
    }
  }
  return roots;
}

}  // namespace zreg
