#pragma once

// Circle-plus-ray form of the Hankel-type regulator:
//
//   R_L(a) = zeta(-a) + Gamma(1+a)/(2 pi i) \oint_{|z|=rho} Phi(z)^{-(1+a)} dz/z
//                     - 1/Gamma(-a) \int_rho^inf (-Phi(-x))^{-(1+a)} dx/x

#include <cstddef>
#include <vector>

#include "zreg/generator.hpp"
#include "zreg/regulator.hpp"

namespace zreg {

struct ContourConfig {
  double rho = 0.25;
  std::size_t n_circle = 512;
  std::size_t max_doublings = 6;
  double circle_tol = 1e-11;
  // The ray is integrated directly on [rho, tail_cut] and through x = 1/u beyond.
  double tail_cut = 1.0;
  double ray_tol = 1e-11;
};

struct CircleResult {
  Complex value;
  std::size_t nodes = 0;
  double last_change = 0.0;
};

// Checks rho > 0, max |Phi| < 2 pi on the circle, and that no zero of phi or
// secondary zero of e^{-Phi} - 1 lies inside. Throws RadiusTooLarge.
void validate_contour(const GeneratorSpec& g, const ContourConfig& cfg);

// Nearest solution of Phi(z) = 2 pi i k, k != 0 (modulus), over |k| <= k_max.
double nearest_secondary_zero(const GeneratorSpec& g, int k_max = 3);

CircleResult circle_integral_detail(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg);
Complex circle_integral(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg = {});

Complex ray_integral(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg = {},
                     double* err_estimate = nullptr);

RegulatorValue regulator_circle_ray(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg = {});

}  // namespace zreg
