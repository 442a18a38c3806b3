#pragma once

#include "zreg/fractional.hpp"

namespace zreg {

/// Z_L(a) = R_L(-a), Re a < 1.
Complex gen_zeta(const GeneratorSpec& g, Complex alpha, const FracConfig& cfg = {});

struct ProductValue {
  double z_prime_0 = 0.0;
  double product = 0.0;  // exp(-Z_L'(0))
  double step = 0.0;
  int richardson_order = 4;
};

/// Z_L'(0) from central differences at +-step and +-step/2 (fractional route
/// only, never at the integer point itself), Richardson-combined.
ProductValue reg_product(const GeneratorSpec& g, double step = 1e-3, const FiniteConfig& cfg = {});

}  // namespace zreg
