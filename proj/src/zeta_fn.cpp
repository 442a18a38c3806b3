#include "zreg/zeta_fn.hpp"

#include <cmath>

namespace zreg {

Complex gen_zeta(const GeneratorSpec& g, Complex alpha, const FracConfig& cfg) {
  if (alpha.real() >= 1.0) {
    throw Error(ErrorCode::OutOfRegularizationRegion, "generalized zeta is evaluated only for Re alpha < 1");
  }
  return frac_regulator(g, -alpha, cfg).total;
}

ProductValue reg_product(const GeneratorSpec& g, double step, const FiniteConfig& cfg) {
  auto zeta_at = [&](double a) { return frac_regulator_fp(g, -a, cfg).total.real(); };
  auto central = [&](double h) { return (zeta_at(h) - zeta_at(-h)) / (2.0 * h); };
  const double coarse = central(step);
  const double fine = central(step / 2.0);

  ProductValue p;
  p.z_prime_0 = (4.0 * fine - coarse) / 3.0;
  p.product = std::exp(-p.z_prime_0);
  p.step = step;
  p.richardson_order = 4;
  return p;
}

}  // namespace zreg
