#include <cmath>
#include <numbers>

#include "support.hpp"
#include "zreg/special.hpp"
#include "zreg/zeta_fn.hpp"

using namespace zreg;

namespace {
const GeneratorSpec kRiemann = polynomial_generator("riemann", {1});
const GeneratorSpec kCubic = polynomial_generator("cubic", {1, 0, 3});
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_SUITE("zeta_fn") {
  TEST_CASE("Phi = z reduces to Riemann zeta") {
    for (double a : {-2.5, -1.3, 0.0, 0.4, 0.9}) {
      INFO("a " << a);
      CHECK_NEAR(gen_zeta(kRiemann, a), zeta_c(a), 1e-12);
    }
    CHECK_NEAR(gen_zeta(kRiemann, {0.3, 2.0}), zeta_c({0.3, 2.0}), 1e-11);
  }

  TEST_CASE("Phi = z + z^3") {
    CHECK_NEAR(gen_zeta(kCubic, -2.5), 15.489117332688707323, 1e-8);
    CHECK_NEAR(gen_zeta(kCubic, -1.3), -2.6561315757951810541, 1e-9);
    CHECK_NEAR(gen_zeta(kCubic, 0.4), -0.4349151092934775331, 1e-9);
    CHECK_NEAR(gen_zeta(kCubic, 0.9), -3.119211016355163816, 1e-9);
    CHECK_NEAR(gen_zeta(kCubic, -1.0), -25.0 / 12.0, 1e-15);
    CHECK(gen_zeta(kCubic, -2.0) == Complex(0.0, 0.0));
  }

  TEST_CASE("Re a >= 1 is rejected") {
    for (Complex a : {Complex(1.0, 0.0), Complex(1.5, 0.0), Complex(1.0, 3.0)}) {
      try {
        gen_zeta(kCubic, a);
        FAIL("expected OutOfRegularizationRegion");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRegularizationRegion);
      }
    }
  }

  TEST_CASE("regularized products") {
    const auto r = reg_product(kRiemann);
    CHECK(std::abs(r.z_prime_0 + 0.5 * std::log(2.0 * kPi)) < 1e-9);
    CHECK(std::abs(r.product - std::sqrt(2.0 * kPi)) < 1e-6);
    CHECK(r.richardson_order == 4);
    const auto c = reg_product(kCubic);
    CHECK(std::abs(c.product - std::sqrt(2.0 * kPi) * std::exp(-kPi / 2.0)) < 1e-6);
    CHECK(std::abs(c.product - 0.52107682379913365853) < 1e-8);
  }

  TEST_CASE("product is stable under step halving") {
    for (const auto* g : {&kRiemann, &kCubic}) {
      CHECK(std::abs(reg_product(*g, 1e-3).product - reg_product(*g, 5e-4).product) < 1e-7);
    }
  }
}
