#include <cmath>
#include <numbers>

#include "support.hpp"
#include "zreg/fractional.hpp"
#include "zreg/hankel.hpp"
#include "zreg/integer_trace.hpp"
#include "zreg/special.hpp"

using namespace zreg;

namespace {

const GeneratorSpec kRiemann = polynomial_generator("riemann", {1});
const GeneratorSpec kCubic = polynomial_generator("cubic", {1, 0, 3});
const GeneratorSpec kQuintic = polynomial_generator("quintic", {1, 0, 0, 0, 5});

// Both pieces for Phi = z: rho^{-1-a} / ((1+a) Gamma(-a)).
double riemann_piece(double a, double rho) { return std::pow(rho, -1.0 - a) / ((1.0 + a) * std::tgamma(-a)); }

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("Phi = z in closed form") {
    for (double a : {-0.6, 0.25, 0.5, 1.7, 2.4}) {
      for (double rho : {0.2, 0.5}) {
        ContourConfig cfg;
        cfg.rho = rho;
        const double want = riemann_piece(a, rho);
        INFO("a " << a << " rho " << rho);
        CHECK_NEAR(circle_integral(kRiemann, a, cfg), want, 1e-11 * std::max(1.0, std::abs(want)));
        CHECK_NEAR(ray_integral(kRiemann, a, cfg), want, 1e-10 * std::max(1.0, std::abs(want)));
        CHECK_NEAR(regulator_circle_ray(kRiemann, a, cfg).total, zeta_c(-a), 1e-10);
      }
    }
  }

  TEST_CASE("integer orders: no ray, circle is the residue") {
    for (unsigned m = 0; m <= 4; ++m) {
      CHECK(ray_integral(kCubic, static_cast<double>(m)) == Complex(0.0, 0.0));
      const double want = trace_integer(kCubic, m).correction.get_d();
      CHECK_NEAR(circle_integral(kCubic, static_cast<double>(m)), want, 1e-10 * std::max(1.0, std::abs(want)));
    }
  }

  TEST_CASE("agrees with the finite-part route") {
    for (const auto* g : {&kCubic, &kQuintic}) {
      for (double a : {-0.5, 0.3, 0.5, 1.3, 2.5}) {
        INFO("a " << a);
        const auto cr = regulator_circle_ray(*g, a);
        CHECK(cr.route == Route::circle_ray);
        CHECK_NEAR(cr.total, frac_regulator_fp(*g, a).total, 1e-9);
        CHECK(std::abs(cr.total.imag()) <= 1e-10);
      }
    }
    CHECK_NEAR(regulator_circle_ray(kCubic, 0.5).total, -1.0795942416882726068, 1e-9);
  }

  TEST_CASE("radius does not matter") {
    ContourConfig a, b;
    a.rho = 0.2;
    b.rho = 0.3;
    for (double alpha : {-0.4, 0.5, 1.5}) {
      CHECK_NEAR(regulator_circle_ray(kCubic, alpha, a).total, regulator_circle_ray(kCubic, alpha, b).total, 1e-9);
    }
    CHECK_NEAR(regulator_circle_ray(kCubic, {0.5, 0.3}, a).total,
               Complex(-0.99368834805999837121, -0.49939111320342837548), 1e-9);
  }

  TEST_CASE("circle refinement converges") {
    const auto r = circle_integral_detail(kCubic, 0.5, {});
    CHECK(r.last_change < 1e-11);
    CHECK(r.nodes >= 1024);
  }

  TEST_CASE("contour validation") {
    ContourConfig big;
    big.rho = 1.5;
    try {
      circle_integral(kCubic, 0.5, big);
      FAIL("expected RadiusTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RadiusTooLarge);
    }
    ContourConfig zero;
    zero.rho = 0.0;
    CHECK_THROWS_AS(validate_contour(kCubic, zero), Error);
    CHECK_NOTHROW(validate_contour(kCubic, {}));
    // z + z^3 = 2 pi i has a root of modulus close to (2 pi)^{1/3} - small correction.
    const double r = nearest_secondary_zero(kCubic);
    CHECK(r > 1.0);
    CHECK(r < std::cbrt(2.0 * std::numbers::pi));
    CHECK(std::abs(nearest_secondary_zero(kRiemann) - 2.0 * std::numbers::pi) < 1e-12);
  }
}
