#include <cmath>

#include "support.hpp"
#include "zreg/fractional.hpp"
#include "zreg/integer_trace.hpp"
#include "zreg/special.hpp"

using namespace zreg;

namespace {

const GeneratorSpec kRiemann = polynomial_generator("riemann", {1});
const GeneratorSpec kCubic = polynomial_generator("cubic", {1, 0, 3});
const GeneratorSpec kQuintic = polynomial_generator("quintic", {1, 0, 0, 0, 5});

// fp \int_0^inf x^{-a-2} (1 + x^2)^{-a-1} dx, through the C library's tgamma.
double cubic_finite_part(double a) {
  return std::tgamma(-(a + 1) / 2) * std::tgamma(3 * (a + 1) / 2) / (2 * std::tgamma(a + 1));
}

struct Sample {
  double alpha;
  double value;
};

// Closed-form values of R for Phi = z + z^3 (40-digit evaluation).
const Sample kCubicValues[] = {
    {-0.9, -3.119211016355163816},  {-0.7, -0.89891851560340381475}, {-0.3, -0.40861472170177289867},
    {0.2, -0.67177984445299620614}, {0.5, -1.0795942416882726068},   {0.8, -1.6494727613851009014},
    {1.4, -2.7630522152104978481},  {1.9, -1.1570927139069637316},   {2.3, 6.8125022295653888447},
    {2.8, 37.756467733425569264},
};

// Same for Phi = z + z^5 via its Beta-function Mellin transform.
const Sample kQuinticValues[] = {
    {-0.5, -0.46523705282539304423}, {-0.1, -0.48019306131171048361}, {0.3, -0.53170638061059770905},
    {0.5, -0.49812881630607774854},  {1.3, 0.37389766561811913861},   {1.7, 0.74908684534340630254},
    {2.5, -6.7042869231880561108},
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::MalformedSpec;
}

}  // namespace

TEST_SUITE("fractional") {
  TEST_CASE("finite part vanishes for h = 1") {
    for (double a : {-0.7, -0.2, 0.3, 1.5, 2.9, 4.5}) {
      const auto fp = finite_part_mellin(kRiemann, a);
      CHECK_NEAR(fp.value, 0.0, 1e-12);
      CHECK(fp.subtracted_terms >= static_cast<std::size_t>(std::floor(a) + 2));
    }
  }

  TEST_CASE("finite part for Phi = z + z^3") {
    CHECK_NEAR(finite_part_mellin(kCubic, 0.5).value, -3.0901244621689531974, 1e-10);
    for (const auto& s : kCubicValues) {
      INFO("alpha " << s.alpha);
      const auto fp = finite_part_mellin(kCubic, s.alpha);
      CHECK_NEAR(fp.value, cubic_finite_part(s.alpha), 1e-9 * std::max(1.0, std::abs(cubic_finite_part(s.alpha))));
      CHECK(fp.split_point <= 1.0);
      CHECK(fp.tail_split >= 1.0);
    }
  }

  TEST_CASE("frac_regulator_fp against closed forms") {
    CHECK_NEAR(frac_regulator_fp(kRiemann, 0.5).total, -0.20788622497735456602, 1e-12);
    for (const auto& s : kCubicValues) {
      INFO("alpha " << s.alpha);
      const auto v = frac_regulator_fp(kCubic, s.alpha);
      CHECK_NEAR(v.total, s.value, 1e-9);
      CHECK(v.route == Route::fp_mellin);
      CHECK(v.err_estimate >= 0.0);
      CHECK(v.err_estimate < 1e-8);
      CHECK_NEAR(v.total, v.zeta_part + v.correction, 1e-15 * std::max(1.0, std::abs(v.total)));
    }
    for (const auto& s : kQuinticValues) {
      INFO("alpha " << s.alpha);
      CHECK_NEAR(frac_regulator_fp(kQuintic, s.alpha).total, s.value, 1e-9);
    }
  }

  TEST_CASE("complex orders") {
    CHECK_NEAR(frac_regulator_fp(kCubic, {0.5, 0.3}).total,
               Complex(-0.99368834805999837121, -0.49939111320342837548), 1e-9);
    CHECK_NEAR(frac_regulator_fp(kQuintic, {1.2, -0.4}).total,
               Complex(0.13868269096936740969, -0.73562903099277820889), 1e-9);
  }

  TEST_CASE("even integers of an odd Phi") {
    CHECK(std::abs(frac_regulator_fp(kCubic, 2.0 + 1e-6).total) < 1e-4);
    CHECK(std::abs(frac_regulator_fp(kCubic, 4.0 - 1e-6).total) < 1e-3);
  }

  TEST_CASE("preconditions") {
    CHECK(code_of([] { finite_part_mellin(kCubic, 1.0); }) == ErrorCode::InvalidOrder);
    CHECK(code_of([] { finite_part_mellin(kCubic, -1.2); }) == ErrorCode::OutOfRegularizationRegion);
    CHECK(code_of([] { frac_regulator(kCubic, -1.0); }) == ErrorCode::OutOfRegularizationRegion);
    CHECK(code_of([] { finite_part_mellin(polynomial_generator("a", {1, 2}), 0.5); }) ==
          ErrorCode::HankelConditionsFailed);
    const auto series_only = make_generator("s", {Rational(1), Rational(1)}, false);
    CHECK(code_of([&] { finite_part_mellin(series_only, 0.5); }) == ErrorCode::NotPolynomial);
  }

  TEST_CASE("direct sum") {
    CHECK_NEAR(frac_action_direct_sum(kRiemann, 1.0, std::log(2.0)), 2.0, 1e-13);
    for (unsigned m = 0; m <= 4; ++m) {
      for (double t : {0.2, 0.9}) {
        const Complex want = polylog_neg_int(m, std::exp(-phi_eval_real(kCubic, t)));
        CHECK(std::abs(frac_action_direct_sum(kCubic, m, t) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
  }

  TEST_CASE("direct sum minus its singular part tends to zeta(-a)") {
    const double a = 0.5;
    for (const auto* g : {&kRiemann, &kCubic}) {
      double prev = 0.0;
      for (double t : {1e-1, 1e-2, 1e-3}) {
        const double phi = phi_eval_real(*g, t);
        const Complex rest = frac_action_direct_sum(*g, a, t) - gamma_c(1.0 + a) * std::pow(phi, -1.0 - a);
        const double gap = std::abs(rest - zeta_c(-a));
        // Next term of the expansion: -zeta(-a-1) Phi.
        CHECK(gap <= 1.5 * std::abs(zeta_c(-a - 1.0)) * phi);
        if (prev > 0.0) CHECK(gap < prev);
        prev = gap;
      }
    }
  }

  TEST_CASE("dispatcher") {
    const auto one = frac_regulator(kCubic, 1.0);
    CHECK(one.route == Route::integer_formula);
    CHECK_NEAR(one.total, -25.0 / 12.0, 1e-15);
    FracConfig lim;
    lim.use_limit = true;
    const auto via_limit = frac_regulator(kCubic, 1.0, lim);
    CHECK(via_limit.route == Route::integer_limit);
    CHECK_NEAR(via_limit.total, -25.0 / 12.0, 1e-6);
    CHECK_NEAR(frac_regulator(kRiemann, 0.3).total, zeta_c(-0.3), 1e-12);
    for (unsigned m = 0; m <= 5; ++m) {
      CHECK(frac_regulator(kRiemann, m).total.real() == zeta_neg_int(m).get_d());
    }
    CHECK(frac_regulator(kCubic, 1.0005).route == Route::integer_formula);
    CHECK(frac_regulator(kCubic, 0.9995).route == Route::integer_formula);
    CHECK(frac_regulator(kCubic, 1.002).route == Route::fp_mellin);
    CHECK(frac_regulator(kCubic, {1.0, 1e-4}).route == Route::fp_mellin);
    CHECK(frac_regulator(kCubic, -0.0005).route == Route::integer_formula);
  }

  TEST_CASE("cross-check") {
    FracConfig cfg;
    cfg.crosscheck = true;
    const auto v = frac_regulator(kCubic, 0.5, cfg);
    CHECK(v.crosscheck_delta >= 0.0);
    CHECK(v.crosscheck_delta < 1e-7);
    CHECK(frac_regulator(kCubic, 0.5).crosscheck_delta < 0.0);
    cfg.crosscheck_threshold = -1.0;
    CHECK(code_of([&] { frac_regulator(kCubic, 0.5, cfg); }) == ErrorCode::RouteDisagreement);
  }

  TEST_CASE("continuity at integers") {
    for (unsigned m = 1; m <= 3; ++m) {
      const auto lim = integer_limit(kCubic, m);
      const double exact = trace_integer(kCubic, m).total.get_d();
      CHECK_NEAR(lim.total, exact, 1e-5);
      CHECK(std::abs(lim.total - exact) <= lim.err_estimate);
    }
  }
}
