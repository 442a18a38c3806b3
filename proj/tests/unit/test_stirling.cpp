#include <cmath>
#include <numbers>

#include "support.hpp"
#include "zreg/special.hpp"
#include "zreg/stirling.hpp"

using namespace zreg;

TEST_SUITE("stirling") {
  TEST_CASE("small values") {
    CHECK(stirling2_frac(3.0, 2) == Complex(3.0, 0.0));
    CHECK(stirling2_frac(3.0, 3) == Complex(1.0, 0.0));
    CHECK(stirling2_frac(3.0, 4) == Complex(0.0, 0.0));
    for (Complex a : {Complex(0.5, 0.0), Complex(-1.3, 0.0), Complex(2.0, 1.5)}) {
      CHECK_NEAR(stirling2_frac(a, 1), 1.0, 1e-15);
    }
    CHECK_NEAR(stirling2_frac(0.5, 2), (std::numbers::sqrt2 - 2.0) / 2.0, 1e-15);
    CHECK_NEAR(stirling2_frac(-1.0, 2), -0.75, 1e-15);
  }

  TEST_CASE("integer orders match the recurrence") {
    // S(m, k) = k S(m-1, k) + S(m-1, k-1)
    std::vector<std::vector<double>> s(11, std::vector<double>(11, 0.0));
    s[0][0] = 1.0;
    for (int m = 1; m <= 10; ++m)
      for (int k = 1; k <= m; ++k) s[m][k] = k * s[m - 1][k] + s[m - 1][k - 1];
    for (unsigned m = 1; m <= 10; ++m) {
      for (unsigned k = 1; k <= 10; ++k) {
        INFO("m " << m << " k " << k);
        CHECK_NEAR(stirling2_frac(static_cast<double>(m), k), s[m][k], 1e-12 * std::max(1.0, s[m][k]));
      }
    }
  }

  TEST_CASE("cancellation is reported") {
    const auto lo = stirling2_frac_detail(0.5, 4);
    const auto hi = stirling2_frac_detail(0.5, 30);
    CHECK(lo.lost_bits >= 0.0);
    CHECK(hi.lost_bits > lo.lost_bits);
    CHECK(hi.lost_bits > 20.0);
  }

  TEST_CASE("order cap") {
    for (unsigned k : {0u, kStirlingMaxK + 1}) {
      try {
        stirling2_frac(0.5, k);
        FAIL("expected InvalidOrder");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidOrder);
      }
    }
    CHECK_NOTHROW(stirling2_frac(2.0, kStirlingMaxK));
  }

  TEST_CASE("monomials are eigenfunctions") {
    for (Complex a : {Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(1.5, 0.7), Complex(3.0, 0.0)}) {
      for (unsigned n = 1; n <= 10; ++n) {
        INFO("a " << a << " n " << n);
        CHECK(eigen_check(a, n) <= 1e-10 * std::max(1.0, std::pow(static_cast<double>(n), a.real())));
      }
    }
  }

  TEST_CASE("operator on series") {
    PowerSeries<Complex> f(5);
    for (std::size_t n = 0; n <= 5; ++n) f[n] = Complex(1.0 / (n + 1.0), 0.0);
    // Integer order one is z d/dz.
    const auto zd = frac_operator_apply(1.0, f);
    for (std::size_t n = 0; n <= 5; ++n) CHECK_NEAR(zd[n], static_cast<double>(n) * f[n], 1e-14);
    const auto id = frac_operator_apply(0.0, f);
    for (std::size_t n = 0; n <= 5; ++n) CHECK_NEAR(id[n], f[n], 1e-14);
    const auto half = frac_operator_apply(0.5, f);
    CHECK(half[0] == Complex(0.0, 0.0));
    for (std::size_t n = 1; n <= 5; ++n) CHECK_NEAR(half[n], std::sqrt(static_cast<double>(n)) * f[n], 1e-12);
  }

  TEST_CASE("applied to the geometric series gives polylog partial sums") {
    // (z d/dz)^a sum_{n>=1} w^n = sum n^a w^n, truncated at the series order.
    const std::size_t order = 24;
    const double w = 0.3;
    PowerSeries<Complex> geo(order);
    for (std::size_t n = 1; n <= order; ++n) geo[n] = std::pow(w, static_cast<double>(n));
    const auto out = frac_operator_apply(-0.5, geo);
    Complex sum(0.0, 0.0);
    for (std::size_t n = 1; n <= order; ++n) sum += out[n];
    Complex partial(0.0, 0.0);
    for (std::size_t n = 1; n <= order; ++n) partial += std::pow(w, static_cast<double>(n)) / std::sqrt(double(n));
    CHECK_NEAR(sum, partial, 1e-10);
    CHECK_NEAR(sum, polylog_series(0.5, w), 1e-10);
  }
}
