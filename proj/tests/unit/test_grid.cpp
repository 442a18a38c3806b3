#include <cmath>

#include "support.hpp"
#include "zreg/grid.hpp"
#include "zreg/special.hpp"

using namespace zreg;

namespace {
const GeneratorSpec kRiemann = polynomial_generator("riemann", {1});
const GeneratorSpec kCubic = polynomial_generator("cubic", {1, 0, 3});

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::EmptySpec;
}
}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("grid spec parsing") {
    const auto s = parse_grid_spec("-1:2:-0.5:0.5:4:3");
    CHECK(s.re0 == -1.0);
    CHECK(s.re1 == 2.0);
    CHECK(s.im0 == -0.5);
    CHECK(s.nx == 4);
    CHECK(s.ny == 3);
    CHECK(s.re_at(3) == 2.0);
    CHECK(s.im_at(1) == 0.0);
    const auto one = parse_grid_spec("1:1:2:2:1:1");
    CHECK(one.re_at(0) == 1.0);
    for (const char* bad : {"", "1:2:3:4:5", "1:2:3:4:5:6:7", "a:2:3:4:5:6", "1:2:3:4:0:6", "1:2:3:4:-1:6",
                            "1:2:3:4:2.5:6", "1:2::4:5:6"}) {
      INFO(bad);
      CHECK(code_of([&] { parse_grid_spec(bad); }) == ErrorCode::MalformedSpec);
    }
  }

  TEST_CASE("cells") {
    CHECK_FALSE(branch_map_cell(kRiemann, 0.5, {-1.0, 0.01}).has_value());
    CHECK_FALSE(branch_map_cell(kRiemann, 0.5, {0.0, 1.0}).has_value());
    const auto v = branch_map_cell(kRiemann, 0.5, {1.0, 0.0});
    REQUIRE(v.has_value());
    CHECK_NEAR(*v, 0.70724071848680379075, 1e-10);
    const auto c = branch_map_cell(kCubic, 2.0, {0.5, 0.2});
    REQUIRE(c.has_value());
    CHECK_NEAR(*c, polylog_neg_int(2, std::exp(-phi_eval(kCubic, {0.5, 0.2}))), 1e-9);
  }

  TEST_CASE("branch map: serial and parallel agree cell for cell") {
    const auto spec = parse_grid_spec("-3:3:-3:3:41:37");
    const auto a = branch_map_serial(kCubic, 0.5, spec);
    const auto b = branch_map_omp(kCubic, 0.5, spec);
    REQUIRE(a.values.size() == 41 * 37);
    CHECK(a.values == b.values);
    CHECK(a.defined_count() > 0);
    CHECK(a.defined_count() < a.values.size());
    // Row-major over (re, im).
    const auto cell = branch_map_cell(kCubic, 0.5, {spec.re_at(30), spec.im_at(20)});
    CHECK(a.at(30, 20) == cell);
    CHECK(a.values[20 * 41 + 30] == cell);
  }

  TEST_CASE("branch map needs a polynomial") {
    const auto s = make_generator("s", {Rational(1), Rational(1)}, false);
    CHECK(code_of([&] { branch_map_serial(s, 0.5, {}); }) == ErrorCode::NotPolynomial);
    CHECK(code_of([&] { branch_map_omp(s, 0.5, {}); }) == ErrorCode::NotPolynomial);
  }

  TEST_CASE("regulator grid: serial and parallel agree") {
    std::vector<Complex> alphas;
    for (int i = 0; i < 40; ++i) alphas.emplace_back(-1.2 + 0.1 * i, 0.0);
    alphas.emplace_back(0.5, 0.3);
    const auto a = regulator_grid_serial(kCubic, alphas);
    const auto b = regulator_grid_omp(kCubic, alphas);
    REQUIRE(a.size() == alphas.size());
    REQUIRE(b.size() == alphas.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      INFO("alpha " << alphas[i]);
      CHECK(a[i].error == b[i].error);
      CHECK(a[i].value.has_value() == b[i].value.has_value());
      if (a[i].value && b[i].value) {
        CHECK(a[i].value->total == b[i].value->total);
        CHECK(a[i].value->route == b[i].value->route);
      }
    }
    // -1.2, -1.1 and -1.0 lie outside the region.
    CHECK(a[0].error == ErrorCode::OutOfRegularizationRegion);
    CHECK(a[2].error == ErrorCode::OutOfRegularizationRegion);
    CHECK(a[3].value.has_value());
    CHECK(parallel_threads() >= 1);
  }
}
