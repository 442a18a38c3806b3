#include "doctest.h"
#include "json.hpp"
#include "zreg/verify.hpp"

using namespace zreg;

TEST_SUITE("verify") {
  TEST_CASE("default run passes") {
    const auto r = run_verify();
    CHECK(r.ok());
    for (const auto& s : r.suites) {
      INFO(s.name << ": " << s.detail);
      CHECK(s.status == SuiteStatus::pass);
      CHECK(s.checks > 0);
      CHECK(s.failures == 0);
    }
    for (const char* name : {"series", "bernoulli", "eulerian", "special", "generator", "trace", "frac", "hankel",
                             "stirling", "zeta"}) {
      CHECK(r.find(name) != nullptr);
    }
    CHECK(r.find("nope") == nullptr);
  }

  TEST_CASE("a corrupted Bernoulli table is caught") {
    auto values = BernoulliTable(32).values();
    values[4] += Rational(1, 7);
    VerifyOptions opts;
    opts.bernoulli_override = BernoulliTable(std::move(values));
    opts.run_fractional = false;
    const auto r = run_verify(opts);
    CHECK_FALSE(r.ok());
    REQUIRE(r.find("bernoulli") != nullptr);
    CHECK(r.find("bernoulli")->status == SuiteStatus::fail);
    CHECK_FALSE(r.find("bernoulli")->detail.empty());
    CHECK(r.find("series")->status == SuiteStatus::pass);
  }

  TEST_CASE("non-Hankel generator skips the fractional suites") {
    VerifyOptions opts;
    opts.generator = polynomial_generator("a", {1, 2});
    const auto r = run_verify(opts);
    CHECK(r.ok());
    for (const char* name : {"frac", "hankel", "zeta"}) {
      REQUIRE(r.find(name) != nullptr);
      CHECK(r.find(name)->status == SuiteStatus::skipped);
      CHECK_FALSE(r.find(name)->detail.empty());
    }
    CHECK(r.find("trace")->status == SuiteStatus::pass);
  }

  TEST_CASE("JSON report") {
    VerifyOptions opts;
    opts.run_fractional = false;
    const auto r = run_verify(opts);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.at("ok").get<bool>() == r.ok());
    REQUIRE(j.at("suites").size() == r.suites.size());
    for (std::size_t i = 0; i < r.suites.size(); ++i) {
      const auto& s = j.at("suites")[i];
      CHECK(s.at("name").get<std::string>() == r.suites[i].name);
      CHECK(s.at("status").get<std::string>() == to_string(r.suites[i].status));
      CHECK(s.at("checks").get<std::size_t>() == r.suites[i].checks);
    }
    CHECK(r.find("frac")->status == SuiteStatus::skipped);
  }
}
