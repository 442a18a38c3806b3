#pragma once

// Self-check: runs the library's invariant suites and reports per suite.

#include <optional>
#include <string>
#include <vector>

#include "zreg/generator.hpp"
#include "zreg/special.hpp"

namespace zreg {

enum class SuiteStatus { pass, fail, skipped };

const char* to_string(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or why the suite was skipped
};

struct VerifyOptions {
  // Extra generator checked alongside the built-in ones.
  std::optional<GeneratorSpec> generator;
  // Replaces the Bernoulli table in the expansion check.
  std::optional<BernoulliTable> bernoulli_override;
  bool run_fractional = true;
  unsigned seed = 20240611;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool ok() const;
  const SuiteResult* find(const std::string& name) const;
  // {"ok": bool, "suites": [{"name", "status", "checks", "failures", "detail"}]}
  std::string to_json() const;
};

VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace zreg
