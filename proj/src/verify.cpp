#include "zreg/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "zreg/fractional.hpp"
#include "zreg/hankel.hpp"
#include "zreg/integer_trace.hpp"
#include "zreg/stirling.hpp"
#include "zreg/zeta_fn.hpp"

namespace zreg {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.detail.empty()) r_.detail = what;
  }

  void close(double got, double want, double tol, const std::string& what) {
    const double diff = std::abs(got - want);
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": got " << got << ", want " << want << " (|diff| " << diff << " > " << tol << ")";
    check(diff <= tol, msg.str());
  }

  void close(Complex got, Complex want, double tol, const std::string& what) {
    const double diff = std::abs(got - want);
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": got " << got << ", want " << want << " (|diff| " << diff << " > " << tol << ")";
    check(diff <= tol, msg.str());
  }

  SuiteResult finish() {
    r_.status = r_.failures == 0 ? SuiteStatus::pass : SuiteStatus::fail;
    return r_;
  }

  SuiteResult skip(std::string reason) {
    r_.status = SuiteStatus::skipped;
    r_.detail = std::move(reason);
    return r_;
  }

 private:
  SuiteResult r_;
};

SuiteResult guarded(const std::string& name, const std::function<SuiteResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    SuiteResult r;
    r.name = name;
    r.status = SuiteStatus::fail;
    r.failures = 1;
    r.detail = std::string("unexpected error: ") + e.what();
    return r;
  }
}

Rational random_rational(std::mt19937& rng, int span) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

PowerSeries<Rational> random_series(std::mt19937& rng, std::size_t order) {
  PowerSeries<Rational> a(order);
  for (std::size_t i = 0; i <= order; ++i) a[i] = random_rational(rng, 9);
  while (sgn(a[0]) == 0) a[0] = random_rational(rng, 9);
  return a;
}

GeneratorSpec random_generator(std::mt19937& rng, int index) {
  std::uniform_int_distribution<long> p0(1, 5);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 4);
  std::vector<long> c{p0(rng)};
  const int d = deg(rng);
  for (int i = 0; i < d; ++i) c.push_back(coef(rng));
  return polynomial_generator("random" + std::to_string(index), c);
}

std::vector<GeneratorSpec> builtin_generators() {
  return {polynomial_generator("riemann", {1}), polynomial_generator("cubic", {1, 0, 3}),
          polynomial_generator("quintic", {1, 0, 0, 0, 5})};
}

const std::vector<double> kAlphaGrid = {-0.5, -0.1, 0.3, 0.5, 1.3, 1.7, 2.5};

SuiteResult series_suite(std::mt19937& rng) {
  Suite s("series");
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_series(rng, 32);
    s.check(a * reciprocal(a) == PowerSeries<Rational>::constant(Rational(1), 32), "a * (1/a) != 1");
    s.check(derivative(integrate(a)) == a, "d/dz of the antiderivative differs");
  }
  for (int trial = 0; trial < 4; ++trial) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PowerSeries<Complex> a(16);
    for (std::size_t i = 0; i <= 16; ++i) a[i] = Complex(u(rng), u(rng));
    a[0] += 2.0;
    for (long k = 1; k <= 5; ++k) {
      const auto p = powc(a, Complex(static_cast<double>(k), 0.0));
      const auto q = pow_int(a, k);
      double worst = 0.0;
      for (std::size_t i = 0; i <= 16; ++i) worst = std::max(worst, std::abs(p[i] - q[i]) / (1.0 + std::abs(q[i])));
      s.check(worst < 1e-10, "powc(a, " + std::to_string(k) + ") differs from repeated products");
    }
  }
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 12;
    std::vector<Rational> f(7), g(7);
    for (auto& c : f) c = random_rational(rng, 5);
    for (std::size_t i = 1; i < g.size(); ++i) g[i] = random_rational(rng, 5);
    // Untruncated substitution, cut at n afterwards.
    std::vector<Rational> acc(1, Rational(0)), power(1, Rational(1));
    for (const auto& fi : f) {
      if (acc.size() < power.size()) acc.resize(power.size(), Rational(0));
      for (std::size_t i = 0; i < power.size(); ++i) acc[i] += fi * power[i];
      std::vector<Rational> next(power.size() + g.size() - 1, Rational(0));
      for (std::size_t i = 0; i < power.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) next[i + j] += power[i] * g[j];
      power = std::move(next);
    }
    const PowerSeries<Rational> want(acc, n);
    s.check(compose(PowerSeries<Rational>(f, n), PowerSeries<Rational>(g, n)) == want,
            "composition differs from direct substitution");
  }
  return s.finish();
}

SuiteResult bernoulli_suite(const BernoulliTable& table) {
  Suite s("bernoulli");
  const std::size_t kmax = 20;
  s.check(table.size() > kmax, "table shorter than B_20");
  if (table.size() <= kmax) return s.finish();
  // (e^t - 1)/t = sum t^k/(k+1)!
  PowerSeries<Rational> q(kmax);
  mpz_class fact = 1;
  for (std::size_t k = 0; k <= kmax; ++k) {
    fact *= static_cast<unsigned long>(k + 1);
    q[k] = Rational(1) / Rational(fact);
  }
  const auto inv = reciprocal(q);
  fact = 1;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    Rational want = table[k] / Rational(fact);
    want.canonicalize();
    s.check(inv[k] == want, "coefficient " + std::to_string(k) + " of t/(e^t - 1) disagrees with B_" +
                                std::to_string(k) + "/" + std::to_string(k) + "!");
  }
  for (std::size_t k = 3; k <= kmax; k += 2) s.check(sgn(table[k]) == 0, "odd Bernoulli number nonzero");
  return s.finish();
}

SuiteResult eulerian_suite() {
  Suite s("eulerian");
  const EulerianTable e(12);
  mpz_class fact = 1;
  for (std::size_t m = 1; m <= 12; ++m) {
    fact *= static_cast<unsigned long>(m);
    mpz_class sum = 0;
    for (std::size_t k = 0; k < m; ++k) {
      sum += e(m, k);
      s.check(e(m, k) == e(m, m - 1 - k), "Eulerian row " + std::to_string(m) + " not symmetric");
    }
    s.check(sum == fact, "Eulerian row " + std::to_string(m) + " does not sum to m!");
    s.check(e(m, 0) == 1, "<m,0> != 1");
  }
  return s.finish();
}

SuiteResult special_suite(std::mt19937& rng) {
  Suite s("special");
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    Complex z(u(rng), u(rng));
    if (std::abs(z) > 10.0) z *= 10.0 / std::abs(z) * 0.999;
    const Complex lhs = gamma_c(z + 1.0);
    const Complex rhs = z * gamma_c(z);
    s.check(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs), "Gamma recurrence fails");
  }
  for (unsigned m = 0; m <= 10; ++m) {
    s.close(zeta_c(-static_cast<double>(m)), Complex(zeta_neg_int(m).get_d(), 0.0), 1e-12,
            "zeta(-" + std::to_string(m) + ")");
  }
  for (unsigned m = 0; m <= 4; ++m) {
    for (double x : {0.1, 0.5, 0.9}) {
      // Relative: Li_{-4}(0.9) is near 2e6, where one ulp already exceeds 1e-10.
      const Complex want = polylog_neg_int(m, x);
      s.close(polylog_series(-static_cast<double>(m), x), want, 1e-10 * std::max(1.0, std::abs(want)),
              "Li_{-" + std::to_string(m) + "} series vs closed form");
    }
  }
  return s.finish();
}

void generator_checks(Suite& s, const GeneratorSpec& g) {
  const PhiData d = build_phi(g, 16);
  s.check(derivative(d.phi_series).truncated(16) == g.inv_h.truncated(16), g.name + ": Phi' != p");
  s.check(d.phi_reduced[0] == g.inv_h[0], g.name + ": phi(0) != p(0)");
  s.check(sgn(d.phi_series[0]) == 0 && d.phi_series[1] == g.inv_h[0], g.name + ": Phi lacks a simple zero");
  bool even = true;
  for (std::size_t i = 1; i < g.known_terms; i += 2) even = even && sgn(g.inv_h[i]) == 0;
  if (even && g.is_polynomial) {
    for (std::size_t i = 0; i < d.phi_poly_coeffs.size(); i += 2) {
      s.check(sgn(d.phi_poly_coeffs[i]) == 0, g.name + ": Phi not odd");
    }
    for (double x : {0.3, 1.0, 2.0, 7.5}) {
      s.check(neg_phi_neg(g, x) == phi_eval_real(g, x), g.name + ": -Phi(-x) != Phi(x) for odd Phi");
    }
  }
}

SuiteResult generator_suite(const VerifyOptions& opts) {
  Suite s("generator");
  for (const auto& g : builtin_generators()) generator_checks(s, g);
  generator_checks(s, polynomial_generator("affine", {1, 2}));
  if (opts.generator) generator_checks(s, *opts.generator);
  s.check(validate_hankel(polynomial_generator("riemann", {1})).passed, "[1] should be Hankel type");
  s.check(validate_hankel(polynomial_generator("cubic", {1, 0, 3})).passed, "[1,0,3] should be Hankel type");
  s.check(!validate_hankel(polynomial_generator("affine", {1, 2})).passed, "[1,2] should fail Hankel validation");
  return s.finish();
}

void trace_checks(Suite& s, const GeneratorSpec& g) {
  for (unsigned m = 0; m <= 3; ++m) {
    const Rational a = trace_integer(g, m).total;
    s.check(a == trace_closed_form(g, m), g.name + ": closed form differs at m=" + std::to_string(m));
    s.check(a == trace_laurent_oracle(g, m), g.name + ": Laurent oracle differs at m=" + std::to_string(m));
  }
}

SuiteResult trace_suite(std::mt19937& rng, const VerifyOptions& opts) {
  Suite s("trace");
  for (int i = 0; i < 50; ++i) trace_checks(s, random_generator(rng, i));
  if (opts.generator) trace_checks(s, *opts.generator);

  // Perturbing coefficients past index m+1 leaves R(m) alone.
  for (unsigned m = 0; m <= 4; ++m) {
    std::vector<Rational> base{Rational(2), Rational(-1), Rational(3), Rational(1, 2), Rational(-4), Rational(5),
                               Rational(7)};
    const auto g = make_generator("base", base, true);
    auto changed = base;
    for (std::size_t i = trace_dependency_index(m) + 1; i < changed.size(); ++i) changed[i] += Rational(11, 3);
    const auto h = make_generator("perturbed", changed, true);
    s.check(trace_integer(g, m).total == trace_integer(h, m).total,
            "trace depends on coefficients past index m+1 at m=" + std::to_string(m));
  }
  // Odd Phi: even traces are pure zeta values.
  for (const auto& g : {polynomial_generator("cubic", {1, 0, 3}), polynomial_generator("even", {2, 0, -1, 0, 4})}) {
    for (unsigned m = 0; m <= 6; m += 2) {
      s.check(sgn(trace_integer(g, m).correction) == 0, g.name + ": even-m correction nonzero for odd Phi");
    }
  }
  const auto cubic = polynomial_generator("cubic", {1, 0, 3});
  s.check(trace_integer(cubic, 1).total == Rational(-25, 12), "[1,0,3]: R(1) != -25/12");
  s.check(trace_integer(cubic, 3).total == Rational(7201, 120), "[1,0,3]: R(3) != 1/120 + 60");
  s.check(trace_integer(polynomial_generator("a", {1, 2}), 2).total == Rational(-20), "[1,2]: R(2) != -20");
  s.check(trace_integer(polynomial_generator("b", {1, 2, 3}), 2).total == Rational(4), "[1,2,3]: R(2) != 4");
  return s.finish();
}

// Generators for the numeric suites, or a skip reason.
std::optional<std::string> numeric_generators(const VerifyOptions& opts, std::vector<GeneratorSpec>& out) {
  if (!opts.generator) {
    out = builtin_generators();
    return std::nullopt;
  }
  const auto& g = *opts.generator;
  if (!g.is_polynomial) return g.name + ": fractional routes need a polynomial generator";
  const auto v = validate_hankel(g);
  if (!v.passed) return g.name + ": Hankel validation failed (" + v.reason + ")";
  out = {g};
  return std::nullopt;
}

SuiteResult frac_suite(const VerifyOptions& opts) {
  Suite s("frac");
  if (!opts.run_fractional) return s.skip("fractional suites not requested");
  std::vector<GeneratorSpec> gens;
  if (auto why = numeric_generators(opts, gens)) return s.skip(*why);

  for (const auto& g : gens) {
    const bool riemann = g.known_terms == 1;
    for (double a : kAlphaGrid) {
      const Complex fp = frac_regulator_fp(g, a).total;
      const Complex cr = regulator_circle_ray(g, a).total;
      s.close(fp, cr, 1e-7, g.name + ": routes disagree at alpha=" + std::to_string(a));
      if (riemann) s.close(fp, zeta_c(-a), 1e-8, g.name + ": Riemann reduction at alpha=" + std::to_string(a));
    }
    for (unsigned m = 1; m <= 3; ++m) {
      const Complex lim = integer_limit(g, m).total;
      s.close(lim, Complex(trace_integer(g, m).total.get_d(), 0.0), 1e-5,
              g.name + ": limit at alpha -> " + std::to_string(m));
    }
  }
  return s.finish();
}

SuiteResult hankel_suite(const VerifyOptions& opts) {
  Suite s("hankel");
  if (!opts.run_fractional) return s.skip("fractional suites not requested");
  std::vector<GeneratorSpec> gens;
  if (auto why = numeric_generators(opts, gens)) return s.skip(*why);

  ContourConfig small, large;
  small.rho = 0.2;
  large.rho = 0.3;
  for (const auto& g : gens) {
    for (double a : kAlphaGrid) {
      const Complex r2 = regulator_circle_ray(g, a, small).total;
      const Complex r3 = regulator_circle_ray(g, a, large).total;
      s.close(r2, r3, 1e-9, g.name + ": rho-dependence at alpha=" + std::to_string(a));
      s.check(std::abs(r2.imag()) <= 1e-10, g.name + ": imaginary part for real alpha");
    }
    for (unsigned m = 0; m <= 3; ++m) {
      s.close(circle_integral(g, static_cast<double>(m)), Complex(trace_integer(g, m).correction.get_d(), 0.0), 1e-9,
              g.name + ": circle term at integer m=" + std::to_string(m));
    }
  }
  return s.finish();
}

SuiteResult stirling_suite() {
  Suite s("stirling");
  // S(m, k) from S(m, k) = k S(m-1, k) + S(m-1, k-1).
  std::vector<std::vector<double>> table(11, std::vector<double>(11, 0.0));
  table[0][0] = 1.0;
  for (std::size_t m = 1; m <= 10; ++m)
    for (std::size_t k = 1; k <= m; ++k) table[m][k] = static_cast<double>(k) * table[m - 1][k] + table[m - 1][k - 1];
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned k = 1; k <= m; ++k)
      s.close(stirling2_frac(static_cast<double>(m), k), Complex(table[m][k], 0.0), 1e-12 * std::max(1.0, table[m][k]),
              "{" + std::to_string(m) + "," + std::to_string(k) + "}");
  for (Complex a : {Complex(0.5), Complex(1.5), Complex(-0.3), Complex(2.0, 0.5)}) {
    for (unsigned n = 1; n <= 8; ++n) s.check(eigen_check(a, n) < 1e-10, "eigen identity at n=" + std::to_string(n));
  }
  return s.finish();
}

SuiteResult zeta_suite(const VerifyOptions& opts) {
  Suite s("zeta");
  if (!opts.run_fractional) return s.skip("fractional suites not requested");
  std::vector<GeneratorSpec> gens;
  if (auto why = numeric_generators(opts, gens)) return s.skip(*why);

  const auto riemann = polynomial_generator("riemann", {1});
  for (double a : {-2.5, -1.3, 0.4, 0.9}) {
    s.close(gen_zeta(riemann, a), zeta_c(a), 1e-8, "Z(" + std::to_string(a) + ") for h=1");
  }
  s.close(gen_zeta(riemann, 0.0), Complex(-0.5, 0.0), 1e-15, "Z(0) for h=1");
  for (const auto& g : gens) {
    const double coarse = reg_product(g, 1e-3).product;
    const double fine = reg_product(g, 5e-4).product;
    s.close(fine, coarse, 1e-7, g.name + ": product under step halving");
    s.check(coarse > 0.0, g.name + ": product not positive");
  }
  return s.finish();
}

}  // namespace

const char* to_string(SuiteStatus st) {
  switch (st) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::ok() const {
  for (const auto& s : suites)
    if (s.status == SuiteStatus::fail) return false;
  return true;
}

const SuiteResult* VerifyReport::find(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name) return &s;
  return nullptr;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    j["suites"].push_back({{"name", s.name},
                           {"status", to_string(s.status)},
                           {"checks", s.checks},
                           {"failures", s.failures},
                           {"detail", s.detail}});
  }
  return j.dump(2) + "\n";
}

VerifyReport run_verify(const VerifyOptions& opts) {
  std::mt19937 rng(opts.seed);
  const BernoulliTable table = opts.bernoulli_override ? *opts.bernoulli_override : BernoulliTable(32);

  VerifyReport r;
  r.suites.push_back(guarded("series", [&] { return series_suite(rng); }));
  r.suites.push_back(guarded("bernoulli", [&] { return bernoulli_suite(table); }));
  r.suites.push_back(guarded("eulerian", [&] { return eulerian_suite(); }));
  r.suites.push_back(guarded("special", [&] { return special_suite(rng); }));
  r.suites.push_back(guarded("generator", [&] { return generator_suite(opts); }));
  r.suites.push_back(guarded("trace", [&] { return trace_suite(rng, opts); }));
  r.suites.push_back(guarded("frac", [&] { return frac_suite(opts); }));
  r.suites.push_back(guarded("hankel", [&] { return hankel_suite(opts); }));
  r.suites.push_back(guarded("stirling", [&] { return stirling_suite(); }));
  r.suites.push_back(guarded("zeta", [&] { return zeta_suite(opts); }));
  return r;
}

}  // namespace zreg
