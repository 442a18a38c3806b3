#include "zreg/generator.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "zreg/roots.hpp"

namespace zreg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void require_polynomial(const GeneratorSpec& g) {
  if (!g.is_polynomial) {
    throw Error(ErrorCode::NotPolynomial, "generator '" + g.name + "' is series-only");
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::MalformedSpec, "malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  std::string canonical(text);
  if (!canonical.empty() && canonical.front() == '+') canonical.erase(0, 1);
  if (q.set_str(canonical, 10) != 0 || sgn(q.get_den()) == 0) {
    throw Error(ErrorCode::MalformedSpec, "malformed rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

GeneratorSpec make_generator(std::string name, const std::vector<Rational>& inv_h, bool polynomial,
                             std::size_t order) {
  if (inv_h.empty()) throw Error(ErrorCode::EmptySpec, "inv_h has no coefficients");
  if (sgn(inv_h.front()) <= 0) {
    throw Error(ErrorCode::NonpositiveConstant, "p(0) = 1/h(0) must be positive");
  }
  std::vector<Rational> coeffs = inv_h;
  if (polynomial) {
    while (coeffs.size() > 1 && sgn(coeffs.back()) == 0) coeffs.pop_back();
  }
  if (coeffs.size() > order + 1) order = coeffs.size() - 1;

  GeneratorSpec g;
  g.name = std::move(name);
  g.is_polynomial = polynomial;
  g.known_terms = coeffs.size();
  g.inv_h = PowerSeries<Rational>(coeffs, order);
  if (polynomial) {
    g.phi_coeffs.assign(coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Rational c = coeffs[i] / Rational(static_cast<long>(i + 1));
      g.phi_coeffs[i + 1] = c.get_d();
    }
  }
  return g;
}

GeneratorSpec polynomial_generator(std::string name, const std::vector<long>& inv_h, std::size_t order) {
  std::vector<Rational> coeffs;
  coeffs.reserve(inv_h.size());
  for (long c : inv_h) coeffs.emplace_back(c);
  return make_generator(std::move(name), coeffs, true, order);
}

GeneratorSpec parse_generator_json(std::string_view json_text, std::size_t order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedSpec, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("inv_h") || !doc["inv_h"].is_array()) {
    throw Error(ErrorCode::MalformedSpec, "generator JSON needs an 'inv_h' array");
  }
  std::vector<Rational> coeffs;
  for (const auto& item : doc["inv_h"]) {
    if (item.is_string()) {
      coeffs.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(item.get<long>());
    } else {
      throw Error(ErrorCode::MalformedSpec, "inv_h entries must be rational strings");
    }
  }
  std::string name = "unnamed";
  bool polynomial = true;
  try {
    name = doc.value("name", name);
    polynomial = doc.value("polynomial", polynomial);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::MalformedSpec, "'name' must be a string and 'polynomial' a boolean");
  }
  return make_generator(name, coeffs, polynomial, order);
}

GeneratorSpec load_generator(const std::filesystem::path& path, std::size_t order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedSpec, "cannot open generator file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_json(buf.str(), order);
}

PhiData build_phi(const GeneratorSpec& g, std::size_t order) {
  PhiData d;
  const PowerSeries<Rational> p = g.inv_h.truncated(order);
  d.phi_series = integrate(p);
  d.phi_reduced = p;
  for (std::size_t i = 0; i <= order; ++i) {
    Rational c = p[i] / Rational(static_cast<long>(i + 1));
    c.canonicalize();
    d.phi_reduced[i] = c;
  }
  if (g.is_polynomial) {
    d.phi_poly_coeffs.assign(g.known_terms + 1, Rational(0));
    for (std::size_t i = 0; i < g.known_terms; ++i) {
      Rational c = g.inv_h[i] / Rational(static_cast<long>(i + 1));
      c.canonicalize();
      d.phi_poly_coeffs[i + 1] = c;
    }
  }
  return d;
}

double phi_eval_real(const GeneratorSpec& g, double x) {
  require_polynomial(g);
  double acc = 0.0;
  for (std::size_t i = g.phi_coeffs.size(); i-- > 0;) acc = acc * x + g.phi_coeffs[i];
  return acc;
}

double neg_phi_neg(const GeneratorSpec& g, double x) { return -phi_eval_real(g, -x); }

Complex phi_eval(const GeneratorSpec& g, Complex z) {
  require_polynomial(g);
  Complex acc(0.0, 0.0);
  for (std::size_t i = g.phi_coeffs.size(); i-- > 0;) acc = acc * z + g.phi_coeffs[i];
  return acc;
}

Complex phi_reduced_eval(const GeneratorSpec& g, Complex z) {
  require_polynomial(g);
  Complex acc(0.0, 0.0);
  for (std::size_t i = g.phi_coeffs.size(); i-- > 1;) acc = acc * z + g.phi_coeffs[i];
  return acc;
}

double gsf_eval(const GeneratorSpec& g, double t) { return 1.0 / std::expm1(phi_eval_real(g, t)); }

HankelValidation validate_hankel(const GeneratorSpec& g, const HankelGrid& grid) {
  require_polynomial(g);
  HankelValidation v;
  v.min_neg_phi = std::numeric_limits<double>::infinity();
  const double log_lo = std::log(grid.x_min);
  const double step = (std::log(grid.x_max) - log_lo) / static_cast<double>(grid.points - 1);

  bool neg_increasing = true;
  bool neg_positive = true;
  v.phi_increasing = true;
  double prev_neg = -std::numeric_limits<double>::infinity();
  double prev_pos = -std::numeric_limits<double>::infinity();
  double prev_p = -std::numeric_limits<double>::infinity();
  double first_bad = 0.0;
  const PowerSeries<Complex> p_poly = to_complex(g.inv_h.truncated(g.known_terms - 1));
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = std::exp(log_lo + step * static_cast<double>(i));
    const double neg = neg_phi_neg(g, x);
    const double pos = phi_eval_real(g, x);
    v.min_neg_phi = std::min(v.min_neg_phi, neg);
    if (neg <= 0.0 && neg_positive) {
      neg_positive = false;
      first_bad = x;
    }
    if (neg <= prev_neg && neg_increasing) {
      neg_increasing = false;
      if (first_bad == 0.0) first_bad = x;
    }
    if (pos <= prev_pos || pos <= 0.0) v.phi_increasing = false;
    // h non-increasing on t > 0  <=>  p = Phi' non-decreasing.
    const double p = evaluate(p_poly, Complex(x, 0.0)).real();
    if (p < prev_p) v.h_nonincreasing = false;
    prev_neg = neg;
    prev_pos = pos;
    prev_p = p;
  }

  const double hi = grid.x_max;
  const double lo = grid.x_max / 10.0;
  const double n_hi = neg_phi_neg(g, hi);
  const double n_lo = neg_phi_neg(g, lo);
  v.tail_exponent = (n_hi > 0.0 && n_lo > 0.0) ? std::log(n_hi / n_lo) / std::log(hi / lo)
                                               : std::numeric_limits<double>::quiet_NaN();

  std::ostringstream why;
  if (!neg_positive) {
    why << "-Phi(-x) is not positive (first failure near x = " << first_bad << ")";
  } else if (!neg_increasing) {
    why << "-Phi(-x) is not strictly increasing (near x = " << first_bad << ")";
  } else if (!v.phi_increasing) {
    why << "Phi(x) is not positive and increasing for x > 0";
  } else if (!(v.tail_exponent > 0.0)) {
    why << "1/Phi(x) does not decay as x -> -infinity";
  }
  v.reason = why.str();
  v.passed = v.reason.empty();
  return v;
}

void require_hankel(const GeneratorSpec& g) {
  if (!g.is_polynomial) {
    throw Error(ErrorCode::NotPolynomial, "fractional routes need a polynomial generator");
  }
  const HankelValidation v = validate_hankel(g);
  if (!v.passed) throw Error(ErrorCode::HankelConditionsFailed, g.name + ": " + v.reason);
}

std::vector<Complex> phi_reduced_roots(const GeneratorSpec& g) {
  require_polynomial(g);
  std::vector<Complex> c(g.phi_coeffs.begin() + 1, g.phi_coeffs.end());
  return polynomial_roots(c);
}

}  // namespace zreg
