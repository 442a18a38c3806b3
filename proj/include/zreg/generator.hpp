#pragma once

// Generators L = -h(t) d/dt, described by p(t) = 1/h(t) around t = 0.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zreg/series.hpp"

namespace zreg {

struct GeneratorSpec {
  std::string name;
  PowerSeries<Rational> inv_h;
  // When set, inv_h holds the complete polynomial p and Phi is known globally.
  bool is_polynomial = false;
  // Number of p-coefficients that are exact (the given list length); series-only
  // generators know nothing past this.
  std::size_t known_terms = 0;
  // Phi(t) coefficients [0, c_1, ..., c_d] in double precision, polynomial only.
  std::vector<double> phi_coeffs;

  std::size_t phi_degree() const { return phi_coeffs.empty() ? 0 : phi_coeffs.size() - 1; }
};

GeneratorSpec make_generator(std::string name, const std::vector<Rational>& inv_h,
                             bool polynomial, std::size_t order = kDefaultOrder);

// Parses "p/q" or integer strings exactly; throws MalformedSpec otherwise.
Rational parse_rational(std::string_view text);

// {"name": ..., "inv_h": ["p/q", ...], "polynomial": bool}
GeneratorSpec parse_generator_json(std::string_view json_text, std::size_t order = kDefaultOrder);
GeneratorSpec load_generator(const std::filesystem::path& path, std::size_t order = kDefaultOrder);

// Convenience for tests and the CLI: integer coefficient list, polynomial.
GeneratorSpec polynomial_generator(std::string name, const std::vector<long>& inv_h,
                                   std::size_t order = kDefaultOrder);

struct PhiData {
  PowerSeries<Rational> phi_series;   // Phi(z), zero constant term
  PowerSeries<Rational> phi_reduced;  // phi(z) = Phi(z)/z
  std::vector<Rational> phi_poly_coeffs;  // exact, polynomial generators only
};

PhiData build_phi(const GeneratorSpec& g, std::size_t order = kDefaultOrder);

double phi_eval_real(const GeneratorSpec& g, double x);
// -Phi(-x)
double neg_phi_neg(const GeneratorSpec& g, double x);
Complex phi_eval(const GeneratorSpec& g, Complex z);
// phi(z) = Phi(z)/z evaluated without the division.
Complex phi_reduced_eval(const GeneratorSpec& g, Complex z);

// Generalized spectral function 1/(e^{Phi(t)} - 1).
double gsf_eval(const GeneratorSpec& g, double t);

struct HankelGrid {
  double x_min = 1e-3;
  double x_max = 1e3;
  std::size_t points = 200;
};

struct HankelValidation {
  bool passed = false;
  double min_neg_phi = 0.0;
  double tail_exponent = 0.0;
  bool phi_increasing = false;  // Phi(x) on the positive axis
  bool h_nonincreasing = true;  // advisory only
  std::string reason;
};

HankelValidation validate_hankel(const GeneratorSpec& g, const HankelGrid& grid = {});

// Throws HankelConditionsFailed with the validation reason when it fails.
void require_hankel(const GeneratorSpec& g);

// Nonzero roots of Phi, i.e. the zeros of phi.
std::vector<Complex> phi_reduced_roots(const GeneratorSpec& g);

}  // namespace zreg
