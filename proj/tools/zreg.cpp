// zreg: command-line front end for the regularization library.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zreg/csv.hpp"
#include "zreg/fractional.hpp"
#include "zreg/grid.hpp"
#include "zreg/integer_trace.hpp"
#include "zreg/stirling.hpp"
#include "zreg/verify.hpp"
#include "zreg/zeta_fn.hpp"

namespace {

using namespace zreg;
using csv::format_double;

enum Exit { kOk = 0, kVerifyFailed = 1, kSpecError = 2, kMathError = 3 };

struct Common {
  std::string generator_path;
  std::string inv_h;  // inline alternative: "1,0,3"
  std::string out_path;
};

GeneratorSpec load(const Common& c) {
  if (!c.generator_path.empty() && !c.inv_h.empty()) {
    throw Error(ErrorCode::MalformedSpec, "give either --generator or --inv-h, not both");
  }
  if (!c.generator_path.empty()) return load_generator(c.generator_path);
  if (c.inv_h.empty()) return polynomial_generator("riemann", {1});
  std::vector<Rational> coeffs;
  std::stringstream in(c.inv_h);
  std::string item;
  while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
  return make_generator("inline", coeffs, true);
}

void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MalformedSpec, "cannot write " + c.out_path);
  out << text;
}

std::pair<unsigned, unsigned> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  auto bad = [&] { return Error(ErrorCode::MalformedSpec, "bad m range '" + text + "', expected a..b"); };
  if (dots == std::string::npos) throw bad();
  try {
    std::size_t used = 0;
    const std::string lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
    const long lo = std::stol(lo_s, &used);
    if (used != lo_s.size()) throw bad();
    const long hi = std::stol(hi_s, &used);
    if (used != hi_s.size()) throw bad();
    if (lo < 0 || hi < lo || hi > 200) throw bad();
    return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::vector<double> parse_alpha_grid(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::MalformedSpec, "bad alpha grid '" + text + "', expected a:b:step"); };
  std::vector<double> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) throw bad();
  const auto count = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
  if (count > 1'000'000) throw bad();
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = parts[0] + static_cast<double>(i) * parts[2];
  return grid;
}

// Rounds values that are integers up to grid arithmetic noise.
double snap(double a) {
  const double r = std::round(a);
  return std::abs(a - r) < 1e-12 ? r : a;
}

int cmd_trace(const Common& c, const std::string& m_range) {
  const auto g = load(c);
  const auto [lo, hi] = parse_m_range(m_range);
  std::ostringstream out;
  csv::Writer w(out, {"m", "zeta_part", "correction", "total"});
  for (unsigned m = lo; m <= hi; ++m) {
    const auto t = trace_integer(g, m);
    w.row({std::to_string(m), t.zeta_part.get_str(), t.correction.get_str(), t.total.get_str()});
  }
  emit(c, out.str());
  return kOk;
}

int cmd_frac(const Common& c, const std::string& alpha_grid, const FracConfig& cfg) {
  const auto g = load(c);
  require_hankel(g);
  std::vector<Complex> alphas;
  for (double a : parse_alpha_grid(alpha_grid)) alphas.emplace_back(snap(a), 0.0);
  const auto results = regulator_grid_omp(g, alphas, cfg);
  std::ostringstream out;
  csv::Writer w(out, {"alpha", "re_total", "im_total", "route", "err_estimate", "crosscheck_delta"});
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.value) throw Error(*r.error, "alpha=" + format_double(alphas[i].real()) + ": " + r.message);
    const auto& v = *r.value;
    w.row({format_double(alphas[i].real()), format_double(v.total.real()), format_double(v.total.imag()),
           std::string(to_string(v.route)), format_double(v.err_estimate),
           v.crosscheck_delta >= 0.0 ? format_double(v.crosscheck_delta) : std::string()});
  }
  emit(c, out.str());
  return kOk;
}

int cmd_zeta(const Common& c, const std::string& alpha_grid, const FracConfig& cfg) {
  const auto g = load(c);
  require_hankel(g);
  std::ostringstream out;
  csv::Writer w(out, {"alpha", "re_z", "im_z"});
  for (double a : parse_alpha_grid(alpha_grid)) {
    a = snap(a);
    const Complex z = gen_zeta(g, a, cfg);
    w.row({format_double(a), format_double(z.real()), format_double(z.imag())});
  }
  emit(c, out.str());
  return kOk;
}

int cmd_product(const Common& c, double step, const FiniteConfig& cfg) {
  const auto g = load(c);
  require_hankel(g);
  const auto p = reg_product(g, step, cfg);
  std::ostringstream out;
  csv::Writer w(out, {"z_prime_0", "product", "step", "richardson_order"});
  w.row({format_double(p.z_prime_0), format_double(p.product), format_double(p.step),
         std::to_string(p.richardson_order)});
  emit(c, out.str());
  return kOk;
}

int cmd_stirling(const Common& c, Complex alpha, unsigned k_max) {
  std::ostringstream out;
  csv::Writer w(out, {"k", "re", "im", "lost_bits"});
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto s = stirling2_frac_detail(alpha, k);
    w.row({std::to_string(k), format_double(s.value.real()), format_double(s.value.imag()),
           format_double(s.lost_bits)});
  }
  emit(c, out.str());
  return kOk;
}

int cmd_branchmap(const Common& c, Complex alpha, const std::string& grid_text, double tol) {
  const auto g = load(c);
  const GridSpec spec = parse_grid_spec(grid_text);
  const ComplexGrid grid = branch_map(g, alpha, spec, tol);
  std::ostringstream out;
  csv::Writer w(out, {"re", "im", "abs", "arg", "defined"});
  for (std::size_t iy = 0; iy < spec.ny; ++iy) {
    for (std::size_t ix = 0; ix < spec.nx; ++ix) {
      const auto& v = grid.at(ix, iy);
      const std::string re = format_double(spec.re_at(ix)), im = format_double(spec.im_at(iy));
      if (v) {
        w.row({re, im, format_double(std::abs(*v)), format_double(std::arg(*v)), "1"});
      } else {
        w.row({re, im, "nan", "nan", "0"});
      }
    }
  }
  emit(c, out.str());
  return kOk;
}

int cmd_verify(const Common& c, int sabotage_index, bool no_frac) {
  VerifyOptions opts;
  if (!c.generator_path.empty() || !c.inv_h.empty()) opts.generator = load(c);
  opts.run_fractional = !no_frac;
  if (sabotage_index >= 0) {
    auto values = BernoulliTable(32).values();
    if (static_cast<std::size_t>(sabotage_index) >= values.size()) {
      throw Error(ErrorCode::MalformedSpec, "sabotage index past the table");
    }
    values[static_cast<std::size_t>(sabotage_index)] += Rational(1, 7);
    opts.bernoulli_override = BernoulliTable(std::move(values));
  }
  const auto report = run_verify(opts);
  emit(c, report.to_json());
  for (const auto& s : report.suites) {
    std::cerr << s.name << ": " << to_string(s.status);
    if (!s.detail.empty()) std::cerr << " (" << s.detail << ")";
    std::cerr << '\n';
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_fermion(const Common& c, double planck_h, double mass, double box_length) {
  if (!(planck_h > 0.0) || !(mass > 0.0) || !(box_length > 0.0)) {
    throw Error(ErrorCode::MalformedSpec, "physical parameters must be positive");
  }
  const auto g = load(c);
  const Rational sum_n2 = trace_integer(g, 2).total;
  const double k = 48.0 * planck_h * planck_h / (mass * std::pow(box_length, 4)) * sum_n2.get_d();
  const char* kind = sgn(sum_n2) == 0 ? "zero" : (sgn(sum_n2) > 0 ? "restoring" : "repulsive");
  std::ostringstream out;
  csv::Writer w(out, {"generator", "sum_n2", "stiffness", "force"});
  w.row({g.name, sum_n2.get_str(), format_double(k), kind});
  emit(c, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized zeta regularization of sum n^alpha"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_generator = true) {
    if (with_generator) {
      sub->add_option("--generator", common.generator_path, "Generator JSON file")->check(CLI::ExistingFile);
      sub->add_option("--inv-h", common.inv_h, "Inline 1/h coefficients, e.g. 1,0,3");
    }
    sub->add_option("--out", common.out_path, "Output file (default stdout)");
  };

  std::string m_range = "0..3";
  auto* trace = app.add_subcommand("trace", "Exact integer traces R(m)");
  add_common(trace);
  trace->add_option("--m-range", m_range, "a..b");

  std::string alpha_grid;
  FracConfig frac_cfg;
  double tol = 1e-11;
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--rho", frac_cfg.contour.rho, "Circle radius for the contour route");
    sub->add_option("--tol", tol, "Absolute quadrature tolerance");
  };

  auto* frac = app.add_subcommand("frac", "Fractional regulator over an alpha grid");
  add_common(frac);
  add_numeric(frac);
  frac->add_option("--alpha-grid", alpha_grid, "a:b:step")->required();
  frac->add_flag("--crosscheck", frac_cfg.crosscheck, "Also run the circle+ray route");
  frac->add_flag("--use-limit", frac_cfg.use_limit, "Near integers, extrapolate the fractional route");

  auto* zeta = app.add_subcommand("zeta", "Generalized zeta function Z(a) = R(-a)");
  add_common(zeta);
  add_numeric(zeta);
  zeta->add_option("--alpha-grid", alpha_grid, "a:b:step")->required();

  double step = 1e-3;
  auto* product = app.add_subcommand("product", "Regularized product exp(-Z'(0))");
  add_common(product);
  add_numeric(product);
  product->add_option("--step", step, "Finite-difference step");

  double alpha_re = 0.5, alpha_im = 0.0;
  unsigned k_max = 10;
  auto* stirling = app.add_subcommand("stirling", "Complex-order Stirling numbers {alpha, k}");
  add_common(stirling, false);
  stirling->add_option("--alpha", alpha_re, "Re alpha");
  stirling->add_option("--alpha-im", alpha_im, "Im alpha");
  stirling->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(1u, kStirlingMaxK));

  std::string grid_text = "-3:3:-3:3:121:121";
  double map_tol = kBranchMapTol;
  auto* branchmap = app.add_subcommand("branchmap", "Li_{-alpha}(exp(-Phi(z))) on a grid");
  add_common(branchmap);
  branchmap->add_option("--alpha", alpha_re, "Re alpha");
  branchmap->add_option("--alpha-im", alpha_im, "Im alpha");
  branchmap->add_option("--grid", grid_text, "re0:re1:im0:im1:nx:ny");
  branchmap->add_option("--tol", map_tol, "Series tail bound");

  int sabotage = -1;
  bool no_frac = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  add_common(verify);
  verify->add_option("--sabotage-bernoulli", sabotage, "Corrupt B_k before the expansion check");
  verify->add_flag("--no-frac", no_frac, "Skip the fractional suites");

  double planck_h = 1.0, mass = 1.0, box_length = 1.0;
  auto* fermion = app.add_subcommand("fermion", "Restoring force of the fermion box");
  add_common(fermion);
  fermion->add_option("--planck-h", planck_h, "Planck constant");
  fermion->add_option("--mass", mass, "Particle mass");
  fermion->add_option("--box-length", box_length, "Box length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSpecError;
  }

  frac_cfg.finite.tol = tol;
  frac_cfg.contour.circle_tol = tol;
  frac_cfg.contour.ray_tol = tol;

  try {
    if (*trace) return cmd_trace(common, m_range);
    if (*frac) return cmd_frac(common, alpha_grid, frac_cfg);
    if (*zeta) return cmd_zeta(common, alpha_grid, frac_cfg);
    if (*product) return cmd_product(common, step, frac_cfg.finite);
    if (*stirling) return cmd_stirling(common, {alpha_re, alpha_im}, k_max);
    if (*branchmap) return cmd_branchmap(common, {alpha_re, alpha_im}, grid_text, map_tol);
    if (*verify) return cmd_verify(common, sabotage, no_frac);
    if (*fermion) return cmd_fermion(common, planck_h, mass, box_length);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_spec_error(e.code()) ? kSpecError : kMathError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMathError;
  }
  return kOk;
}
