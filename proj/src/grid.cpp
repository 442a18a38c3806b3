#include "zreg/grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "zreg/special.hpp"

namespace zreg {

namespace {

template <class T>
T parse_field(std::string_view field, std::string_view whole) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::MalformedSpec, "bad grid spec '" + std::string(whole) + "'");
  }
  return value;
}

RegulatorOutcome evaluate_one(const GeneratorSpec& g, Complex alpha, const FracConfig& cfg) {
  RegulatorOutcome out;
  try {
    out.value = frac_regulator(g, alpha, cfg);
  } catch (const Error& e) {
    out.error = e.code();
    out.message = e.what();
  }
  return out;
}

}  // namespace

GridSpec parse_grid_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 6) throw Error(ErrorCode::MalformedSpec, "grid spec needs re0:re1:im0:im1:nx:ny");
  GridSpec s;
  s.re0 = parse_field<double>(parts[0], text);
  s.re1 = parse_field<double>(parts[1], text);
  s.im0 = parse_field<double>(parts[2], text);
  s.im1 = parse_field<double>(parts[3], text);
  s.nx = parse_field<std::size_t>(parts[4], text);
  s.ny = parse_field<std::size_t>(parts[5], text);
  if (s.nx == 0 || s.ny == 0) throw Error(ErrorCode::MalformedSpec, "grid must be non-empty");
  return s;
}

std::size_t ComplexGrid::defined_count() const {
  std::size_t n = 0;
  for (const auto& v : values) n += v.has_value();
  return n;
}

std::optional<Complex> branch_map_cell(const GeneratorSpec& g, Complex alpha, Complex z, double tol) {
  const Complex w = std::exp(-phi_eval(g, z));
  if (!(std::abs(w) < 1.0 - 1e-9)) return std::nullopt;
  try {
    return polylog_series(-alpha, w, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConvergenceCap) return std::nullopt;
    throw;
  }
}

ComplexGrid branch_map_serial(const GeneratorSpec& g, Complex alpha, const GridSpec& spec, double tol) {
  if (!g.is_polynomial) throw Error(ErrorCode::NotPolynomial, "branch maps need a polynomial generator");
  ComplexGrid grid{spec, std::vector<std::optional<Complex>>(spec.nx * spec.ny)};
  for (std::size_t iy = 0; iy < spec.ny; ++iy) {
    for (std::size_t ix = 0; ix < spec.nx; ++ix) {
      grid.values[iy * spec.nx + ix] = branch_map_cell(g, alpha, {spec.re_at(ix), spec.im_at(iy)}, tol);
    }
  }
  return grid;
}

ComplexGrid branch_map_omp(const GeneratorSpec& g, Complex alpha, const GridSpec& spec, double tol) {
  if (!g.is_polynomial) throw Error(ErrorCode::NotPolynomial, "branch maps need a polynomial generator");
  ComplexGrid grid{spec, std::vector<std::optional<Complex>>(spec.nx * spec.ny)};
  const auto cells = static_cast<long>(spec.nx * spec.ny);
  // Cost per cell varies wildly near |w| = 1, hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 64)
  for (long c = 0; c < cells; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    const std::size_t ix = idx % spec.nx;
    const std::size_t iy = idx / spec.nx;
    grid.values[idx] = branch_map_cell(g, alpha, {spec.re_at(ix), spec.im_at(iy)}, tol);
  }
  return grid;
}

std::vector<RegulatorOutcome> regulator_grid_serial(const GeneratorSpec& g, const std::vector<Complex>& alphas,
                                                    const FracConfig& cfg) {
  std::vector<RegulatorOutcome> out;
  out.reserve(alphas.size());
  for (const Complex& a : alphas) out.push_back(evaluate_one(g, a, cfg));
  return out;
}

std::vector<RegulatorOutcome> regulator_grid_omp(const GeneratorSpec& g, const std::vector<Complex>& alphas,
                                                 const FracConfig& cfg) {
  std::vector<RegulatorOutcome> out(alphas.size());
  const auto n = static_cast<long>(alphas.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_one(g, alphas[static_cast<std::size_t>(i)], cfg);
  }
  return out;
}

int parallel_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace zreg
