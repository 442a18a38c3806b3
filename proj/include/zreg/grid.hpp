#pragma once

// Batch kernels over independent grid points. Each has a serial reference and
// an OpenMP version; both produce identical results cell for cell.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zreg/fractional.hpp"

namespace zreg {

struct GridSpec {
  double re0 = -3.0, re1 = 3.0;
  double im0 = -3.0, im1 = 3.0;
  std::size_t nx = 121, ny = 121;

  double re_at(std::size_t ix) const {
    return nx == 1 ? re0 : re0 + (re1 - re0) * static_cast<double>(ix) / static_cast<double>(nx - 1);
  }
  double im_at(std::size_t iy) const {
    return ny == 1 ? im0 : im0 + (im1 - im0) * static_cast<double>(iy) / static_cast<double>(ny - 1);
  }
};

// "re0:re1:im0:im1:nx:ny"
GridSpec parse_grid_spec(std::string_view text);

struct ComplexGrid {
  GridSpec spec;
  // Row-major: rows run over im, columns over re. Empty = undefined cell.
  std::vector<std::optional<Complex>> values;

  const std::optional<Complex>& at(std::size_t ix, std::size_t iy) const { return values[iy * spec.nx + ix]; }
  std::size_t defined_count() const;
};

inline constexpr double kBranchMapTol = 1e-10;

// One cell: Li_{-a}(e^{-Phi(z)}) where |e^{-Phi(z)}| < 1 - 1e-9 and the series
// converges within the term cap; undefined elsewhere.
std::optional<Complex> branch_map_cell(const GeneratorSpec& g, Complex alpha, Complex z, double tol = kBranchMapTol);

ComplexGrid branch_map_serial(const GeneratorSpec& g, Complex alpha, const GridSpec& spec, double tol = kBranchMapTol);
ComplexGrid branch_map_omp(const GeneratorSpec& g, Complex alpha, const GridSpec& spec, double tol = kBranchMapTol);

inline ComplexGrid branch_map(const GeneratorSpec& g, Complex alpha, const GridSpec& spec, double tol = kBranchMapTol) {
  return branch_map_omp(g, alpha, spec, tol);
}

struct RegulatorOutcome {
  std::optional<RegulatorValue> value;
  std::optional<ErrorCode> error;
  std::string message;
};

std::vector<RegulatorOutcome> regulator_grid_serial(const GeneratorSpec& g, const std::vector<Complex>& alphas,
                                                    const FracConfig& cfg = {});
std::vector<RegulatorOutcome> regulator_grid_omp(const GeneratorSpec& g, const std::vector<Complex>& alphas,
                                                 const FracConfig& cfg = {});

// Threads the OpenMP kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace zreg
