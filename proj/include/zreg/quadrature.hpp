#pragma once

#include <cstddef>
#include <functional>

#include "zreg/series.hpp"

namespace zreg {

struct QuadOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-14;
  std::size_t max_intervals = 2000;
};

struct QuadResult {
  Complex value;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]; the interval with the
// largest |K15 - G7| is bisected until the summed estimate meets
// max(abs_tol, rel_tol * |I|). Throws QuadratureFailure past max_intervals.
QuadResult integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                        const QuadOptions& opts = {});

}  // namespace zreg
