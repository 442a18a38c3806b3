#pragma once

// Fractional regulator through the finite-part Mellin integral
//
//   R_L(a) = zeta(-a) - (1/Gamma(-a)) fp \int_0^inf x^{-a-2} phi(-x)^{-a-1} dx,
//
// valid for Re a > -1 on Hankel-type polynomial generators.

#include <cstddef>

#include "zreg/generator.hpp"
#include "zreg/hankel.hpp"
#include "zreg/regulator.hpp"

namespace zreg {

struct FiniteConfig {
  double tol = 1e-11;
  // Taylor terms used for the head [0, x_s] and the mapped tail.
  std::size_t series_order = 96;
};

struct FinitePartResult {
  Complex value;
  std::size_t subtracted_terms = 0;
  double split_point = 1.0;  // x_s: head/body boundary
  double tail_split = 1.0;   // X: body/tail boundary
  double tail_error = 0.0;   // truncated-series estimate, head plus tail
  double quad_error = 0.0;
};

/// The integral splits at x_s <= 1 <= X. On [0, x_s] the Taylor series of
/// phi(-x)^{-a-1} is integrated termwise (each x^{j-a-2} in the finite-part
/// sense), on [x_s, X] by adaptive quadrature, and on [X, inf) through x = 1/u
/// where the integrand is again u^beta times a convergent power series.
FinitePartResult finite_part_mellin(const GeneratorSpec& g, Complex alpha, const FiniteConfig& cfg = {});

RegulatorValue frac_regulator_fp(const GeneratorSpec& g, Complex alpha, const FiniteConfig& cfg = {});

/// L^a K_L(t) = sum_k k^a e^{-k Phi(t)} = Li_{-a}(e^{-Phi(t)}).
Complex frac_action_direct_sum(const GeneratorSpec& g, Complex alpha, double t, double tol = 1e-13);

struct FracConfig {
  FiniteConfig finite;
  ContourConfig contour;
  double near_integer_delta = 1e-3;
  // Near integers: Richardson limit of the fractional route instead of the exact formula.
  bool use_limit = false;
  double limit_step = 1e-2;
  bool crosscheck = false;
  double crosscheck_threshold = 1e-7;
};

/// Symmetric Richardson limit of frac_regulator_fp at alpha -> m from steps
/// eps and eps/10.
RegulatorValue integer_limit(const GeneratorSpec& g, unsigned m, const FracConfig& cfg = {});

/// Dispatcher: exact integer formula (or its limit) within delta of a
/// non-negative integer, otherwise the finite-part route, optionally checked
/// against circle+ray. Throws RouteDisagreement past the threshold.
RegulatorValue frac_regulator(const GeneratorSpec& g, Complex alpha, const FracConfig& cfg = {});

}  // namespace zreg
