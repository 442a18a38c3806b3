#pragma once

// Regularized integer traces R_L(m) = sum n^m = zeta(-m) + correction(h).

#include "zreg/generator.hpp"

namespace zreg {

struct TraceValue {
  unsigned m = 0;
  Rational zeta_part;
  Rational correction;
  Rational total;
};

/// correction = m! [z^{m+1}] phi(z)^{-(m+1)}, exact.
TraceValue trace_integer(const GeneratorSpec& g, unsigned m);

/// The explicit identities in terms of h(0), h'(0), ..., h^{(m+1)}(0); m <= 3.
Rational trace_closed_form(const GeneratorSpec& g, unsigned m);

/// Constant term of m! Phi(z)^{-m-1} + zeta(-m), through a separate Laurent
/// inversion of Phi itself.
Rational trace_laurent_oracle(const GeneratorSpec& g, unsigned m);

// Highest inv_h coefficient index that R_L(m) depends on.
inline constexpr unsigned trace_dependency_index(unsigned m) { return m + 1; }

}  // namespace zreg
