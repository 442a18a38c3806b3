#pragma once

#include <span>
#include <vector>

#include "zreg/series.hpp"

namespace zreg {

// All roots of c_0 + c_1 z + ... + c_n z^n (trailing zeros ignored), from the
// eigenvalues of the companion matrix.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

}  // namespace zreg
