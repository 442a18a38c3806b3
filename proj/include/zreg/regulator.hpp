#pragma once

#include <string_view>

#include "zreg/series.hpp"

namespace zreg {

enum class Route { fp_mellin, circle_ray, integer_formula, integer_limit };

std::string_view to_string(Route route);

// R_L(alpha) = zeta(-alpha) + correction.
struct RegulatorValue {
  Complex alpha;
  Complex zeta_part;
  Complex correction;
  Complex total;
  Route route = Route::fp_mellin;
  double err_estimate = 0.0;
  // |this - other route|, when a cross-check ran; negative otherwise.
  double crosscheck_delta = -1.0;
};

}  // namespace zreg
