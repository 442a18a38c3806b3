#pragma once

// Complex-order Stirling numbers of the second kind and the operator
// (z d/dz)^a = sum_k {a, k} z^k d^k/dz^k.

#include <cstddef>

#include "zreg/series.hpp"

namespace zreg {

inline constexpr unsigned kStirlingMaxK = 64;

struct FracStirling {
  Complex alpha;
  unsigned k = 0;
  Complex value;
  // log2(sum |terms| / |value|): bits lost to cancellation, roughly k.
  double lost_bits = 0.0;
};

/// {a, k} = (1/k!) sum_{l=1}^{k} (-1)^{k-l} C(k, l) l^a, pairwise summed.
/// k is capped at kStirlingMaxK (InvalidOrder beyond).
FracStirling stirling2_frac_detail(Complex alpha, unsigned k);
inline Complex stirling2_frac(Complex alpha, unsigned k) { return stirling2_frac_detail(alpha, k).value; }

/// Termwise action on a truncated series; on z^n the k-sum stops at n.
PowerSeries<Complex> frac_operator_apply(Complex alpha, const PowerSeries<Complex>& f);

/// |[(z D)^a z^n] - n^a|. Returns +inf if the integer coefficient-collapse
/// identity sum_{k=l}^{n} (-1)^{k-l} C(k,l) C(n,k) = [l = n] fails.
double eigen_check(Complex alpha, unsigned n);

}  // namespace zreg
