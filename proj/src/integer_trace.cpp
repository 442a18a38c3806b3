#include "zreg/integer_trace.hpp"

#include <string>

#include "zreg/special.hpp"

namespace zreg {

namespace {

Rational factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

void require_terms(const GeneratorSpec& g, unsigned m) {
  const std::size_t needed = trace_dependency_index(m);
  if (g.inv_h.order() < needed || (!g.is_polynomial && g.known_terms <= needed)) {
    throw Error(ErrorCode::TruncationTooLow,
                "trace of order " + std::to_string(m) + " needs inv_h through z^" + std::to_string(needed));
  }
}

// Laurent series sum_{k >= lowest} c[k - lowest] z^k, truncated at `top`.
struct Laurent {
  int lowest = 0;
  std::vector<Rational> c;

  int top() const { return lowest + static_cast<int>(c.size()) - 1; }
  Rational at(int k) const {
    if (k < lowest || k > top()) return Rational(0);
    return c[static_cast<std::size_t>(k - lowest)];
  }
};

Laurent multiply(const Laurent& a, const Laurent& b, int top) {
  Laurent r;
  r.lowest = a.lowest + b.lowest;
  r.c.assign(static_cast<std::size_t>(std::max(0, top - r.lowest + 1)), Rational(0));
  for (int i = a.lowest; i <= a.top(); ++i) {
    for (int j = b.lowest; j <= b.top() && i + j <= top; ++j) {
      r.c[static_cast<std::size_t>(i + j - r.lowest)] += a.at(i) * b.at(j);
    }
  }
  return r;
}

}  // namespace

TraceValue trace_integer(const GeneratorSpec& g, unsigned m) {
  require_terms(g, m);
  const std::size_t order = m + 1;
  const PhiData d = build_phi(g, order);
  const PowerSeries<Rational> inv_phi_pow = pow_int(reciprocal(d.phi_reduced), static_cast<long>(m + 1));

  TraceValue v;
  v.m = m;
  v.zeta_part = zeta_neg_int(m);
  v.correction = factorial(m) * inv_phi_pow[order];
  v.correction.canonicalize();
  v.total = v.zeta_part + v.correction;
  v.total.canonicalize();
  return v;
}

Rational trace_closed_form(const GeneratorSpec& g, unsigned m) {
  if (m > 3) throw Error(ErrorCode::UnsupportedOrder, "closed-form identities stop at m = 3");
  require_terms(g, m);
  const PowerSeries<Rational> h = reciprocal(g.inv_h.truncated(4));
  // h^{(k)}(0) = k! [z^k] h
  const Rational h0 = h[0];
  const Rational h1 = h[1];
  const Rational h2 = Rational(2) * h[2];
  const Rational h3 = Rational(6) * h[3];
  const Rational h4 = Rational(24) * h[4];

  Rational correction;
  switch (m) {
    case 0:
      correction = h1 / 2;
      break;
    case 1:
      correction = (4 * h0 * h2 + h1 * h1) / 12;
      break;
    case 2:
      correction = (h3 * h0 * h0 + 2 * h0 * h1 * h2) / 4;
      break;
    default:
      correction = (24 * h0 * h0 * h0 * h4 + 56 * h0 * h0 * h2 * h2 - h1 * h1 * h1 * h1 +
                    108 * h0 * h0 * h3 * h1 + 64 * h0 * h1 * h1 * h2) /
                   120;
      break;
  }
  Rational total = zeta_neg_int(m) + correction;
  total.canonicalize();
  return total;
}

Rational trace_laurent_oracle(const GeneratorSpec& g, unsigned m) {
  require_terms(g, m);
  const int top = static_cast<int>(m) + 1;

  // Phi coefficients Phi_1..Phi_{top+1}, straight from termwise integration.
  std::vector<Rational> phi(static_cast<std::size_t>(top) + 2, Rational(0));
  for (int i = 1; i <= top + 1; ++i) {
    phi[static_cast<std::size_t>(i)] = g.inv_h.coeff(static_cast<std::size_t>(i - 1)) / Rational(i);
  }

  // 1/Phi = sum_{k >= -1} l_k z^k from Phi * (1/Phi) = 1.
  Laurent inv;
  inv.lowest = -1;
  inv.c.assign(static_cast<std::size_t>(top + 2), Rational(0));
  for (int k = -1; k <= top; ++k) {
    Rational acc = (k == -1) ? Rational(1) : Rational(0);
    for (int i = 2; i <= k + 2 && i <= top + 1; ++i) acc -= phi[static_cast<std::size_t>(i)] * inv.at(k + 1 - i);
    inv.c[static_cast<std::size_t>(k + 1)] = acc / phi[1];
  }

  // Phi^{-(m+1)} by repeated multiplication. With j factors left to apply, each
  // as low as z^{-1}, terms up to z^j still reach the constant term.
  Laurent power = inv;
  for (unsigned i = 0; i < m; ++i) power = multiply(power, inv, static_cast<int>(m - 1 - i));

  Rational total = zeta_neg_int(m) + factorial(m) * power.at(0);
  total.canonicalize();
  return total;
}

}  // namespace zreg
