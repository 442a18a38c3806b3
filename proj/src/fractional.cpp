#include "zreg/fractional.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "phi_ray.hpp"
#include "zreg/integer_trace.hpp"
#include "zreg/quadrature.hpp"
#include "zreg/special.hpp"

namespace zreg {

namespace {

void require_region(Complex alpha) {
  if (alpha.real() <= -1.0) {
    throw Error(ErrorCode::OutOfRegularizationRegion, "regulator needs Re alpha > -1");
  }
}

// sum_j c_j r^{j + shift} / (j + shift)
Complex termwise_power_integral(const PowerSeries<Complex>& c, Complex shift, double r, double* tail_est) {
  Complex acc(0.0, 0.0);
  double last = 0.0, before_last = 0.0;
  const double log_r = std::log(r);
  for (std::size_t j = 0; j <= c.order(); ++j) {
    const Complex e = static_cast<double>(j) + shift;
    const Complex term = c[j] * std::exp(e * log_r) / e;
    acc += term;
    before_last = last;
    last = std::abs(term);
  }
  if (tail_est) *tail_est = 2.0 * std::max(last, before_last);
  return acc;
}

}  // namespace

FinitePartResult finite_part_mellin(const GeneratorSpec& g, Complex alpha, const FiniteConfig& cfg) {
  require_region(alpha);
  if (detail::is_nonnegative_integer(alpha)) {
    throw Error(ErrorCode::InvalidOrder, "finite-part route is undefined at non-negative integers");
  }
  require_hankel(g);

  const std::vector<double> phi = detail::reduced_coeffs(g);
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = 0.0;
  for (const Complex& r : phi_reduced_roots(g)) {
    r_min = std::min(r_min, std::abs(r));
    r_max = std::max(r_max, std::abs(r));
  }

  FinitePartResult out;
  out.split_point = std::min(1.0, 0.5 * r_min);
  out.tail_split = std::max(1.0, 2.0 * r_max);
  const std::size_t order = cfg.series_order;
  out.subtracted_terms = order + 1;
  const Complex power = -(1.0 + alpha);

  // Head: phi(-x)^{-a-1} = sum_j a_j x^j, fp \int_0^{x_s} x^{j-a-2} = x_s^{j-a-1}/(j-a-1).
  PowerSeries<Complex> neg_axis(order);
  for (std::size_t i = 0; i < phi.size() && i <= order; ++i) neg_axis[i] = (i % 2 == 0) ? phi[i] : -phi[i];
  double head_tail = 0.0;
  const Complex head =
      termwise_power_integral(powc(neg_axis, power), power, out.split_point, &head_tail);

  // Tail: \int_0^{u_s} u^{beta} G(u)^{-a-1} du, beta + 1 = d (a + 1).
  const std::vector<double> rev = detail::reversed_tail(phi);
  PowerSeries<Complex> tail_series(order);
  for (std::size_t i = 0; i < rev.size() && i <= order; ++i) tail_series[i] = rev[i];
  double far_tail = 0.0;
  const Complex beta1 = static_cast<double>(phi.size()) * (1.0 + alpha);
  const Complex far =
      termwise_power_integral(powc(tail_series, power), beta1, 1.0 / out.tail_split, &far_tail);

  // Body on [x_s, X].
  Complex body(0.0, 0.0);
  if (out.tail_split > out.split_point) {
    auto integrand = [&](double x) {
      return std::exp((power - 1.0) * std::log(x) + power * std::log(detail::reduced_neg_axis(phi, x)));
    };
    const QuadResult q = integrate_gk(integrand, out.split_point, out.tail_split, {cfg.tol, 1e-14, 4000});
    body = q.value;
    out.quad_error = q.error;
  }

  out.value = head + body + far;
  out.tail_error = head_tail + far_tail;
  return out;
}

RegulatorValue frac_regulator_fp(const GeneratorSpec& g, Complex alpha, const FiniteConfig& cfg) {
  const FinitePartResult fp = finite_part_mellin(g, alpha, cfg);
  const Complex scale = rgamma_c(-alpha);
  RegulatorValue v;
  v.alpha = alpha;
  v.zeta_part = zeta_c(-alpha);
  v.correction = -fp.value * scale;
  v.total = v.zeta_part + v.correction;
  v.route = Route::fp_mellin;
  v.err_estimate = (fp.tail_error + fp.quad_error) * std::abs(scale);
  return v;
}

Complex frac_action_direct_sum(const GeneratorSpec& g, Complex alpha, double t, double tol) {
  const double phi_t = phi_eval_real(g, t);
  return polylog_series(-alpha, Complex(std::exp(-phi_t), 0.0), tol);
}

RegulatorValue integer_limit(const GeneratorSpec& g, unsigned m, const FracConfig& cfg) {
  const double md = static_cast<double>(m);
  auto symmetric = [&](double eps) {
    return 0.5 * (frac_regulator_fp(g, md + eps, cfg.finite).total +
                  frac_regulator_fp(g, md - eps, cfg.finite).total);
  };
  // Symmetric averages carry only even powers of eps.
  const double eps = cfg.limit_step;
  const Complex coarse = symmetric(eps);
  const Complex fine = symmetric(eps / 10.0);
  const Complex limit = (100.0 * fine - coarse) / 99.0;

  RegulatorValue v;
  v.alpha = md;
  v.zeta_part = zeta_c(-md);
  v.total = limit;
  v.correction = limit - v.zeta_part;
  v.route = Route::integer_limit;
  v.err_estimate = std::abs(fine - limit);
  return v;
}

RegulatorValue frac_regulator(const GeneratorSpec& g, Complex alpha, const FracConfig& cfg) {
  require_region(alpha);
  const double nearest = std::round(alpha.real());
  if (alpha.imag() == 0.0 && nearest >= 0.0 && std::abs(alpha.real() - nearest) < cfg.near_integer_delta) {
    const auto m = static_cast<unsigned>(nearest);
    if (cfg.use_limit) {
      RegulatorValue v = integer_limit(g, m, cfg);
      v.alpha = alpha;
      return v;
    }
    const TraceValue t = trace_integer(g, m);
    RegulatorValue v;
    v.alpha = alpha;
    v.zeta_part = t.zeta_part.get_d();
    v.correction = t.correction.get_d();
    v.total = t.total.get_d();
    v.route = Route::integer_formula;
    return v;
  }

  RegulatorValue v = frac_regulator_fp(g, alpha, cfg.finite);
  if (cfg.crosscheck) {
    const RegulatorValue other = regulator_circle_ray(g, alpha, cfg.contour);
    v.crosscheck_delta = std::abs(v.total - other.total);
    if (v.crosscheck_delta > cfg.crosscheck_threshold) {
      std::ostringstream msg;
      msg << "fp_mellin and circle_ray differ by " << v.crosscheck_delta << " at alpha = " << alpha;
      throw Error(ErrorCode::RouteDisagreement, msg.str());
    }
  }
  return v;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::fp_mellin: return "fp_mellin";
    case Route::circle_ray: return "circle_ray";
    case Route::integer_formula: return "integer_formula";
    case Route::integer_limit: return "integer_limit";
  }
  return "unknown";
}

}  // namespace zreg
