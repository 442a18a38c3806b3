#include "zreg/hankel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "phi_ray.hpp"
#include "zreg/quadrature.hpp"
#include "zreg/roots.hpp"
#include "zreg/special.hpp"

namespace zreg {

namespace {

constexpr double kPi = std::numbers::pi;

// \int_{-pi}^{pi} e^{i nu theta} d theta
Complex arc_weight(Complex nu) {
  if (std::abs(nu) < 1e-300) return {2.0 * kPi, 0.0};
  return 2.0 * sin_pi(nu) / nu;
}

// Product trapezoid rule: the periodic factor phi(rho e^{i theta})^{-(1+a)} is
// sampled on n equispaced nodes and expanded in Fourier modes, and each mode is
// integrated exactly against the principal z^{-(1+a)}, whose jump sits on the
// negative axis.
Complex circle_sum(const GeneratorSpec& g, Complex alpha, double rho, std::size_t n) {
  const Complex expo = -(1.0 + alpha);
  std::vector<Complex> psi(n);
  std::vector<Complex> logs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    logs[k] = std::log(phi_reduced_eval(g, std::polar(rho, theta)));
  }
  // Continuous log phi: walk forward over theta in [0, pi] and backward over
  // (-pi, 0), both from theta = 0 where phi(rho) > 0.
  auto unwrap = [&](std::size_t from, std::size_t to) {
    double jump = logs[to].imag() - logs[from].imag();
    while (jump > kPi) {
      logs[to] -= Complex(0.0, 2.0 * kPi);
      jump -= 2.0 * kPi;
    }
    while (jump < -kPi) {
      logs[to] += Complex(0.0, 2.0 * kPi);
      jump += 2.0 * kPi;
    }
  };
  for (std::size_t k = 1; k <= n / 2; ++k) unwrap(k - 1, k);
  if (n > 1) unwrap(0, n - 1);
  for (std::size_t k = n - 1; k > n / 2 + 1; --k) unwrap(k, k - 1);
  for (std::size_t k = 0; k < n; ++k) psi[k] = std::exp(expo * logs[k]);

  std::vector<Complex> roots(n);
  for (std::size_t k = 0; k < n; ++k) roots[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));

  const long half = static_cast<long>(n / 2);
  Complex acc(0.0, 0.0);
  for (long j = -half; j < half; ++j) {
    const std::size_t jm = static_cast<std::size_t>((j % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n));
    Complex coeff(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) coeff += psi[k] * roots[(jm * k) % n];
    coeff /= static_cast<double>(n);
    acc += coeff * arc_weight(static_cast<double>(j) + expo);
  }
  return gamma_c(1.0 + alpha) / (2.0 * kPi) * std::exp(expo * std::log(rho)) * acc;
}

}  // namespace

double nearest_secondary_zero(const GeneratorSpec& g, int k_max) {
  double nearest = std::numeric_limits<double>::infinity();
  std::vector<Complex> c(g.phi_coeffs.begin(), g.phi_coeffs.end());
  for (int k = -k_max; k <= k_max; ++k) {
    if (k == 0) continue;
    c[0] = Complex(0.0, -2.0 * kPi * k);
    for (const Complex& z : polynomial_roots(c)) nearest = std::min(nearest, std::abs(z));
  }
  return nearest;
}

void validate_contour(const GeneratorSpec& g, const ContourConfig& cfg) {
  if (!g.is_polynomial) throw Error(ErrorCode::NotPolynomial, "contour route needs a polynomial generator");
  if (!(cfg.rho > 0.0)) throw Error(ErrorCode::RadiusTooLarge, "circle radius must be positive");
  double max_phi = 0.0;
  for (int k = 0; k < 256; ++k) {
    max_phi = std::max(max_phi, std::abs(phi_eval(g, std::polar(cfg.rho, 2.0 * kPi * k / 256.0))));
  }
  std::ostringstream why;
  if (max_phi >= 2.0 * kPi) why << "max |Phi| on the circle is " << max_phi << " >= 2 pi";
  for (const Complex& r : phi_reduced_roots(g)) {
    if (std::abs(r) <= cfg.rho && why.str().empty()) why << "zero of Phi at " << r << " lies inside the circle";
  }
  const double secondary = nearest_secondary_zero(g);
  if (secondary <= cfg.rho && why.str().empty()) {
    why << "secondary branch point at radius " << secondary << " lies inside the circle";
  }
  if (!why.str().empty()) throw Error(ErrorCode::RadiusTooLarge, why.str());
}

CircleResult circle_integral_detail(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg) {
  validate_contour(g, cfg);
  CircleResult r;
  std::size_t n = std::max<std::size_t>(cfg.n_circle, 8);
  Complex prev = circle_sum(g, alpha, cfg.rho, n);
  for (std::size_t d = 0; d < cfg.max_doublings; ++d) {
    n *= 2;
    const Complex next = circle_sum(g, alpha, cfg.rho, n);
    r.last_change = std::abs(next - prev);
    prev = next;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(next);
    if (r.last_change < std::max(cfg.circle_tol, floor)) break;
  }
  r.value = prev;
  r.nodes = n;
  return r;
}

Complex circle_integral(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg) {
  return circle_integral_detail(g, alpha, cfg).value;
}

Complex ray_integral(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg, double* err_estimate) {
  require_hankel(g);
  if (err_estimate) *err_estimate = 0.0;
  if (detail::is_nonnegative_integer(alpha)) return {0.0, 0.0};

  const std::vector<double> phi = detail::reduced_coeffs(g);
  const std::vector<double> tail = detail::reversed_tail(phi);
  const double degree = static_cast<double>(phi.size());
  const Complex power = -(1.0 + alpha);
  const QuadOptions opts{cfg.ray_tol, 1e-14, 4000};

  // x^{-a-2} phi(-x)^{-a-1} on [rho, cut]
  const double cut = std::max(cfg.rho, cfg.tail_cut);
  auto direct = [&](double x) {
    return std::exp((power - 1.0) * std::log(x) + power * std::log(detail::reduced_neg_axis(phi, x)));
  };
  const QuadResult near = integrate_gk(direct, cfg.rho, cut, opts);

  // x = 1/u gives u^beta G(u)^{-a-1} on (0, 1/cut] with beta = d(a+1) - 1;
  // u = v^q / cut then removes the algebraic endpoint singularity.
  const Complex beta1 = degree * (1.0 + alpha);
  const double q = std::max(1.0, std::ceil(2.0 / beta1.real()));
  const double inv_cut = 1.0 / cut;
  auto mapped = [&](double v) {
    const double u = inv_cut * std::pow(v, q);
    return q * std::exp(beta1 * std::log(inv_cut) + (q * beta1 - 1.0) * std::log(v) +
                        power * std::log(detail::horner(tail, u)));
  };
  const QuadResult far = integrate_gk(mapped, 0.0, 1.0, opts);

  const Complex scale = rgamma_c(-alpha);
  if (err_estimate) *err_estimate = (near.error + far.error) * std::abs(scale);
  return scale * (near.value + far.value);
}

RegulatorValue regulator_circle_ray(const GeneratorSpec& g, Complex alpha, const ContourConfig& cfg) {
  if (alpha.real() <= -1.0) {
    throw Error(ErrorCode::OutOfRegularizationRegion, "regulator needs Re alpha > -1");
  }
  const CircleResult circle = circle_integral_detail(g, alpha, cfg);
  double ray_err = 0.0;
  const Complex ray = ray_integral(g, alpha, cfg, &ray_err);

  RegulatorValue v;
  v.alpha = alpha;
  v.zeta_part = zeta_c(-alpha);
  v.correction = circle.value - ray;
  v.total = v.zeta_part + v.correction;
  v.route = Route::circle_ray;
  v.err_estimate = circle.last_change + ray_err;
  return v;
}

}  // namespace zreg
