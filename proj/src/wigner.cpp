#include "mpstates/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpstates {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
}

void QuadratureSpec::validate() const {
  if (radial_points < 16) throw std::invalid_argument("QuadratureSpec: radial_points must be >= 16");
  if (angular_points < 32) {
    throw std::invalid_argument("QuadratureSpec: angular_points must be >= 32");
  }
  if (!(eta_radius > 0.0 && eta_radius <= 1.0)) {
    throw std::invalid_argument("QuadratureSpec: eta_radius must lie in (0, 1]");
  }
}

double exp_integral_Ei_power_series(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_Ei: x must be > 0");
  // gamma + ln x + sum_{k>=1} x^k / (k k!); every term is positive.
  double term = 1.0;  // x^k / k!
  double sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (add < 1e-17 * sum) break;
  }
  return kEulerGamma + std::log(x) + sum;
}

double exp_integral_Ei_asymptotic(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_Ei: x must be > 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / x;
    if (next >= term) break;  // past the smallest term
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::exp(x) / x * sum;
}

double exp_integral_Ei(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_Ei: x must be > 0");
  return x <= kEiCrossover ? exp_integral_Ei_power_series(x) : exp_integral_Ei_asymptotic(x);
}

WignerSample wigner_mm_approx(cplx z) {
  const double r = std::abs(z);
  if (!(r > 0.0)) throw std::domain_error("wigner_mm_approx: z must be nonzero");
  if (r > 1.0) throw std::domain_error("wigner_mm_approx: |z| must be <= 1");
  const double u = 4.0 * r * r;
  WignerSample s;
  s.z = z;
  s.value = 2.0 * std::exp(-u) * (2.0 * exp_integral_Ei(u) - 4.0 * std::log(r));
  return s;
}

namespace {

cplx f_factor(cplx u, std::size_t k) {
  const double root = std::sqrt(1.0 - std::norm(u));
  return 1.0 + root * u / (2.0 * std::sqrt(2.0 * static_cast<double>(k) + 1.0));
}

}  // namespace

cplx wigner_integrand(cplx z, cplx eta, std::size_t n, std::size_t m, IntegrandForm form) {
  const cplx zp = z + eta / 2.0;
  const cplx zm = z - eta / 2.0;
  if (!(std::norm(zp) < 1.0 && std::norm(zm) < 1.0)) {
    throw std::domain_error("wigner_integrand: z +- eta/2 must lie in the unit disc");
  }
  const double weight = form == IntegrandForm::Symmetric
                            ? std::pow((1.0 - std::norm(zp)) * (1.0 - std::norm(zm)), 0.25)
                            : std::sqrt(1.0 - std::norm(zp));
  // -(z - z*)(eta + eta*)/2 = -2i Im(z) Re(eta)
  const cplx phase = std::polar(1.0, -2.0 * z.imag() * eta.real());
  const cplx zm_bar = std::conj(zm);
  return weight * phase * series_term(zp, n, Parity::Even) * series_term(zm_bar, m, Parity::Even) *
         f_factor(zp, n) * f_factor(zm_bar, m);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    nodes[lo] = -x;
    nodes[hi] = x;
    weights[lo] = weights[hi] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

WignerSample wigner_direct(cplx z, std::size_t n_pair_cutoff, const QuadratureSpec& spec,
                           IntegrandForm form) {
  spec.validate();
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("wigner_direct: |z| must be < 1");
  double radius = spec.eta_radius;
  if (r + radius / 2.0 >= 1.0) radius = 2.0 * (1.0 - r) * (1.0 - 1e-9);

  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre(spec.radial_points, nodes, weights);

  const double d_theta = kTwoPi / spec.angular_points;
  cplx total{};
  // Ascending radius, then angle.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double rho = 0.5 * radius * (nodes[i] + 1.0);
    const double w_rho = 0.5 * radius * weights[i] * rho;
    cplx ring{};
    for (int k = 0; k < spec.angular_points; ++k) {
      const cplx eta = std::polar(rho, k * d_theta);
      for (std::size_t n = 0; n <= n_pair_cutoff; ++n) {
        ring += wigner_integrand(z, eta, n, n, form);
      }
    }
    total += w_rho * d_theta * ring;
  }
  total /= kTwoPi;

  WignerSample s;
  s.z = z;
  s.value = total.real();
  s.imag_part = total.imag();
  s.eta_radius_used = radius;
  return s;
}

bool is_unimodal(const std::vector<double>& values) {
  std::size_t i = 1;
  while (i < values.size() && values[i] >= values[i - 1]) ++i;
  while (i < values.size() && values[i] <= values[i - 1]) ++i;
  return i >= values.size();
}

std::size_t argmax(const std::vector<double>& values) {
  if (values.empty()) return 0;
  return static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
}

}  // namespace mpstates
