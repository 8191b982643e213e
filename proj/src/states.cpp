#include "mpstates/states.hpp"

#include <cmath>
#include <stdexcept>

namespace mpstates {

const char* to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

void SectorState::validate() const {
  if (!(std::abs(omega) < 1.0)) {
    throw std::invalid_argument("SectorState: |omega| must be < 1");
  }
}

PhasePoint::PhasePoint(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("PhasePoint: phi must be finite");
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  phi_ = r;
}

void CosetLabel::validate() const {
  if (!(alpha.imag() > 0.0)) {
    throw std::invalid_argument("CosetLabel: Im(alpha) must be > 0 for a normalizable state");
  }
  if (x == 0.0 && y == 0.0) {
    throw std::invalid_argument("CosetLabel: (x, y) must not be (0, 0)");
  }
  if (!std::isfinite(phi) || !std::isfinite(x) || !std::isfinite(y) ||
      !std::isfinite(alpha.real())) {
    throw std::invalid_argument("CosetLabel: non-finite parameter");
  }
}

FockVector mp2_state(const SectorState& label, const TruncationPolicy& policy) {
  label.validate();
  policy.validate();
  const double one_minus = 1.0 - std::norm(label.omega);
  FockVector v(policy.n_max, label.sector);
  const bool even = label.sector != Sector::Odd;
  const bool odd = label.sector != Sector::Even;
  const double pre_even = std::pow(one_minus, 0.25);
  const double pre_odd = std::pow(one_minus, 0.75);
  for (std::size_t n = 0; 2 * n <= policy.n_max; ++n) {
    if (even) v.set(2 * n, pre_even * series_term(label.omega, n, Parity::Even));
    if (odd && 2 * n + 1 <= policy.n_max) {
      v.set(2 * n + 1, pre_odd * series_term(label.omega, n, Parity::Odd));
    }
  }
  return v;
}

FockVector london_bra_coeffs(const PhasePoint& phi, const TruncationPolicy& policy) {
  policy.validate();
  const double inv = 1.0 / std::sqrt(kTwoPi);
  std::vector<cplx> c(policy.n_max + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = std::polar(inv, phi.value() * static_cast<double>(n));
  }
  return FockVector(std::move(c), Sector::Full);
}

FockVector cylinder_ket_coeffs(const CylinderLabel& label, const TruncationPolicy& policy) {
  policy.validate();
  if (!std::isfinite(label.l) || !std::isfinite(label.phi)) {
    throw std::invalid_argument("CylinderLabel: non-finite parameter");
  }
  std::vector<cplx> c(policy.n_max + 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double jd = static_cast<double>(j);
    c[j] = std::polar(std::exp(label.l * jd - 0.5 * jd * jd), -label.phi * jd);
  }
  return FockVector(std::move(c), Sector::Full);
}

double fiducial_A(double phi, double x, double y, Branch branch) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  if (branch == Branch::Plus) return (c + s) * x + (-c + s) * y;
  return (c - s) * x + (c + s) * y;
}

cplx coset_S(cplx alpha, double phi, double x, double y) {
  return fiducial_A(phi, x, y, Branch::Plus) * std::cos(alpha) +
         fiducial_A(phi, x, y, Branch::Minus) * std::sin(alpha);
}

double coset_S_product(cplx alpha, double phi, double x, double y) {
  return (coset_S(std::conj(alpha), phi, x, y) * coset_S(alpha, phi, x, y)).real();
}

double coset_S_product_displayed(cplx alpha, double phi, double x, double y) {
  const double d = 2.0 * (alpha.real() - phi);
  return (x * x + y * y) * std::cosh(2.0 * alpha.imag()) - (x * x - y * y) * std::sin(d) +
         2.0 * x * y * std::cos(d);
}

double coset_S_product_expanded(cplx alpha, double phi, double x, double y) {
  const double d = 2.0 * (alpha.real() + phi);
  return (x * x + y * y) * std::cosh(2.0 * alpha.imag()) + (x * x - y * y) * std::sin(d) -
         2.0 * x * y * std::cos(d);
}

cplx coset_unnormalized_prefactor(const CosetLabel& label) {
  return coset_S(label.alpha, label.phi, label.x, label.y) / std::sqrt(kTwoPi);
}

cplx coset_normalization(const CosetLabel& label) {
  label.validate();
  const cplx s = coset_S(label.alpha, label.phi, label.x, label.y);
  // -expm1(-t) = 1 - e^{-t} without cancellation for small Im(alpha).
  return std::polar(std::sqrt(-std::expm1(-label.alpha.imag())), std::arg(s));
}

FockVector coset_state_coeffs(const CosetLabel& label, const TruncationPolicy& policy) {
  label.validate();
  policy.validate();
  const cplx norm = coset_normalization(label);
  std::vector<cplx> c(policy.n_max + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double nd = static_cast<double>(n);
    // e^{-i(phi - alpha/2) n} = e^{-n Im(alpha)/2} e^{i n (Re(alpha)/2 - phi)}
    c[n] = norm * std::polar(std::exp(-0.5 * nd * label.alpha.imag()),
                             nd * (0.5 * label.alpha.real() - label.phi));
  }
  return FockVector(std::move(c), Sector::Full);
}

double coset_norm_tail(cplx alpha, const TruncationPolicy& policy) {
  return std::exp(-static_cast<double>(policy.n_max + 1) * alpha.imag());
}

}  // namespace mpstates
