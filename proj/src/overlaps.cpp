#include "mpstates/overlaps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpstates {

double OverlapResult::tolerance() const { return std::max(1e-10, 10.0 * tail_bound); }

double OverlapResult::discrepancy() const {
  if (!closed_form_value) return 0.0;
  return std::abs(series_value - *closed_form_value);
}

namespace {

const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

void require_disc(cplx omega, const char* who) {
  if (!(std::abs(omega) < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": |omega| must be < 1");
  }
}

// theta * n reduced to (-pi, pi]; the product is formed in extended precision
// so the phase error stays near one ulp for large n.
double reduced_phase(double theta, std::size_t n) {
  const long double two_pi = 6.283185307179586476925286766559L;
  return static_cast<double>(std::remainder(static_cast<long double>(theta) * n, two_pi));
}

double sector_exponent(Parity p) { return p == Parity::Even ? 0.25 : 0.75; }

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx v) {
    add_part(re_, cre_, v.real());
    add_part(im_, cim_, v.imag());
  }
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

// sum_{n=0}^{N} series_term(z, n, parity) * weight(n)
template <class Weight>
cplx weighted_series(cplx z, Parity parity, std::size_t n_max, Weight weight) {
  cplx s{};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const cplx t = series_term(z, n, parity);
    if (t == cplx{}) {
      if (n > 0) break;  // underflow; every later term is smaller
      continue;
    }
    s += t * weight(n);
  }
  return s;
}

cplx plain_series(cplx z, Parity parity, std::size_t n_max) {
  return weighted_series(z, parity, n_max, [](std::size_t) { return 1.0; });
}

// Single-sum arrangement sum_n (z/2)^{2n}/sqrt((2n)!) [1 + c * (z/2)/sqrt(2n+1) * w_odd(n)] w_even(n)
template <class EvenWeight, class OddWeight>
cplx single_sum(cplx z, double c, std::size_t n_max, EvenWeight w_even, OddWeight w_odd) {
  cplx s{};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const cplx t = series_term(z, n, Parity::Even);
    if (t == cplx{} && n > 0) break;
    const double nd = static_cast<double>(n);
    s += t * w_even(n) * (1.0 + c * (z / 2.0) / std::sqrt(2.0 * nd + 1.0) * w_odd(n));
  }
  return s;
}

double cylinder_weight(std::size_t n, Parity parity) {
  const double k = static_cast<double>(fock_level(n, parity));
  return std::exp(-0.5 * k * k);
}

}  // namespace

// ---------------------------------------------------------------- circle

cplx circle_series_term(const PhasePoint& phi, cplx omega, std::size_t n, Parity parity) {
  return series_term(omega * std::polar(1.0, phi.value()), n, parity);
}

OverlapResult circle_sector_overlap(const PhasePoint& phi, cplx omega, Parity parity,
                                    const TruncationPolicy& policy) {
  require_disc(omega, "circle_sector_overlap");
  policy.validate();
  const cplx z = omega * std::polar(1.0, phi.value());
  const double pre = std::pow(1.0 - std::norm(z), sector_exponent(parity)) * kInvSqrtTwoPi;
  OverlapResult r;
  r.series_value = pre * plain_series(z, parity, policy.n_max);
  r.tail_bound = pre * truncation_tail_bound(std::abs(z), policy, parity);
  r.n_used = policy.n_max + 1;
  return r;
}

OverlapResult circle_total_overlap(const PhasePoint& phi, cplx omega,
                                   const TruncationPolicy& policy) {
  const auto even = circle_sector_overlap(phi, omega, Parity::Even, policy);
  const auto odd = circle_sector_overlap(phi, omega, Parity::Odd, policy);
  const cplx z = omega * std::polar(1.0, phi.value());
  const double one_minus = 1.0 - std::norm(z);
  const auto one = [](std::size_t) { return 1.0; };
  OverlapResult r;
  r.series_value = even.series_value + odd.series_value;
  r.closed_form_value = std::pow(one_minus, 0.25) * kInvSqrtTwoPi *
                        single_sum(z, std::sqrt(one_minus), policy.n_max, one, one);
  r.tail_bound = even.tail_bound + odd.tail_bound;
  r.n_used = policy.n_max + 1;
  return r;
}

double circle_norm_sq_displayed_closed_form(double r) {
  const double q = 1.0 - r * r;
  return std::sqrt(q) * std::cosh(r * r / 2.0) + q * std::sqrt(q) * std::sinh(r * r / 2.0);
}

double circle_norm_sq_termwise_closed_form(double r) {
  const double q = 1.0 - r * r;
  return std::sqrt(q) * std::cosh(r * r / 4.0) + q * std::sqrt(q) * std::sinh(r * r / 4.0);
}

OverlapResult circle_total_norm_sq(double omega_abs, const TruncationPolicy& policy) {
  if (!(omega_abs >= 0.0 && omega_abs < 1.0)) {
    throw std::invalid_argument("circle_total_norm_sq: need 0 <= |z| < 1");
  }
  policy.validate();
  const double q = 1.0 - omega_abs * omega_abs;
  double s = 0.0;
  for (std::size_t n = 0; n <= policy.n_max; ++n) {
    const double te = std::norm(series_term(omega_abs, n, Parity::Even));
    const double to = std::norm(series_term(omega_abs, n, Parity::Odd));
    if (te == 0.0 && n > 0) break;
    s += std::sqrt(q) * te + q * std::sqrt(q) * to;
  }
  const double be = series_tail_bound(omega_abs, policy.n_max, Parity::Even);
  const double bo = series_tail_bound(omega_abs, policy.n_max, Parity::Odd);
  OverlapResult r;
  r.series_value = s;
  r.closed_form_value = circle_norm_sq_displayed_closed_form(omega_abs);
  r.tail_bound = std::sqrt(q) * be * be + q * std::sqrt(q) * bo * bo;
  r.n_used = policy.n_max + 1;
  return r;
}

double circle_total_norm_sq_coherent(const PhasePoint& phi, cplx omega,
                                     const TruncationPolicy& policy) {
  return kTwoPi * std::norm(circle_total_overlap(phi, omega, policy).series_value);
}

// ---------------------------------------------------------------- London

namespace {
void require_regularizer(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("london_overlap: regularizer must be > 0");
}
}  // namespace

cplx london_overlap(double phi, double phi_prime, double regularizer) {
  require_regularizer(regularizer);
  return 1.0 / (kTwoPi * (1.0 - std::polar(std::exp(-regularizer), phi - phi_prime)));
}

cplx london_overlap_displayed(double phi, double phi_prime, double regularizer) {
  require_regularizer(regularizer);
  return 1.0 / (kTwoPi * (1.0 - std::polar(std::exp(-regularizer), -(phi - phi_prime))));
}

cplx london_overlap_series(double phi, double phi_prime, double regularizer) {
  require_regularizer(regularizer);
  const double cutoff = std::min(std::ceil(42.0 / regularizer), 5e7);
  const auto n_terms = static_cast<std::size_t>(cutoff);
  const double theta = phi - phi_prime;
  CompensatedSum acc;
  for (std::size_t n = 0; n < n_terms; ++n) {
    const double nd = static_cast<double>(n);
    acc.add(std::polar(std::exp(-nd * regularizer), reduced_phase(theta, n)));
  }
  return acc.value() / kTwoPi;
}

// ---------------------------------------------------------------- cylinder

namespace {
cplx cylinder_argument(const CylinderLabel& label, cplx omega) {
  return omega * std::polar(std::exp(label.l), -label.phi);
}
}  // namespace

cplx cylinder_series_term(const CylinderLabel& label, cplx omega, std::size_t n, Parity parity) {
  return series_term(cylinder_argument(label, omega), n, parity) * cylinder_weight(n, parity);
}

OverlapResult cylinder_sector_overlap(const CylinderLabel& label, cplx omega, Parity parity,
                                      const TruncationPolicy& policy) {
  require_disc(omega, "cylinder_sector_overlap");
  policy.validate();
  const cplx u = cylinder_argument(label, omega);
  const double pre = std::pow(1.0 - std::norm(omega), sector_exponent(parity));
  OverlapResult r;
  r.series_value = pre * weighted_series(u, parity, policy.n_max, [parity](std::size_t n) {
                     return cylinder_weight(n, parity);
                   });
  // Weights decrease, so the plain tail scaled by the first dropped weight bounds it.
  r.tail_bound = pre * cylinder_weight(policy.n_max + 1, parity) *
                 series_tail_bound(std::abs(u), policy.n_max, parity);
  r.n_used = policy.n_max + 1;
  return r;
}

OverlapResult cylinder_total_overlap(const CylinderLabel& label, cplx omega,
                                     const TruncationPolicy& policy) {
  const auto even = cylinder_sector_overlap(label, omega, Parity::Even, policy);
  const auto odd = cylinder_sector_overlap(label, omega, Parity::Odd, policy);
  const cplx u = cylinder_argument(label, omega);
  const double one_minus = 1.0 - std::norm(omega);
  OverlapResult r;
  r.series_value = even.series_value + odd.series_value;
  r.closed_form_value =
      std::pow(one_minus, 0.25) *
      single_sum(
          u, std::sqrt(one_minus), policy.n_max,
          [](std::size_t n) { return cylinder_weight(n, Parity::Even); },
          [](std::size_t n) { return std::exp(-(2.0 * static_cast<double>(n) + 0.5)); });
  r.tail_bound = even.tail_bound + odd.tail_bound;
  r.n_used = policy.n_max + 1;
  return r;
}

cplx cylinder_total_overlap_displayed(const CylinderLabel& label, cplx omega,
                                      const TruncationPolicy& policy) {
  require_disc(omega, "cylinder_total_overlap_displayed");
  policy.validate();
  const cplx u = cylinder_argument(label, omega);
  const double root = std::sqrt(1.0 - std::norm(omega));
  cplx s{};
  for (std::size_t n = 0; n <= policy.n_max; ++n) {
    const cplx t = series_term(u, n, Parity::Even) * cylinder_weight(n, Parity::Even);
    if (t == cplx{} && n > 0) break;
    const double nd = static_cast<double>(n);
    s += t * (1.0 + root * u / std::sqrt(2.0 * nd + 1.0) * std::exp(-(2.0 * nd + 1.0) / 2.0));
  }
  return std::sqrt(root) * s;
}

CylinderNormReport cylinder_total_norm_sq(cplx omega, double phi, const TruncationPolicy& policy) {
  require_disc(omega, "cylinder_total_norm_sq");
  const CylinderLabel label{0.0, phi};
  const auto total = cylinder_total_overlap(label, omega, policy);
  const double root = std::sqrt(1.0 - std::norm(omega));
  const double quarter_sq = std::norm(omega / 2.0);
  const double re_term = 2.0 * (omega * std::polar(1.0, -phi)).real();

  double g = 0.0;
  for (std::size_t n = 0; n <= policy.n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double lead = std::norm(series_term(omega, n, Parity::Even)) * std::exp(-2.0 * nd * nd);
    if (lead == 0.0 && n > 0) break;
    const double damp = std::exp(-2.0 * nd - 0.5);
    const double s = std::sqrt(2.0 * nd + 1.0);
    const double g_n = 1.0 + root / s * damp * (re_term + damp * root * quarter_sq / s);
    g += lead * g_n;
  }

  CylinderNormReport rep;
  rep.direct = std::norm(total.series_value);
  rep.g_form = g;
  rep.ratio = g != 0.0 ? rep.direct / g : 0.0;
  rep.prefactor = root;
  rep.tail_bound = total.tail_bound * (2.0 * std::abs(total.series_value) + total.tail_bound);
  rep.n_used = total.n_used;
  return rep;
}

// ---------------------------------------------------------------- coset

cplx coset_z_prime(const CosetLabel& label, cplx omega) {
  const cplx i{0.0, 1.0};
  return omega * std::exp(i * (label.phi - std::conj(label.alpha) / 2.0));
}

namespace {

cplx coset_bra_factor(const CosetLabel& label, bool normalized) {
  if (normalized) return std::conj(coset_normalization(label));
  return coset_S(std::conj(label.alpha), label.phi, label.x, label.y) * kInvSqrtTwoPi;
}

cplx checked_z_prime(const CosetLabel& label, cplx omega, const char* who) {
  label.validate();
  require_disc(omega, who);
  const cplx zp = coset_z_prime(label, omega);
  if (!(std::abs(zp) < 1.0)) {
    throw std::domain_error(std::string(who) + ": |z'| must be < 1");
  }
  return zp;
}

}  // namespace

OverlapResult coset_sector_overlap(const CosetLabel& label, cplx omega, Parity parity,
                                   bool normalized, const TruncationPolicy& policy) {
  policy.validate();
  const cplx zp = checked_z_prime(label, omega, "coset_sector_overlap");
  const cplx factor = coset_bra_factor(label, normalized);
  const double pre = std::pow(1.0 - std::norm(zp), sector_exponent(parity));
  OverlapResult r;
  r.series_value = factor * pre * plain_series(zp, parity, policy.n_max);
  r.tail_bound = std::abs(factor) * pre * truncation_tail_bound(std::abs(zp), policy, parity);
  r.n_used = policy.n_max + 1;
  return r;
}

OverlapResult coset_total_overlap(const CosetLabel& label, cplx omega, bool normalized,
                                  const TruncationPolicy& policy) {
  const auto even = coset_sector_overlap(label, omega, Parity::Even, normalized, policy);
  const auto odd = coset_sector_overlap(label, omega, Parity::Odd, normalized, policy);
  const cplx zp = coset_z_prime(label, omega);
  const double one_minus = 1.0 - std::norm(zp);
  const auto one = [](std::size_t) { return 1.0; };
  OverlapResult r;
  r.series_value = even.series_value + odd.series_value;
  r.closed_form_value = coset_bra_factor(label, normalized) * std::pow(one_minus, 0.25) *
                        single_sum(zp, std::sqrt(one_minus), policy.n_max, one, one);
  r.tail_bound = even.tail_bound + odd.tail_bound;
  r.n_used = policy.n_max + 1;
  return r;
}

CosetNormReport coset_total_norm_sq(const CosetLabel& label, cplx omega,
                                    const TruncationPolicy& policy) {
  policy.validate();
  const cplx zp = checked_z_prime(label, omega, "coset_total_norm_sq");
  const double r2 = std::norm(zp);
  const double q = 1.0 - r2;
  const double root = std::sqrt(q);

  cplx direct{};
  double termwise = 0.0;
  double cross_sqrt = 0.0;   // sum |z'/2|^{4n} / ((2n)! sqrt(2n+1))
  double cross_plain = 0.0;  // sum |z'/2|^{4n} / ((2n)! (2n+1))
  for (std::size_t n = 0; n <= policy.n_max; ++n) {
    const cplx t = series_term(zp, n, Parity::Even);
    if (t == cplx{} && n > 0) break;
    const double s = std::sqrt(2.0 * static_cast<double>(n) + 1.0);
    const cplx a = std::sqrt(root) * t * (1.0 + root * (zp / 2.0) / s);
    direct += a;
    termwise += std::norm(a);
    cross_sqrt += std::norm(t) / s;
    cross_plain += std::norm(t) / (s * s);
  }

  CosetNormReport rep;
  rep.z_prime_abs = std::sqrt(r2);
  rep.direct = std::norm(direct);
  rep.termwise = termwise;
  rep.termwise_rearranged = circle_norm_sq_termwise_closed_form(rep.z_prime_abs) +
                            q * zp.real() * cross_sqrt;
  rep.displayed = circle_norm_sq_displayed_closed_form(rep.z_prime_abs) +
                  root * zp.real() * cross_plain;
  const double be = series_tail_bound(rep.z_prime_abs, policy.n_max, Parity::Even);
  const double bo = series_tail_bound(rep.z_prime_abs, policy.n_max, Parity::Odd);
  rep.tail_bound = 2.0 * (be + bo) * (std::abs(direct) + be + bo);
  return rep;
}

OverlapResult coset_pair_overlap(const CosetLabel& bra, const CosetLabel& ket,
                                 const TruncationPolicy& policy) {
  bra.validate();
  ket.validate();
  policy.validate();
  const cplx i{0.0, 1.0};
  const cplx theta = ket.phi - bra.phi - (ket.alpha - std::conj(bra.alpha)) / 2.0;
  const cplx q = std::exp(-i * theta);
  const double damping = (ket.alpha.imag() + bra.alpha.imag()) / 2.0;
  if (!(damping > 0.0)) {
    throw std::invalid_argument("coset_pair_overlap: geometric series does not converge");
  }
  const cplx pre = coset_S(std::conj(bra.alpha), bra.phi, bra.x, bra.y) *
                   coset_S(ket.alpha, ket.phi, ket.x, ket.y) / kTwoPi;

  CompensatedSum acc;
  for (std::size_t n = 0; n <= policy.n_max; ++n) {
    const double nd = static_cast<double>(n);
    acc.add(std::polar(std::exp(-damping * nd), reduced_phase(-theta.real(), n)));
  }
  const double qa = std::abs(q);
  OverlapResult r;
  r.series_value = pre * acc.value();
  r.closed_form_value = pre / (1.0 - q);
  r.tail_bound = std::abs(pre) * std::pow(qa, static_cast<double>(policy.n_max + 1)) / (1.0 - qa);
  r.n_used = policy.n_max + 1;
  return r;
}

OperatorMatrix weak_identity_matrix(cplx alpha, std::size_t n_max, std::size_t quadrature_points) {
  if (!(alpha.imag() > 0.0)) {
    throw std::invalid_argument("weak_identity_matrix: Im(alpha) must be > 0");
  }
  if (quadrature_points <= 2 * n_max) {
    throw std::invalid_argument("weak_identity_matrix: need quadrature_points > 2 n_max");
  }
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd c(dim);
  const double k_inv = 1.0 / static_cast<double>(quadrature_points);
  for (std::size_t k = 0; k < quadrature_points; ++k) {
    const double phi = kTwoPi * static_cast<double>(k) * k_inv;
    for (Eigen::Index n = 0; n < dim; ++n) {
      const double nd = static_cast<double>(n);
      c(n) = std::polar(std::exp(-0.5 * nd * alpha.imag()),
                        std::remainder(nd * (0.5 * alpha.real() - phi), kTwoPi));
    }
    // (1/2pi) * (2pi/K) sum_k c c^dagger
    m.noalias() += k_inv * (c * c.adjoint());
  }
  return {std::move(m), OperatorLabel::Other};
}

}  // namespace mpstates
