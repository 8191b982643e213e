#pragma once

#include <cstddef>
#include <optional>

#include "mpstates/fock_core.hpp"
#include "mpstates/mp2_algebra.hpp"
#include "mpstates/states.hpp"

namespace mpstates {

/// A truncated series together with an independently arranged reference
/// value (a closed form, or the same quantity summed in a different order).
struct OverlapResult {
  cplx series_value;
  std::optional<cplx> closed_form_value;
  double tail_bound = 0.0;
  std::size_t n_used = 0;

  /// max(1e-10, 10 * tail_bound)
  double tolerance() const;
  /// |series - closed|, or 0 when there is no reference value.
  double discrepancy() const;
  bool agrees() const { return discrepancy() <= tolerance(); }
};

// Circle (London) projections. Bra coefficients carry e^{+i phi n}; kets carry
// e^{-i phi n}.

/// Series term (omega e^{i phi}/2)^k / sqrt(k!) without prefactors.
cplx circle_series_term(const PhasePoint& phi, cplx omega, std::size_t n, Parity parity);

/// <phi|Psi^(+-)(omega)> = (1-|z|^2)^{s}/sqrt(2pi) sum (z/2)^k/sqrt(k!),
/// z = omega e^{i phi}, s = 1/4 (Even) or 3/4 (Odd). No reference value.
OverlapResult circle_sector_overlap(const PhasePoint& phi, cplx omega, Parity parity,
                                    const TruncationPolicy& policy);

/// Even + odd; the reference is the single-sum arrangement with bracket
/// [1 + (1-|z|^2)^{1/2} (z/2)/sqrt(2n+1)].
OverlapResult circle_total_overlap(const PhasePoint& phi, cplx omega,
                                   const TruncationPolicy& policy);

/// 2pi times the termwise squared moduli of the single-sum projection,
/// sum_n (1-r^2)^{1/2} (r^2/4)^{2n}/(2n)! + (1-r^2)^{3/2} (r^2/4)^{2n+1}/(2n+1)!,
/// against the printed closed form (1-r^2)^{1/2} cosh(r^2/2) + (1-r^2)^{3/2} sinh(r^2/2).
///
/// The two differ: the termwise sum resums to the same expression with r^2/4
/// in place of r^2/2 (see circle_norm_sq_termwise_closed_form).
OverlapResult circle_total_norm_sq(double omega_abs, const TruncationPolicy& policy);

double circle_norm_sq_displayed_closed_form(double omega_abs);
double circle_norm_sq_termwise_closed_form(double omega_abs);

/// 2pi |<phi|Psi(omega)>|^2 including cross terms; depends on phi.
double circle_total_norm_sq_coherent(const PhasePoint& phi, cplx omega,
                                     const TruncationPolicy& policy);

/// Abel-regularized London overlap (1/2pi) sum_n e^{i(phi-phi') n} e^{-n r}
/// = (1/2pi) / (1 - e^{i(phi-phi')} e^{-r}). Throws for r <= 0.
cplx london_overlap(double phi, double phi_prime, double regularizer);

/// Same quantity with the sign printed next to the geometric sum,
/// (1/2pi) / (1 - e^{-i(phi-phi')} e^{-r}).
cplx london_overlap_displayed(double phi, double phi_prime, double regularizer);

/// Compensated partial sum of the damped series until e^{-n r} < 1e-18.
cplx london_overlap_series(double phi, double phi_prime, double regularizer);

inline constexpr double kDefaultLondonRegularizer = 1e-3;

// Cylinder projections, l = label.l, u = omega e^{l - i phi}.

/// (u/2)^k / sqrt(k!) e^{-k^2/2} without prefactors.
cplx cylinder_series_term(const CylinderLabel& label, cplx omega, std::size_t n, Parity parity);

OverlapResult cylinder_sector_overlap(const CylinderLabel& label, cplx omega, Parity parity,
                                      const TruncationPolicy& policy);

/// Even + odd; the reference is the single-sum arrangement with bracket
/// [1 + (1-|w|^2)^{1/2} (u/2)/sqrt(2n+1) e^{-(2n+1/2)}].
OverlapResult cylinder_total_overlap(const CylinderLabel& label, cplx omega,
                                     const TruncationPolicy& policy);

/// Single sum with the bracket exactly as printed,
/// [1 + (1-|w|^2)^{1/2} u/sqrt(2n+1) e^{-(2n+1)/2}].
cplx cylinder_total_overlap_displayed(const CylinderLabel& label, cplx omega,
                                      const TruncationPolicy& policy);

struct CylinderNormReport {
  double direct = 0.0;   // |<xi|Psi(omega)>|^2 at l = 0
  double g_form = 0.0;   // sum_n |w/2|^{4n}/(2n)! e^{-2n^2} G_n(omega, phi)
  double ratio = 0.0;    // direct / g_form
  double prefactor = 0.0;  // (1 - |w|^2)^{1/2}
  double tail_bound = 0.0;
  std::size_t n_used = 0;
};

CylinderNormReport cylinder_total_norm_sq(cplx omega, double phi, const TruncationPolicy& policy);

// Coset projections.

/// z' = omega e^{i(phi - alpha*/2)}; |z'| = |omega| e^{-Im(alpha)/2}.
cplx coset_z_prime(const CosetLabel& label, cplx omega);

/// <alpha,phi|Psi^(+-)(omega)> in the z' form (1-|z'|^2)^{s} sum (z'/2)^k/sqrt(k!),
/// times N* (normalized) or S(alpha*, phi)/sqrt(2pi) (unnormalized).
OverlapResult coset_sector_overlap(const CosetLabel& label, cplx omega, Parity parity,
                                   bool normalized, const TruncationPolicy& policy);

/// Even + odd against the single-sum arrangement with bracket
/// [1 + (1-|z'|^2)^{1/2} (z'/2)/sqrt(2n+1)].
OverlapResult coset_total_overlap(const CosetLabel& label, cplx omega, bool normalized,
                                  const TruncationPolicy& policy);

struct CosetNormReport {
  double z_prime_abs = 0.0;
  double direct = 0.0;     // |single sum|^2, prefactor-free
  double termwise = 0.0;   // sum_n |a_n|^2
  double termwise_rearranged = 0.0;  // cosh/sinh(r^2/4) + (1-r^2) Re z' sum |z'/2|^{4n}/((2n)! sqrt(2n+1))
  double displayed = 0.0;  // printed closed form
  double tail_bound = 0.0;
};

CosetNormReport coset_total_norm_sq(const CosetLabel& label, cplx omega,
                                    const TruncationPolicy& policy);

/// <beta,phi'|alpha,phi> for the unnormalized coset states, truncated double
/// sum against (1/2pi) S(beta*,phi') S(alpha,phi) / (1 - q), with
/// q = e^{-i(phi - phi' - (alpha - beta*)/2)}, |q| = e^{-(Im alpha + Im beta)/2}.
OverlapResult coset_pair_overlap(const CosetLabel& bra, const CosetLabel& ket,
                                 const TruncationPolicy& policy);

/// Trapezoid quadrature of (1/2pi) int_0^{2pi} |alpha,phi><alpha,phi| dphi over
/// the S-free kets sum_n e^{-i(phi - alpha/2) n}|n>. Exact for the trigonometric
/// polynomial integrand once quadrature_points > 2 n_max.
OperatorMatrix weak_identity_matrix(cplx alpha, std::size_t n_max, std::size_t quadrature_points);

}  // namespace mpstates
