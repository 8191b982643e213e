#pragma once

#include <cstddef>

#include "mpstates/fock_core.hpp"

namespace mpstates {

/// Label of an Mp(2) sector coherent state; |omega| < 1 strictly.
struct SectorState {
  cplx omega;
  Sector sector = Sector::Full;

  void validate() const;
};

/// Angle on the circle, reduced to [0, 2pi).
class PhasePoint {
 public:
  explicit PhasePoint(double phi);
  double value() const { return phi_; }

 private:
  double phi_;
};

/// Cylinder coherent state label: e^{(l - i phi) j} e^{-j^2/2}.
struct CylinderLabel {
  double l = 0.0;
  double phi = 0.0;
};

enum class Branch { Plus, Minus };

const char* to_string(Branch b);

/// Coset coherent state label. Requires Im(alpha) > 0 and (x, y) != (0, 0).
struct CosetLabel {
  cplx alpha;
  double phi = 0.0;
  double x = 1.0;
  double y = 0.0;
  Branch branch = Branch::Plus;

  void validate() const;
};

/// |Psi(omega)> restricted to the requested sector.
///
/// Even: c[2n] = (1-|w|^2)^{1/4} (w/2)^{2n} / sqrt((2n)!)
/// Odd:  c[2n+1] = (1-|w|^2)^{3/4} (w/2)^{2n+1} / sqrt((2n+1)!)
/// Full is the elementwise sum.
FockVector mp2_state(const SectorState& label, const TruncationPolicy& policy);

/// Bra coefficients of the London phase state, e^{i phi n} / sqrt(2 pi).
FockVector london_bra_coeffs(const PhasePoint& phi, const TruncationPolicy& policy);

/// Nonnegative-j part of the cylinder ket, e^{(l - i phi) j} e^{-j^2/2}, unnormalized.
FockVector cylinder_ket_coeffs(const CylinderLabel& label, const TruncationPolicy& policy);

/// A_(+-)(phi, x, y) = (cos phi +- sin phi) x + (-+cos phi + sin phi) y.
double fiducial_A(double phi, double x, double y, Branch branch);

/// S(alpha, phi) = A_+ cos(alpha) + A_- sin(alpha), with complex trigonometry.
cplx coset_S(cplx alpha, double phi, double x, double y);

/// S(alpha*, phi) S(alpha, phi) evaluated from coset_S directly.
double coset_S_product(cplx alpha, double phi, double x, double y);

/// Product formula as printed alongside the normalization:
/// (x^2+y^2) cosh(2 Im a) - (x^2-y^2) sin 2(Re a - phi) + 2xy cos 2(Re a - phi).
double coset_S_product_displayed(cplx alpha, double phi, double x, double y);

/// Product formula obtained by expanding |A_+ cos a + A_- sin a|^2 directly:
/// (x^2+y^2) cosh(2 Im a) + (x^2-y^2) sin 2(Re a + phi) - 2xy cos 2(Re a + phi).
double coset_S_product_expanded(cplx alpha, double phi, double x, double y);

/// Unnormalized ket amplitude S(alpha, phi)/sqrt(2pi) multiplying
/// sum_n e^{-i(phi - alpha/2) n} |n>.
cplx coset_unnormalized_prefactor(const CosetLabel& label);

/// N = sqrt(1 - e^{-Im alpha}) e^{i arg S(alpha, phi)}.
cplx coset_normalization(const CosetLabel& label);

/// Normalized coset ket, c[n] = N e^{-i(phi - alpha/2) n}. Throws
/// std::invalid_argument when Im(alpha) <= 0.
FockVector coset_state_coeffs(const CosetLabel& label, const TruncationPolicy& policy);

/// Norm deficit 1 - ||c||^2 of the truncated coset ket, e^{-(n_max+1) Im alpha}.
double coset_norm_tail(cplx alpha, const TruncationPolicy& policy);

}  // namespace mpstates
