#pragma once

#include <cstddef>
#include <vector>

#include "mpstates/fock_core.hpp"

namespace mpstates {

struct WignerSample {
  cplx z;
  double value = 0.0;
  /// Imaginary part left over by the quadrature (wigner_direct only).
  double imag_part = 0.0;
  /// Disc radius actually integrated over, after the domain guard.
  double eta_radius_used = 0.0;
};

struct QuadratureSpec {
  int radial_points = 32;
  int angular_points = 64;
  double eta_radius = 1.0;

  /// radial_points >= 16, angular_points >= 32, eta_radius in (0, 1].
  void validate() const;
};

/// Ei(x) for x > 0. Power series up to kEiCrossover, asymptotic series above.
double exp_integral_Ei(double x);

double exp_integral_Ei_power_series(double x);
/// Optimally truncated asymptotic expansion e^x/x sum k!/x^k.
double exp_integral_Ei_asymptotic(double x);

inline constexpr double kEiCrossover = 40.0;

/// 2 e^{-4|z|^2} (2 Ei(4|z|^2) - 4 ln|z|) for 0 < |z| <= 1.
WignerSample wigner_mm_approx(cplx z);

enum class IntegrandForm {
  /// Radial weight (1-|z+|^2)^{1/4} (1-|z-|^2)^{1/4}; conjugate-symmetric
  /// under (eta -> -eta, n <-> m).
  Symmetric,
  /// Radial weight (1-|z+|^2)^{1/2} only, as printed.
  Displayed,
};

/// Wigner integrand at z+- = z +- eta/2:
///   w e^{-(z-z*)(eta+eta*)/2} (z+/2)^{2n}/sqrt((2n)!) (z-*/2)^{2m}/sqrt((2m)!) F_n(z+) F_m(z-*)
/// with F_k(u) = 1 + (1-|u|^2)^{1/2} u / (2 sqrt(2k+1)).
/// Throws std::domain_error when |z+-| >= 1.
cplx wigner_integrand(cplx z, cplx eta, std::size_t n, std::size_t m,
                      IntegrandForm form = IntegrandForm::Symmetric);

/// (1/2pi) integral over |eta| < R of sum_{n <= cutoff} integrand(z, eta, n, n),
/// Gauss-Legendre in radius and trapezoid in angle. R is shrunk to
/// 2(1-|z|)(1-1e-9) when |z| + eta_radius/2 >= 1. Throws for |z| >= 1.
WignerSample wigner_direct(cplx z, std::size_t n_pair_cutoff, const QuadratureSpec& spec = {},
                           IntegrandForm form = IntegrandForm::Symmetric);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// True when the sequence rises (weakly) to a single peak and then falls (weakly).
bool is_unimodal(const std::vector<double>& values);

/// Index of the largest entry; 0 for an empty sequence.
std::size_t argmax(const std::vector<double>& values);

}  // namespace mpstates
