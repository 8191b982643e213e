#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

#include "mpstates/states.hpp"

namespace mpstates {

/// Coordinates (phi, x, y) on E(2).
struct E2Point {
  double phi = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// [[cos phi, -sin phi, x], [sin phi, cos phi, y], [0, 0, 1]]
struct E2Element {
  double phi = 0.0;
  double x = 0.0;
  double y = 0.0;
  Eigen::Matrix3d matrix = Eigen::Matrix3d::Identity();
};

using Triple = std::array<double, 3>;

/// Left-invariant forms as coefficient triples against (dphi, dx, dy).
struct CotangentSample {
  E2Point point;
  Triple omega_phi{};
  Triple omega_x{};
  Triple omega_y{};
};

/// Left-invariant vector fields as coefficient triples against (d/dphi, d/dx, d/dy).
struct VectorFieldSample {
  E2Point point;
  Triple e_phi{};
  Triple e_x{};
  Triple e_y{};
};

E2Element e2_matrix(double phi, double x, double y);

/// Closed-form inverse; the translation column is
/// (-x cos phi - y sin phi, x sin phi - y cos phi).
E2Element e2_inverse(const E2Element& g);

/// omega^phi = dphi, omega^x = cos phi dx + sin phi dy, omega^y = -sin phi dx + cos phi dy.
CotangentSample maurer_cartan(const E2Point& p);

/// g^{-1} dg from central differences of e2_matrix, decomposed on the
/// generators g_phi = E10 - E01, g_x = E02, g_y = E12.
CotangentSample maurer_cartan_finite_difference(const E2Point& p, double step = 1e-5);

/// Max residual of d omega^phi = 0, d omega^x = omega^phi ^ omega^y and
/// d omega^y = omega^x ^ omega^phi, with exterior derivatives by central
/// differences. Requires step in (0, 1e-3].
double structure_equations_check(const E2Point& p, double step = 1e-5);

/// e_phi = d/dphi, e_x = cos phi d/dx + sin phi d/dy, e_y = -sin phi d/dx + cos phi d/dy.
VectorFieldSample vector_fields(const E2Point& p);

/// Max |<omega^a, e_b> - delta_ab|.
double duality_residual(const E2Point& p);

using TestFunction = std::function<double(const E2Point&)>;

/// |([e_phi,e_x] - e_y) f|, |([e_phi,e_y] + e_x) f| and |[e_x,e_y] f| at p,
/// from nested central directional derivatives.
Triple field_commutator_check(const TestFunction& f, const E2Point& p, double step = 1e-4);

struct FiducialResidual {
  Branch branch = Branch::Plus;
  double phi = 0.0;
  /// dA/dx + dA/dy, i.e. the coordinate reading of e_x + e_y.
  double coordinate = 0.0;
  /// (e_x + e_y) A with the rotated fields returned by vector_fields.
  double field = 0.0;
  /// The field residual again, by central differences of fiducial_A.
  double field_finite_difference = 0.0;
};

/// A is linear in (x, y), so the first two entries are exact up to rounding.
FiducialResidual fiducial_annihilation_check(double x, double y, double phi, Branch branch);

}  // namespace mpstates
