#include "mpstates/coset_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpstates {

E2Element e2_matrix(double phi, double x, double y) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  E2Element g{phi, x, y, Eigen::Matrix3d::Identity()};
  g.matrix << c, -s, x,
              s, c, y,
              0.0, 0.0, 1.0;
  return g;
}

E2Element e2_inverse(const E2Element& g) {
  const double c = std::cos(g.phi);
  const double s = std::sin(g.phi);
  E2Element inv;
  inv.phi = -g.phi;
  inv.x = -g.x * c - g.y * s;
  inv.y = g.x * s - g.y * c;
  inv.matrix << c, s, inv.x,
                -s, c, inv.y,
                0.0, 0.0, 1.0;
  return inv;
}

CotangentSample maurer_cartan(const E2Point& p) {
  const double c = std::cos(p.phi);
  const double s = std::sin(p.phi);
  return {p, {1.0, 0.0, 0.0}, {0.0, c, s}, {0.0, -s, c}};
}

namespace {

E2Point shifted(const E2Point& p, const Triple& dir, double h) {
  return {p.phi + h * dir[0], p.x + h * dir[1], p.y + h * dir[2]};
}

constexpr Triple kAxes[3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};

// Components (phi-x, phi-y, x-y) of d(omega) for a coefficient field.
Triple exterior_derivative(const std::function<Triple(const E2Point&)>& form, const E2Point& p,
                           double h) {
  double d[3][3];  // d[i][j] = d_i w_j
  for (int i = 0; i < 3; ++i) {
    const Triple plus = form(shifted(p, kAxes[i], h));
    const Triple minus = form(shifted(p, kAxes[i], -h));
    for (int j = 0; j < 3; ++j) d[i][j] = (plus[j] - minus[j]) / (2.0 * h);
  }
  return {d[0][1] - d[1][0], d[0][2] - d[2][0], d[1][2] - d[2][1]};
}

Triple wedge(const Triple& a, const Triple& b) {
  return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]};
}

double max_diff(const Triple& a, const Triple& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double directional(const TestFunction& f, const E2Point& p, const Triple& v, double h) {
  return (f(shifted(p, v, h)) - f(shifted(p, v, -h))) / (2.0 * h);
}

using FieldPick = Triple VectorFieldSample::*;

double apply_field(const TestFunction& f, const E2Point& p, FieldPick e, double h) {
  return directional(f, p, vector_fields(p).*e, h);
}

// (e_a e_b f)(p)
double nested(const TestFunction& f, const E2Point& p, FieldPick a, FieldPick b, double h) {
  const TestFunction inner = [&](const E2Point& q) { return apply_field(f, q, b, h); };
  return apply_field(inner, p, a, h);
}

}  // namespace

CotangentSample maurer_cartan_finite_difference(const E2Point& p, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("maurer_cartan_finite_difference: step must be > 0");
  const Eigen::Matrix3d g_inv = e2_inverse(e2_matrix(p.phi, p.x, p.y)).matrix;
  CotangentSample out{p, {}, {}, {}};
  for (int i = 0; i < 3; ++i) {
    const E2Point a = shifted(p, kAxes[i], step);
    const E2Point b = shifted(p, kAxes[i], -step);
    const Eigen::Matrix3d dg =
        (e2_matrix(a.phi, a.x, a.y).matrix - e2_matrix(b.phi, b.x, b.y).matrix) / (2.0 * step);
    const Eigen::Matrix3d m = g_inv * dg;
    out.omega_phi[i] = m(1, 0);
    out.omega_x[i] = m(0, 2);
    out.omega_y[i] = m(1, 2);
  }
  return out;
}

double structure_equations_check(const E2Point& p, double step) {
  if (!(step > 0.0 && step <= 1e-3)) {
    throw std::invalid_argument("structure_equations_check: step must lie in (0, 1e-3]");
  }
  const auto form_phi = [](const E2Point& q) { return maurer_cartan(q).omega_phi; };
  const auto form_x = [](const E2Point& q) { return maurer_cartan(q).omega_x; };
  const auto form_y = [](const E2Point& q) { return maurer_cartan(q).omega_y; };
  const CotangentSample w = maurer_cartan(p);
  const Triple zero{};
  return std::max({max_diff(exterior_derivative(form_phi, p, step), zero),
                   max_diff(exterior_derivative(form_x, p, step), wedge(w.omega_phi, w.omega_y)),
                   max_diff(exterior_derivative(form_y, p, step), wedge(w.omega_x, w.omega_phi))});
}

VectorFieldSample vector_fields(const E2Point& p) {
  const double c = std::cos(p.phi);
  const double s = std::sin(p.phi);
  return {p, {1.0, 0.0, 0.0}, {0.0, c, s}, {0.0, -s, c}};
}

double duality_residual(const E2Point& p) {
  const CotangentSample w = maurer_cartan(p);
  const VectorFieldSample e = vector_fields(p);
  const Triple* forms[3] = {&w.omega_phi, &w.omega_x, &w.omega_y};
  const Triple* fields[3] = {&e.e_phi, &e.e_x, &e.e_y};
  double worst = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      double pair = 0.0;
      for (int k = 0; k < 3; ++k) pair += (*forms[a])[k] * (*fields[b])[k];
      worst = std::max(worst, std::abs(pair - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Triple field_commutator_check(const TestFunction& f, const E2Point& p, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("field_commutator_check: step must be > 0");
  using V = VectorFieldSample;
  const double phi_x = nested(f, p, &V::e_phi, &V::e_x, step) - nested(f, p, &V::e_x, &V::e_phi, step);
  const double phi_y = nested(f, p, &V::e_phi, &V::e_y, step) - nested(f, p, &V::e_y, &V::e_phi, step);
  const double x_y = nested(f, p, &V::e_x, &V::e_y, step) - nested(f, p, &V::e_y, &V::e_x, step);
  return {std::abs(phi_x - apply_field(f, p, &V::e_y, step)),
          std::abs(phi_y + apply_field(f, p, &V::e_x, step)), std::abs(x_y)};
}

FiducialResidual fiducial_annihilation_check(double x, double y, double phi, Branch branch) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  // Exact partial derivatives of the linear form A.
  const double ax = branch == Branch::Plus ? c + s : c - s;
  const double ay = branch == Branch::Plus ? -c + s : c + s;

  const VectorFieldSample e = vector_fields({phi, x, y});
  const Triple sum{0.0, e.e_x[1] + e.e_y[1], e.e_x[2] + e.e_y[2]};

  const TestFunction a = [branch](const E2Point& q) { return fiducial_A(q.phi, q.x, q.y, branch); };
  FiducialResidual r;
  r.branch = branch;
  r.phi = phi;
  r.coordinate = ax + ay;
  r.field = sum[1] * ax + sum[2] * ay;
  // The direction has no phi component and A is linear in (x, y), so a unit
  // step is exact and keeps rounding at the level of A itself.
  r.field_finite_difference = directional(a, {phi, x, y}, sum, 1.0);
  return r;
}

}  // namespace mpstates
