#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mpstates/cli.hpp"
#include "mpstates/coset_geometry.hpp"
#include "mpstates/mp2_algebra.hpp"
#include "mpstates/overlaps.hpp"
#include "mpstates/wigner.hpp"

namespace py = pybind11;
using namespace mpstates;

namespace {

TruncationPolicy policy(std::size_t n_max) {
  TruncationPolicy p{n_max};
  p.validate();
  return p;
}

Parity parity_of(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

Branch branch_of(const std::string& s) {
  if (s == "plus") return Branch::Plus;
  if (s == "minus") return Branch::Minus;
  throw std::invalid_argument("branch must be 'plus' or 'minus'");
}

Sector sector_of(const std::string& s) {
  if (s == "even") return Sector::Even;
  if (s == "odd") return Sector::Odd;
  if (s == "full") return Sector::Full;
  throw std::invalid_argument("sector must be 'even', 'odd' or 'full'");
}

Eigen::VectorXcd to_eigen(const FockVector& v) {
  return Eigen::Map<const Eigen::VectorXcd>(v.coeffs().data(), static_cast<Eigen::Index>(v.size()));
}

CosetLabel coset_label(cplx alpha, double phi, double x, double y, const std::string& branch) {
  CosetLabel l{alpha, phi, x, y, branch_of(branch)};
  l.validate();
  return l;
}

}  // namespace

PYBIND11_MODULE(_mpstates, m) {
  m.doc() = "Metaplectic coherent states: overlaps, algebra, E(2) geometry and Wigner data";

  py::register_exception<cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<OverlapResult>(m, "OverlapResult")
      .def_readonly("series_value", &OverlapResult::series_value)
      .def_readonly("closed_form_value", &OverlapResult::closed_form_value)
      .def_readonly("tail_bound", &OverlapResult::tail_bound)
      .def_readonly("n_used", &OverlapResult::n_used)
      .def("tolerance", &OverlapResult::tolerance)
      .def("discrepancy", &OverlapResult::discrepancy)
      .def("agrees", &OverlapResult::agrees)
      .def("__repr__", [](const OverlapResult& r) {
        std::ostringstream os;
        os << "OverlapResult(series=" << r.series_value << ", tail_bound=" << r.tail_bound << ")";
        return os.str();
      });

  // States and operators.
  m.def("mp2_state",
        [](cplx omega, const std::string& sector, std::size_t n_max) {
          return to_eigen(mp2_state({omega, sector_of(sector)}, policy(n_max)));
        },
        py::arg("omega"), py::arg("sector") = "full", py::arg("n_max") = 200);
  m.def("coset_state",
        [](cplx alpha, double phi, double x, double y, const std::string& branch, std::size_t n_max) {
          return to_eigen(coset_state_coeffs(coset_label(alpha, phi, x, y, branch), policy(n_max)));
        },
        py::arg("alpha"), py::arg("phi") = 0.0, py::arg("x") = 1.0, py::arg("y") = 0.0,
        py::arg("branch") = "plus", py::arg("n_max") = 200);
  m.def("mp2_generators", [](std::size_t n_max) {
    const auto g = build_mp2_generators(n_max);
    return py::make_tuple(g.t1.entries, g.t2.entries, g.t3.entries);
  });
  m.def("check_commutators",
        [](std::size_t n_max, std::size_t band) {
          const auto r = check_commutators(n_max, band);
          return py::dict(py::arg("interior") = r.max_interior_deviation,
                          py::arg("full") = r.max_full_deviation);
        },
        py::arg("n_max") = 64, py::arg("boundary_band") = 4);
  m.def("casimir_spectrum", &casimir_spectrum, py::arg("n_max") = 64);

  // Overlaps.
  m.def("circle_sector_overlap",
        [](double phi, cplx omega, const std::string& parity, std::size_t n_max) {
          return circle_sector_overlap(PhasePoint(phi), omega, parity_of(parity), policy(n_max));
        },
        py::arg("phi"), py::arg("omega"), py::arg("parity"), py::arg("n_max") = 200);
  m.def("circle_total_overlap",
        [](double phi, cplx omega, std::size_t n_max) {
          return circle_total_overlap(PhasePoint(phi), omega, policy(n_max));
        },
        py::arg("phi"), py::arg("omega"), py::arg("n_max") = 200);
  m.def("circle_norm_sq_displayed_closed_form", &circle_norm_sq_displayed_closed_form);
  m.def("circle_norm_sq_termwise_closed_form", &circle_norm_sq_termwise_closed_form);
  m.def("london_overlap", &london_overlap, py::arg("phi"), py::arg("phi_prime"),
        py::arg("regularizer") = kDefaultLondonRegularizer);
  m.def("london_overlap_series", &london_overlap_series, py::arg("phi"), py::arg("phi_prime"),
        py::arg("regularizer") = kDefaultLondonRegularizer);
  m.def("cylinder_total_overlap",
        [](double l, double phi, cplx omega, std::size_t n_max) {
          return cylinder_total_overlap({l, phi}, omega, policy(n_max));
        },
        py::arg("l"), py::arg("phi"), py::arg("omega"), py::arg("n_max") = 200);
  m.def("coset_total_overlap",
        [](cplx alpha, double phi, cplx omega, bool normalized, double x, double y,
           std::size_t n_max) {
          return coset_total_overlap(coset_label(alpha, phi, x, y, "plus"), omega, normalized,
                                     policy(n_max));
        },
        py::arg("alpha"), py::arg("phi"), py::arg("omega"), py::arg("normalized") = true,
        py::arg("x") = 1.0, py::arg("y") = 0.0, py::arg("n_max") = 200);
  m.def("coset_z_prime", [](cplx alpha, double phi, cplx omega) {
    return coset_z_prime(CosetLabel{alpha, phi}, omega);
  });
  m.def("weak_identity_matrix",
        [](cplx alpha, std::size_t n_max, std::size_t points) {
          return weak_identity_matrix(alpha, n_max, points).entries;
        },
        py::arg("alpha"), py::arg("n_max") = 32, py::arg("quadrature_points") = 512);

  // Geometry.
  m.def("e2_matrix", [](double phi, double x, double y) { return e2_matrix(phi, x, y).matrix; });
  m.def("e2_inverse", [](double phi, double x, double y) {
    return e2_inverse(e2_matrix(phi, x, y)).matrix;
  });
  m.def("structure_equations_check",
        [](double phi, double x, double y, double step) {
          return structure_equations_check({phi, x, y}, step);
        },
        py::arg("phi"), py::arg("x"), py::arg("y"), py::arg("step") = 1e-5);
  m.def("field_commutator_check",
        [](const std::function<double(double, double, double)>& f, double phi, double x, double y,
           double step) {
          const TestFunction tf = [&f](const E2Point& q) { return f(q.phi, q.x, q.y); };
          return field_commutator_check(tf, {phi, x, y}, step);
        },
        py::arg("f"), py::arg("phi"), py::arg("x"), py::arg("y"), py::arg("step") = 1e-4);
  m.def("fiducial_annihilation_check",
        [](double x, double y, double phi, const std::string& branch) {
          const auto r = fiducial_annihilation_check(x, y, phi, branch_of(branch));
          return py::dict(py::arg("coordinate") = r.coordinate, py::arg("field") = r.field,
                          py::arg("field_finite_difference") = r.field_finite_difference);
        });

  // Wigner.
  m.def("exp_integral_Ei", &exp_integral_Ei);
  m.def("wigner_mm_approx", [](cplx z) { return wigner_mm_approx(z).value; });
  m.def("wigner_direct",
        [](cplx z, std::size_t cutoff, int radial, int angular, double radius) {
          const auto s = wigner_direct(z, cutoff, QuadratureSpec{radial, angular, radius});
          return py::dict(py::arg("value") = s.value, py::arg("imag_part") = s.imag_part,
                          py::arg("eta_radius_used") = s.eta_radius_used);
        },
        py::arg("z"), py::arg("n_pair_cutoff") = 16, py::arg("radial_points") = 32,
        py::arg("angular_points") = 64, py::arg("eta_radius") = 1.0);

  // Command-line plumbing.
  m.def("sweep",
        [](const std::string& quantity, double omega_min, double omega_max, int omega_count,
           int phi_count, cplx alpha) {
          cli::SweepConfig c;
          c.quantity = cli::parse_quantity(quantity);
          c.omega_abs = {omega_min, omega_max, omega_count};
          c.phi_count = phi_count;
          c.alpha = alpha;
          c.output_path = "-";
          const auto t = cli::build_sweep(c);
          return py::make_tuple(t.columns, t.rows);
        },
        py::arg("quantity"), py::arg("omega_min"), py::arg("omega_max"), py::arg("omega_count"),
        py::arg("phi_count") = 64, py::arg("alpha") = cplx(0.0, 1.0));
  m.def("run_check", [](const std::string& suite) {
    const auto r = cli::run_check(suite);
    py::list details;
    for (const auto& d : r.details) {
      details.append(py::dict(py::arg("name") = d.name, py::arg("residual") = d.residual,
                              py::arg("tolerance") = d.tolerance,
                              py::arg("informational") = d.informational,
                              py::arg("passed") = d.passed()));
    }
    return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed,
                    py::arg("failed") = r.failed, py::arg("worst_residual") = r.worst_residual,
                    py::arg("details") = details);
  });
  m.def("reconcile_json", [] { return cli::build_reconcile_report().dump(); });
}
