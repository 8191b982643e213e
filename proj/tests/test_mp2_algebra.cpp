#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mpstates/mp2_algebra.hpp"

using namespace mpstates;

TEST_CASE("ladder operators") {
  const auto [a, ad] = build_ladder(6);
  CHECK(a.entries(0, 1) == cplx(1.0, 0.0));
  CHECK(a.entries(2, 3) == cplx(std::sqrt(3.0), 0.0));
  CHECK(ad.entries(3, 2) == cplx(std::sqrt(3.0), 0.0));
  const Eigen::MatrixXcd c = commutator(a.entries, ad.entries);
  // [a, a+] = 1 except in the last row, where truncation shows.
  CHECK(max_abs_block(c - Eigen::MatrixXcd::Identity(7, 7), 6) < 1e-14);
  CHECK(std::abs(c(6, 6) - cplx(-6.0, 0.0)) < 1e-14);
  CHECK_THROWS_AS(build_ladder(3), std::invalid_argument);
}

TEST_CASE("Mp(2) commutators hold away from the cutoff") {
  const auto r = check_commutators(64);
  CHECK(r.max_interior_deviation <= 1e-12);
  CHECK(r.max_full_deviation > 1.0);  // the truncation corner is genuinely wrong
  CHECK_THROWS_AS(check_commutators(6), std::invalid_argument);
}

TEST_CASE("Casimir is -3/16 on the interior") {
  const auto diag = casimir_spectrum(64);
  REQUIRE(diag.size() == 61);
  for (double v : diag) CHECK(v == doctest::Approx(-3.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("T3 is diagonal with entries -(n + 1/2)/2") {
  const auto g = build_mp2_generators(64);
  for (Eigen::Index n = 0; n <= 62; ++n) {
    CHECK(std::abs(g.t3.entries(n, n) - cplx(-0.5 * (n + 0.5), 0.0)) <= 1e-13);
  }
  CHECK(std::abs(g.t3.entries(1, 2)) == 0.0);
  CHECK((g.t1.entries - g.t1.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("generators act within each parity sector") {
  const auto g = build_mp2_generators(16);
  FockVector v(16, Sector::Even);
  v.set(4, 1.0);
  const FockVector out = g.t1.apply(v);
  CHECK(out.sector() == Sector::Even);
  CHECK(std::abs(out[6]) > 0.0);
  CHECK(std::abs(out[2]) > 0.0);
}

TEST_CASE("sector projectors are complementary") {
  const auto pe = sector_projector(Parity::Even, 10).entries;
  const auto po = sector_projector(Parity::Odd, 10).entries;
  CHECK((pe + po - Eigen::MatrixXcd::Identity(11, 11)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((pe * po).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("position, momentum and circle operators") {
  const auto [q, p] = build_position_momentum(20);
  const Eigen::MatrixXcd c = commutator(q.entries, p.entries);
  CHECK(std::abs(c(3, 3) - cplx(0.0, 1.0)) < 1e-14);
  const auto circ = build_circle_operators(10);
  FockVector v(10, Sector::Full);
  v.set(2, 1.0);
  CHECK(circ.u.apply(v)[3] == cplx(1.0, 0.0));
  CHECK(circ.u_dag.apply(v)[1] == cplx(1.0, 0.0));
  CHECK(circ.j.apply(v)[2] == cplx(2.0, 0.0));
  // [J, U] = U on the untruncated part.
  const Eigen::MatrixXcd ju = commutator(circ.j.entries, circ.u.entries) - circ.u.entries;
  CHECK(ju.cwiseAbs().maxCoeff() < 1e-15);
}
