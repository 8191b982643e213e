#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mpstates/overlaps.hpp"

using namespace mpstates;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

const TruncationPolicy kPolicy{};

// Fock-level expansion with enough levels to hold 2 n_max + 1.
TruncationPolicy fock_policy(const TruncationPolicy& series) { return {2 * series.n_max + 1}; }

// 50-digit sum_{k>=0} (r/2)^k/sqrt(k!) (1-r^2)^{s_k} for real r.
double oracle_circle_total(double r) {
  big term = 1, sum = 0;
  const big half = big(r) / 2;
  const big q = 1 - big(r) * big(r);
  const big even_pre = boost::multiprecision::pow(q, big(0.25));
  const big odd_pre = boost::multiprecision::pow(q, big(0.75));
  for (int k = 0; k < 400; ++k) {
    if (k > 0) term *= half / boost::multiprecision::sqrt(big(k));
    sum += term * (k % 2 == 0 ? even_pre : odd_pre);
  }
  return static_cast<double>(sum / boost::multiprecision::sqrt(2 * boost::math::constants::pi<big>()));
}

}  // namespace

TEST_CASE("circle overlap matches a 50-digit oracle") {
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const auto t = circle_total_overlap(PhasePoint(0.0), r, kPolicy);
    CHECK(t.series_value.real() == doctest::Approx(oracle_circle_total(r)).epsilon(1e-14));
    CHECK(t.agrees());
  }
}

TEST_CASE("circle sector overlap equals the Fock-space pairing") {
  const TruncationPolicy series{20};
  const auto fp = fock_policy(series);
  const cplx w = std::polar(0.7, 0.4);
  const PhasePoint phi(1.1);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto state = mp2_state({w, p == Parity::Even ? Sector::Even : Sector::Odd}, fp);
    const cplx fock = dot(london_bra_coeffs(phi, fp), state);
    CHECK(std::abs(circle_sector_overlap(phi, w, p, series).series_value - fock) < 1e-15);
  }
}

TEST_CASE("circle norm: termwise sum resums with r^2/4") {
  for (double r : {0.1, 0.5, 0.9}) {
    const auto n = circle_total_norm_sq(r, kPolicy);
    CHECK(n.series_value.real() ==
          doctest::Approx(circle_norm_sq_termwise_closed_form(r)).epsilon(1e-14));
  }
  // The printed closed form (r^2/2) is a different function.
  CHECK(std::abs(circle_total_norm_sq(0.5, kPolicy).discrepancy()) > 1e-2);
  CHECK(circle_norm_sq_displayed_closed_form(0.0) == 1.0);
}

TEST_CASE("coherent circle norm depends on phi") {
  const double a = circle_total_norm_sq_coherent(PhasePoint(0.0), 0.5, kPolicy);
  const double b = circle_total_norm_sq_coherent(PhasePoint(1.0), 0.5, kPolicy);
  CHECK(a == doctest::Approx(1.390).epsilon(1e-3));
  CHECK(b == doctest::Approx(1.077).epsilon(1e-3));
}

TEST_CASE("London overlap conventions") {
  const double r = 0.05;
  for (double d : {0.0, 0.3, 2.0}) {
    const cplx s = london_overlap_series(d, 0.0, r);
    CHECK(std::abs(s - london_overlap(d, 0.0, r)) <= 1e-12 * std::abs(s));
    CHECK(std::abs(london_overlap_displayed(d, 0.0, r) - std::conj(london_overlap(d, 0.0, r))) <
          1e-14);
  }
  CHECK_THROWS_AS(london_overlap(0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(london_overlap_series(0.0, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("cylinder overlap equals the bilinear Fock pairing") {
  const TruncationPolicy series{20};
  const auto fp = fock_policy(series);
  const CylinderLabel lab{0.4, 0.9};
  const cplx w = std::polar(0.8, -0.3);
  const cplx fock = dot(cylinder_ket_coeffs(lab, fp), mp2_state({w, Sector::Full}, fp));
  const auto t = cylinder_total_overlap(lab, w, series);
  CHECK(std::abs(t.series_value - fock) < 1e-15);
  CHECK(t.agrees());
  CHECK(std::abs(cylinder_total_overlap_displayed(lab, w, series) - t.series_value) > 1e-3);
}

TEST_CASE("cylinder weights suppress high orders") {
  const CylinderLabel lab{};
  const double ratio = std::abs(cylinder_series_term(lab, 0.9, 3, Parity::Even)) /
                       std::abs(circle_series_term(PhasePoint(0.0), 0.9, 3, Parity::Even));
  CHECK(ratio == doctest::Approx(std::exp(-18.0)).epsilon(1e-12));
}

TEST_CASE("cylinder norm report is self-consistent") {
  const auto rep = cylinder_total_norm_sq(0.5, 0.0, kPolicy);
  CHECK(rep.prefactor == doctest::Approx(std::sqrt(0.75)));
  CHECK(rep.ratio == doctest::Approx(rep.direct / rep.g_form));
  CHECK(rep.direct > 0.0);
}

TEST_CASE("coset overlap against the Fock-space inner product") {
  const TruncationPolicy series{30};
  const auto fp = fock_policy(series);
  const CosetLabel lab{{0.4, 0.6}, 0.8, 1.0, 0.3};
  const cplx w = std::polar(0.5, 0.2);
  const cplx zp = coset_z_prime(lab, w);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const double s = p == Parity::Even ? 0.25 : 0.75;
    const auto sector = p == Parity::Even ? Sector::Even : Sector::Odd;
    const cplx fock = inner(coset_state_coeffs(lab, fp), mp2_state({w, sector}, fp));
    const cplx formula = coset_sector_overlap(lab, w, p, true, series).series_value;
    // The z'-form prefactor differs from the Fock one by ((1-|w|^2)/(1-|z'|^2))^s.
    const double rescale = std::pow((1 - std::norm(w)) / (1 - std::norm(zp)), s);
    CHECK(std::abs(formula * rescale - fock) < 1e-14);
  }
}

TEST_CASE("coset total overlap single-sum arrangement") {
  const CosetLabel lab{{-0.2, 1.5}, 2.0};
  for (bool normalized : {true, false}) {
    CHECK(coset_total_overlap(lab, std::polar(0.95, 1.0), normalized, kPolicy).agrees());
  }
  CHECK(std::abs(coset_z_prime(lab, 0.9)) == doctest::Approx(0.9 * std::exp(-0.75)));
  CHECK_THROWS_AS(coset_total_overlap(lab, 1.0, true, kPolicy), std::invalid_argument);
}

TEST_CASE("coset norm report") {
  const auto rep = coset_total_norm_sq(CosetLabel{{0.0, 1.0}, 0.5}, 0.8, kPolicy);
  CHECK(rep.termwise == doctest::Approx(rep.termwise_rearranged).epsilon(1e-14));
  CHECK(rep.z_prime_abs == doctest::Approx(0.8 * std::exp(-0.5)));
  CHECK(std::abs(rep.termwise - rep.displayed) > 1e-3);
}

TEST_CASE("coset pair overlap matches normalized states rescaled by |S|") {
  const TruncationPolicy fp{300};
  const CosetLabel a{{0.3, 0.5}, 0.7, 1.0, 0.2};
  const CosetLabel b{{-0.4, 0.9}, 2.1, 0.5, 0.5};
  const auto pair = coset_pair_overlap(b, a, fp);
  CHECK(pair.agrees());
  const double scale = std::abs(coset_S(a.alpha, a.phi, a.x, a.y)) *
                       std::abs(coset_S(b.alpha, b.phi, b.x, b.y)) /
                       (2 * kPi * std::abs(coset_normalization(a)) * std::abs(coset_normalization(b)));
  const cplx fock = inner(coset_state_coeffs(b, fp), coset_state_coeffs(a, fp)) * scale;
  CHECK(std::abs(pair.series_value - fock) < 1e-13 * std::abs(fock));
}

TEST_CASE("weak identity resolution is diagonal with e^{-n Im a}") {
  const auto m = weak_identity_matrix(cplx(0.0, 1.0), 32, 512).entries;
  for (Eigen::Index i = 0; i <= 32; ++i) {
    for (Eigen::Index j = 0; j <= 32; ++j) {
      const double expect = i == j ? std::exp(-static_cast<double>(i)) : 0.0;
      CHECK(std::abs(m(i, j) - expect) <= (i == j ? 1e-10 : 1e-12));
    }
  }
  CHECK_THROWS_AS(weak_identity_matrix(cplx(0.0, 1.0), 32, 64), std::invalid_argument);
  CHECK_THROWS_AS(weak_identity_matrix(cplx(0.0, 0.0), 8, 64), std::invalid_argument);
}
