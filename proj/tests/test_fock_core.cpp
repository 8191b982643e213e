#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mpstates/fock_core.hpp"

using namespace mpstates;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

// |z/2|^k / sqrt(k!) with k = level, in 50-digit arithmetic.
double oracle_abs_term(double abs_z, unsigned level) {
  big v = 1;
  big half = big(abs_z) / 2;
  for (unsigned j = 1; j <= level; ++j) v *= half / boost::multiprecision::sqrt(big(j));
  return static_cast<double>(v);
}

}  // namespace

TEST_CASE("log_factorial is exact for small n and continuous past 20") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
  CHECK(log_factorial(21) - log_factorial(20) == doctest::Approx(std::log(21.0)).epsilon(1e-12));
}

TEST_CASE("series_term matches a 50-digit product") {
  for (double r : {0.05, 0.5, 0.99}) {
    for (std::size_t n : {0u, 1u, 7u, 40u, 150u}) {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const double expect = oracle_abs_term(r, static_cast<unsigned>(fock_level(n, p)));
        const double got = std::abs(series_term(cplx(r, 0.0), n, p));
        if (expect == 0.0) {
          CHECK(got == 0.0);
        } else {
          CHECK(got == doctest::Approx(expect).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("series_term carries the phase of z^k") {
  const cplx z = std::polar(0.7, 1.3);
  const cplx t = series_term(z, 3, Parity::Odd);
  CHECK(std::arg(t / std::abs(t)) == doctest::Approx(std::remainder(7 * 1.3, 2 * kPi)).epsilon(1e-12));
  CHECK(series_term(cplx{}, 0, Parity::Even) == cplx(1.0, 0.0));
  CHECK(series_term(cplx{}, 0, Parity::Odd) == cplx(0.0, 0.0));
}

TEST_CASE("series_term stays finite far past double factorial overflow") {
  const cplx t = series_term(cplx(0.999, 0.0), 2000, Parity::Even);
  CHECK(std::isfinite(t.real()));
  CHECK(t == cplx(0.0, 0.0));
}

TEST_CASE("tail bound dominates the actual tail") {
  for (double r : {0.3, 0.9, 0.999}) {
    for (std::size_t cut : {2u, 5u, 10u}) {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        double tail = 0.0;
        for (std::size_t n = cut + 1; n < cut + 60; ++n) tail += std::abs(series_term(r, n, p));
        const double bound = series_tail_bound(r, cut, p);
        CHECK(bound >= tail);
        CHECK(bound <= 2.0 * tail + 1e-300);
      }
    }
  }
  CHECK(truncation_tail_bound(0.9, TruncationPolicy{}, Parity::Even) < 1e-300);
}

TEST_CASE("TruncationPolicy rejects tiny cutoffs") {
  CHECK_THROWS_AS(TruncationPolicy({4, 1e-14}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TruncationPolicy({16, 0.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW(TruncationPolicy{}.validate());
}

TEST_CASE("FockVector enforces its sector") {
  FockVector even(8, Sector::Even);
  CHECK_NOTHROW(even.set(2, 1.0));
  CHECK_THROWS_AS(even.set(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FockVector({1.0, 1.0}, Sector::Even), std::invalid_argument);
  CHECK_THROWS_AS(FockVector({1.0, std::nan("")}, Sector::Full), std::invalid_argument);

  FockVector odd(8, Sector::Odd);
  odd.set(1, cplx(0.0, 2.0));
  even += odd;
  CHECK(even.sector() == Sector::Full);
  CHECK(even.norm_sq() == doctest::Approx(5.0));
  CHECK(join(Sector::Even, Sector::Even) == Sector::Even);
}

TEST_CASE("dot is bilinear and inner is sesquilinear") {
  const FockVector a({cplx(0, 1), 2.0}, Sector::Full);
  const FockVector b({cplx(0, 1), 1.0}, Sector::Full);
  CHECK(dot(a, b) == cplx(1.0, 0.0));
  CHECK(inner(a, b) == cplx(3.0, 0.0));
  CHECK(inner(a, a).real() == doctest::Approx(a.norm_sq()));
}
