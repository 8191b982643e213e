#include "mpstates/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mpstates {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* to_string(Sector s) {
  switch (s) {
    case Sector::Even:
      return "even";
    case Sector::Odd:
      return "odd";
    case Sector::Full:
      return "full";
  }
  return "?";
}

void TruncationPolicy::validate() const {
  if (n_max < 8) {
    throw std::invalid_argument("TruncationPolicy: n_max must be >= 8, got " +
                                std::to_string(n_max));
  }
  if (!(tail_tol > 0.0)) {
    throw std::invalid_argument("TruncationPolicy: tail_tol must be positive");
  }
}

namespace {

bool level_allowed(Sector s, std::size_t n) {
  switch (s) {
    case Sector::Even:
      return n % 2 == 0;
    case Sector::Odd:
      return n % 2 == 1;
    case Sector::Full:
      return true;
  }
  return false;
}

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

FockVector::FockVector(std::size_t n_max, Sector sector)
    : coeffs_(n_max + 1, cplx{0.0, 0.0}), sector_(sector) {}

FockVector::FockVector(std::vector<cplx> coeffs, Sector sector)
    : coeffs_(std::move(coeffs)), sector_(sector) {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!finite(coeffs_[n])) {
      throw std::invalid_argument("FockVector: non-finite amplitude at level " +
                                  std::to_string(n));
    }
    if (coeffs_[n] != cplx{} && !level_allowed(sector_, n)) {
      throw std::invalid_argument("FockVector: level " + std::to_string(n) +
                                  " is outside the " + to_string(sector_) + " sector");
    }
  }
}

void FockVector::set(std::size_t n, cplx value) {
  if (n >= coeffs_.size()) throw std::out_of_range("FockVector::set: level out of range");
  if (!finite(value)) throw std::invalid_argument("FockVector::set: non-finite amplitude");
  if (value != cplx{} && !level_allowed(sector_, n)) {
    throw std::invalid_argument("FockVector::set: level outside sector");
  }
  coeffs_[n] = value;
}

double FockVector::norm_sq() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

FockVector& FockVector::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("FockVector: dimension mismatch in addition");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  sector_ = join(sector_, other.sector_);
  return *this;
}

FockVector operator*(cplx s, FockVector v) {
  v *= s;
  return v;
}

FockVector operator+(FockVector a, const FockVector& b) {
  a += b;
  return a;
}

Sector join(Sector a, Sector b) { return a == b ? a : Sector::Full; }

cplx dot(const FockVector& a, const FockVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  cplx s{};
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

cplx inner(const FockVector& a, const FockVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  cplx s{};
  for (std::size_t k = 0; k < n; ++k) s += std::conj(a[k]) * b[k];
  return s;
}

double log_factorial(std::size_t n) {
  if (n <= 20) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return std::log(static_cast<double>(f));
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_abs_series_term(double abs_z, std::size_t n, Parity parity) {
  const std::size_t k = fock_level(n, parity);
  if (k == 0) return 0.0;
  if (abs_z == 0.0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(k) * std::log(abs_z / 2.0) - 0.5 * log_factorial(k);
}

cplx series_term(cplx z, std::size_t n, Parity parity) {
  const std::size_t k = fock_level(n, parity);
  if (k == 0) return {1.0, 0.0};
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  const double mag = std::exp(log_abs_series_term(r, n, parity));
  return std::polar(mag, static_cast<double>(k) * std::arg(z));
}

double series_tail_bound(double abs_z, std::size_t n_max, Parity parity) {
  if (abs_z == 0.0) return 0.0;
  const std::size_t first = n_max + 1;
  const double k = static_cast<double>(fock_level(first, parity));
  const double ratio = (abs_z / 2.0) * (abs_z / 2.0) / std::sqrt((k + 1.0) * (k + 2.0));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_abs_series_term(abs_z, first, parity)) / (1.0 - ratio);
}

double truncation_tail_bound(double abs_z, const TruncationPolicy& policy, Parity parity) {
  return series_tail_bound(abs_z, policy.n_max, parity);
}

}  // namespace mpstates
