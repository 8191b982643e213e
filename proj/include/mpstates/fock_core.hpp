#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mpstates {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Parity of a sector series: Even sums (z/2)^{2n}/sqrt((2n)!), Odd sums
/// (z/2)^{2n+1}/sqrt((2n+1)!).
enum class Parity { Even, Odd };

/// Support of a Fock vector: even levels, odd levels, or both.
enum class Sector { Even, Odd, Full };

const char* to_string(Parity p);
const char* to_string(Sector s);

/// Fock-level exponent of series index n: 2n (Even) or 2n+1 (Odd).
inline std::size_t fock_level(std::size_t n, Parity p) {
  return p == Parity::Even ? 2 * n : 2 * n + 1;
}

/// Cutoff and tolerance for every truncated series.
///
/// For Fock vectors n_max is the highest basis level kept. For the sector
/// series in the overlap routines it is the highest series index kept, so
/// the highest Fock level touched is 2 n_max + 1.
struct TruncationPolicy {
  std::size_t n_max = 200;
  double tail_tol = 1e-14;

  /// Throws std::invalid_argument unless n_max >= 8 and tail_tol > 0.
  void validate() const;
};

/// Finite coefficient vector over |0>, ..., |n_max> tagged with its sector.
class FockVector {
 public:
  FockVector() = default;
  /// Zero vector of dimension n_max + 1.
  FockVector(std::size_t n_max, Sector sector);
  /// Throws std::invalid_argument if an entry is non-finite or lies outside
  /// the declared sector.
  FockVector(std::vector<cplx> coeffs, Sector sector);

  std::size_t size() const { return coeffs_.size(); }
  std::size_t n_max() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Sector sector() const { return sector_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator[](std::size_t n) const { return coeffs_[n]; }

  /// Sets one amplitude; the level must be allowed by the sector.
  void set(std::size_t n, cplx value);

  double norm_sq() const;

  FockVector& operator*=(cplx s);
  /// Sector of the sum is the join of both sectors (Even + Odd = Full).
  /// Dimensions must match.
  FockVector& operator+=(const FockVector& other);

 private:
  std::vector<cplx> coeffs_;
  Sector sector_ = Sector::Full;
};

FockVector operator*(cplx s, FockVector v);
FockVector operator+(FockVector a, const FockVector& b);

/// Join of two sector tags under addition.
Sector join(Sector a, Sector b);

/// Bilinear pairing sum_n a_n b_n over the common range of levels.
cplx dot(const FockVector& a, const FockVector& b);
/// Hermitian inner product sum_n conj(a_n) b_n over the common range.
cplx inner(const FockVector& a, const FockVector& b);

/// ln(n!). Exact product for n <= 20, lgamma above.
double log_factorial(std::size_t n);

/// (z/2)^k / sqrt(k!) with k = 2n (Even) or 2n+1 (Odd), evaluated as
/// exp(k ln|z/2| - ln(k!)/2) times the unit phase e^{i k arg z}.
cplx series_term(cplx z, std::size_t n, Parity parity);

/// ln|series_term(z, n, parity)|; -inf when z == 0 and the level is positive.
double log_abs_series_term(double abs_z, std::size_t n, Parity parity);

/// Upper bound on sum_{n > n_max} |series_term(z, n, parity)| for |z| < 1.
///
/// The ratio of consecutive term moduli, (|z|/2)^2 / sqrt((k+1)(k+2)), is
/// decreasing in n, so the first dropped term times 1/(1 - r) with r the
/// ratio at the first dropped index bounds the whole tail.
double truncation_tail_bound(double abs_z, const TruncationPolicy& policy, Parity parity);

/// Same bound for an arbitrary cutoff and |z|; returns +inf when the ratio
/// at the first dropped index is not below one.
double series_tail_bound(double abs_z, std::size_t n_max, Parity parity);

}  // namespace mpstates
