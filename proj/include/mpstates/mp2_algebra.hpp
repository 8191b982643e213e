#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "mpstates/fock_core.hpp"

namespace mpstates {

enum class OperatorLabel { A, ADag, Q, P, T1, T2, T3, U, UDag, J, Projector, Other };

const char* to_string(OperatorLabel l);

/// Dense truncated operator on span{|0>, ..., |n_max>}.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  OperatorLabel label = OperatorLabel::Other;

  std::size_t n_max() const { return static_cast<std::size_t>(entries.rows()) - 1; }
  FockVector apply(const FockVector& v) const;
};

struct LadderPair {
  OperatorMatrix a;
  OperatorMatrix a_dag;
};

struct Mp2Generators {
  OperatorMatrix t1;
  OperatorMatrix t2;
  OperatorMatrix t3;
};

/// Worst deviation of the three Mp(2) commutation relations.
struct CommutatorReport {
  double max_interior_deviation = 0.0;  // over rows/cols n <= n_max - boundary_band
  double max_full_deviation = 0.0;      // over the whole truncated matrix
  std::size_t boundary_band = 4;
};

/// Annihilation and creation operators, a[n-1, n] = sqrt(n). Requires n_max >= 4.
LadderPair build_ladder(std::size_t n_max);

/// T1 = (i/4)(a+^2 - a^2), T2 = -(1/4)(a+^2 + a^2), T3 = -(1/4)(a+ a + a a+),
/// formed by matrix products of the truncated ladder operators.
Mp2Generators build_mp2_generators(std::size_t n_max);

/// Position and momentum Q = (a + a+)/sqrt2, P = i(a+ - a)/sqrt2.
std::pair<OperatorMatrix, OperatorMatrix> build_position_momentum(std::size_t n_max);

/// Unit-coefficient shift U|j> = |j+1>, its adjoint, and J|j> = j|j>, on
/// the nonnegative-index basis identified with the oscillator levels.
struct CircleOperators {
  OperatorMatrix u;
  OperatorMatrix u_dag;
  OperatorMatrix j;
};
CircleOperators build_circle_operators(std::size_t n_max);

/// Checks [T1,T2] = -iT3, [T3,T1] = iT2, [T3,T2] = -iT1. Requires n_max >= 8.
CommutatorReport check_commutators(std::size_t n_max, std::size_t boundary_band = 4);

/// Diagonal of T3^2 - T1^2 - T2^2 for n = 0 .. n_max - 4. Requires n_max >= 8.
std::vector<double> casimir_spectrum(std::size_t n_max);

/// Diagonal projector onto even or odd levels. Requires n_max >= 2.
OperatorMatrix sector_projector(Parity parity, std::size_t n_max);

/// [A, B] = AB - BA.
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Max |M(i,j)| over i, j < extent.
double max_abs_block(const Eigen::MatrixXcd& m, std::size_t extent);

}  // namespace mpstates
