#include "mpstates/mp2_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mpstates {

const char* to_string(OperatorLabel l) {
  switch (l) {
    case OperatorLabel::A: return "a";
    case OperatorLabel::ADag: return "a+";
    case OperatorLabel::Q: return "Q";
    case OperatorLabel::P: return "P";
    case OperatorLabel::T1: return "T1";
    case OperatorLabel::T2: return "T2";
    case OperatorLabel::T3: return "T3";
    case OperatorLabel::U: return "U";
    case OperatorLabel::UDag: return "U+";
    case OperatorLabel::J: return "J";
    case OperatorLabel::Projector: return "P_sector";
    case OperatorLabel::Other: return "other";
  }
  return "?";
}

namespace {

void require_min(std::size_t n_max, std::size_t lo, const char* who) {
  if (n_max < lo) {
    throw std::invalid_argument(std::string(who) + ": n_max must be >= " + std::to_string(lo));
  }
}

Eigen::Index dim(std::size_t n_max) { return static_cast<Eigen::Index>(n_max + 1); }

}  // namespace

FockVector OperatorMatrix::apply(const FockVector& v) const {
  if (v.size() != static_cast<std::size_t>(entries.cols())) {
    throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
  }
  Eigen::VectorXcd x(entries.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = v[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd y = entries * x;
  std::vector<cplx> out(y.data(), y.data() + y.size());
  // A sector tag survives only if the result still lives on one parity.
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (out[n] == cplx{}) continue;
    (n % 2 == 0 ? has_even : has_odd) = true;
  }
  Sector s = Sector::Full;
  if (v.sector() != Sector::Full) {
    if (!has_even && !has_odd) s = v.sector();
    else if (!has_odd) s = Sector::Even;
    else if (!has_even) s = Sector::Odd;
  }
  return FockVector(std::move(out), s);
}

LadderPair build_ladder(std::size_t n_max) {
  require_min(n_max, 4, "build_ladder");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim(n_max), dim(n_max));
  for (Eigen::Index n = 1; n < dim(n_max); ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  Eigen::MatrixXcd ad = a.adjoint();
  return {{std::move(a), OperatorLabel::A}, {std::move(ad), OperatorLabel::ADag}};
}

Mp2Generators build_mp2_generators(std::size_t n_max) {
  const auto [a, ad] = build_ladder(n_max);
  const Eigen::MatrixXcd a2 = a.entries * a.entries;
  const Eigen::MatrixXcd ad2 = ad.entries * ad.entries;
  const cplx i{0.0, 1.0};
  Eigen::MatrixXcd t1 = (i / 4.0) * (ad2 - a2);
  Eigen::MatrixXcd t2 = -0.25 * (ad2 + a2);
  Eigen::MatrixXcd t3 = -0.25 * (ad.entries * a.entries + a.entries * ad.entries);
  return {{std::move(t1), OperatorLabel::T1},
          {std::move(t2), OperatorLabel::T2},
          {std::move(t3), OperatorLabel::T3}};
}

std::pair<OperatorMatrix, OperatorMatrix> build_position_momentum(std::size_t n_max) {
  const auto [a, ad] = build_ladder(n_max);
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  return {{s * (a.entries + ad.entries), OperatorLabel::Q},
          {(i * s) * (ad.entries - a.entries), OperatorLabel::P}};
}

CircleOperators build_circle_operators(std::size_t n_max) {
  require_min(n_max, 2, "build_circle_operators");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim(n_max), dim(n_max));
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(dim(n_max), dim(n_max));
  for (Eigen::Index n = 0; n < dim(n_max); ++n) {
    if (n + 1 < dim(n_max)) u(n + 1, n) = 1.0;
    j(n, n) = static_cast<double>(n);
  }
  Eigen::MatrixXcd ud = u.adjoint();
  return {{std::move(u), OperatorLabel::U},
          {std::move(ud), OperatorLabel::UDag},
          {std::move(j), OperatorLabel::J}};
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

double max_abs_block(const Eigen::MatrixXcd& m, std::size_t extent) {
  const Eigen::Index e = std::min<Eigen::Index>(static_cast<Eigen::Index>(extent), m.rows());
  if (e <= 0) return 0.0;
  return m.topLeftCorner(e, e).cwiseAbs().maxCoeff();
}

CommutatorReport check_commutators(std::size_t n_max, std::size_t boundary_band) {
  require_min(n_max, 8, "check_commutators");
  if (boundary_band < 2 || boundary_band > n_max) {
    throw std::invalid_argument("check_commutators: boundary_band must lie in [2, n_max]");
  }
  const auto g = build_mp2_generators(n_max);
  const cplx i{0.0, 1.0};
  const Eigen::MatrixXcd d1 = commutator(g.t1.entries, g.t2.entries) + i * g.t3.entries;
  const Eigen::MatrixXcd d2 = commutator(g.t3.entries, g.t1.entries) - i * g.t2.entries;
  const Eigen::MatrixXcd d3 = commutator(g.t3.entries, g.t2.entries) + i * g.t1.entries;

  CommutatorReport r;
  r.boundary_band = boundary_band;
  const std::size_t interior = n_max + 1 - boundary_band;
  for (const auto* d : {&d1, &d2, &d3}) {
    r.max_interior_deviation = std::max(r.max_interior_deviation, max_abs_block(*d, interior));
    r.max_full_deviation = std::max(r.max_full_deviation, d->cwiseAbs().maxCoeff());
  }
  return r;
}

std::vector<double> casimir_spectrum(std::size_t n_max) {
  require_min(n_max, 8, "casimir_spectrum");
  const auto g = build_mp2_generators(n_max);
  const Eigen::MatrixXcd k2 = g.t3.entries * g.t3.entries - g.t1.entries * g.t1.entries -
                              g.t2.entries * g.t2.entries;
  std::vector<double> diag;
  for (std::size_t n = 0; n + 4 <= n_max; ++n) {
    const auto idx = static_cast<Eigen::Index>(n);
    diag.push_back(k2(idx, idx).real());
  }
  return diag;
}

OperatorMatrix sector_projector(Parity parity, std::size_t n_max) {
  require_min(n_max, 2, "sector_projector");
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim(n_max), dim(n_max));
  const Eigen::Index start = parity == Parity::Even ? 0 : 1;
  for (Eigen::Index n = start; n < dim(n_max); n += 2) p(n, n) = 1.0;
  return {std::move(p), OperatorLabel::Projector};
}

}  // namespace mpstates
