#include "mpstates/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "mpstates/coset_geometry.hpp"
#include "mpstates/mp2_algebra.hpp"
#include "mpstates/overlaps.hpp"
#include "mpstates/states.hpp"
#include "mpstates/wigner.hpp"

namespace mpstates::cli {

namespace {

struct QuantityName {
  Quantity q;
  const char* name;
};

constexpr QuantityName kQuantities[] = {
    {Quantity::CircleNorm, "circle-norm"},   {Quantity::CylinderNorm, "cylinder-norm"},
    {Quantity::CosetNorm, "coset-norm"},     {Quantity::WignerMm, "wigner-mm"},
    {Quantity::SectorSplit, "sector-split"},
};

}  // namespace

Quantity parse_quantity(const std::string& s) {
  for (const auto& q : kQuantities) {
    if (s == q.name) return q.q;
  }
  throw ConfigError("unknown quantity '" + s + "'");
}

const char* to_string(Quantity q) {
  for (const auto& e : kQuantities) {
    if (e.q == q) return e.name;
  }
  return "?";
}

cplx parse_complex(const std::string& s) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) {
    throw ConfigError("cannot parse complex number '" + s + "' (expected <re>+<im>i)");
  }
  const double real = std::stod(m[1].str());
  const double imag_abs = m[3].matched ? std::stod(m[3].str()) : 1.0;
  return {real, m[2].str() == "-" ? -imag_abs : imag_abs};
}

std::vector<double> RangeSpec::points() const {
  std::vector<double> p(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    p[static_cast<std::size_t>(i)] = i == count - 1 ? max : min + i * (max - min) / (count - 1);
  }
  return p;
}

void SweepConfig::validate() const {
  if (omega_abs.count < 2) throw ConfigError("--omega-count must be >= 2");
  if (phi_count < 2) throw ConfigError("--phi-count must be >= 2");
  if (!std::isfinite(omega_abs.min) || !std::isfinite(omega_abs.max)) {
    throw ConfigError("omega range must be finite");
  }
  if (!(omega_abs.min < omega_abs.max)) throw ConfigError("--omega-min must be < --omega-max");
  if (omega_abs.min < 0.0) throw ConfigError("--omega-min must be >= 0");
  if (quantity == Quantity::WignerMm) {
    if (!(omega_abs.min > 0.0)) throw ConfigError("wigner-mm needs --omega-min > 0");
    if (omega_abs.max > 1.0) throw ConfigError("wigner-mm needs --omega-max <= 1");
  } else if (!(omega_abs.max < 1.0)) {
    throw ConfigError("disc quantities need --omega-max < 1");
  }
  if (quantity == Quantity::CosetNorm && !(alpha.imag() > 0.0)) {
    throw ConfigError("coset-norm needs Im(alpha) > 0");
  }
  if (output_path.empty()) throw ConfigError("--out is required");
}

std::vector<double> SweepConfig::phi_points() const {
  std::vector<double> p(static_cast<std::size_t>(phi_count));
  for (int k = 0; k < phi_count; ++k) p[static_cast<std::size_t>(k)] = kTwoPi * k / phi_count;
  return p;
}

namespace {

using Row = std::vector<double>;

struct SweepKind {
  std::vector<std::string> columns;
  std::function<Row(double r, double phi)> row;
};

SweepKind sweep_kind(const SweepConfig& c) {
  const TruncationPolicy policy{};
  switch (c.quantity) {
    case Quantity::CircleNorm:
      return {{"omega_abs", "phi", "series", "closed_form", "tail_bound", "abs_diff", "termwise",
               "termwise_closed_form"},
              [policy](double r, double phi) -> Row {
                const auto total = circle_total_overlap(PhasePoint(phi), r, policy);
                const double series = kTwoPi * std::norm(total.series_value);
                const double closed = circle_norm_sq_displayed_closed_form(r);
                const double t = total.tail_bound;
                const double tail = kTwoPi * t * (2.0 * std::abs(total.series_value) + t);
                const double termwise = circle_total_norm_sq(r, policy).series_value.real();
                return {r, phi, series, closed, tail, std::abs(series - closed), termwise,
                        circle_norm_sq_termwise_closed_form(r)};
              }};
    case Quantity::CylinderNorm:
      return {{"omega_abs", "phi", "series", "closed_form", "tail_bound", "abs_diff", "ratio",
               "prefactor"},
              [policy](double r, double phi) -> Row {
                const auto rep = cylinder_total_norm_sq(r, phi, policy);
                return {r,      phi, rep.direct, rep.g_form, rep.tail_bound,
                        std::abs(rep.direct - rep.g_form), rep.ratio, rep.prefactor};
              }};
    case Quantity::CosetNorm:
      return {{"omega_abs", "phi", "z_prime_abs", "series", "closed_form", "tail_bound",
               "abs_diff", "direct", "termwise_rearranged"},
              [policy, alpha = c.alpha](double r, double phi) -> Row {
                const auto rep = coset_total_norm_sq(CosetLabel{alpha, phi}, r, policy);
                return {r,
                        phi,
                        rep.z_prime_abs,
                        rep.termwise,
                        rep.displayed,
                        rep.tail_bound,
                        std::abs(rep.termwise - rep.displayed),
                        rep.direct,
                        rep.termwise_rearranged};
              }};
    case Quantity::WignerMm:
      return {{"omega_abs", "phi", "value"}, [](double r, double phi) -> Row {
                return {r, phi, wigner_mm_approx(std::polar(r, phi)).value};
              }};
    case Quantity::SectorSplit:
      return {{"omega_abs", "phi", "even_re", "even_im", "odd_re", "odd_im", "even_abs_sq",
               "odd_abs_sq", "tail_bound"},
              [policy](double r, double phi) -> Row {
                const PhasePoint p(phi);
                const auto even = circle_sector_overlap(p, r, Parity::Even, policy);
                const auto odd = circle_sector_overlap(p, r, Parity::Odd, policy);
                return {r,
                        phi,
                        even.series_value.real(),
                        even.series_value.imag(),
                        odd.series_value.real(),
                        odd.series_value.imag(),
                        std::norm(even.series_value),
                        std::norm(odd.series_value),
                        std::max(even.tail_bound, odd.tail_bound)};
              }};
  }
  throw ConfigError("unknown quantity");
}

}  // namespace

Table build_sweep(const SweepConfig& config) {
  config.validate();
  auto kind = sweep_kind(config);
  Table t{to_string(config.quantity), std::move(kind.columns), {}};
  const auto phis = config.phi_points();
  for (double r : config.omega_abs.points()) {
    for (double phi : phis) t.rows.push_back(kind.row(r, phi));
  }
  return t;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  return os.str();
}

namespace {

// JSON has no inf/nan; those become null.
nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::string to_json(const Table& t) {
  nlohmann::json j;
  j["quantity"] = t.quantity;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::json::array();
    for (double v : row) r.push_back(number(v));
    j["rows"].push_back(std::move(r));
  }
  return j.dump(1) + "\n";
}

// ---------------------------------------------------------------- checks

void CheckReport::add(CheckRecord r) {
  if (!r.informational) {
    (r.passed() ? passed : failed) += 1;
    worst_residual = std::max(worst_residual, r.residual);
  }
  details.push_back(std::move(r));
}

namespace {

void algebra_suite(CheckReport& rep) {
  constexpr std::size_t n_max = 64;
  const auto comm = check_commutators(n_max);
  rep.add({"commutators on interior block (n_max=64)", comm.max_interior_deviation, 1e-12});

  double casimir = 0.0;
  for (double v : casimir_spectrum(n_max)) casimir = std::max(casimir, std::abs(v + 3.0 / 16.0));
  rep.add({"Casimir equals -3/16 on interior", casimir, 1e-12});

  const auto g = build_mp2_generators(n_max);
  double t3 = 0.0;
  for (std::size_t n = 0; n + 2 <= n_max; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    t3 = std::max(t3, std::abs(g.t3.entries(i, i) - cplx(-0.5 * (n + 0.5), 0.0)));
  }
  rep.add({"T3 diagonal -(n+1/2)/2 for n <= 62", t3, 1e-13});

  const auto [q, p] = build_position_momentum(n_max);
  const Eigen::MatrixXcd qp = commutator(q.entries, p.entries) -
                              cplx(0.0, 1.0) * Eigen::MatrixXcd::Identity(n_max + 1, n_max + 1);
  rep.add({"[Q,P] = i on interior", max_abs_block(qp, n_max), 1e-12});

  const auto pe = sector_projector(Parity::Even, n_max).entries;
  const auto po = sector_projector(Parity::Odd, n_max).entries;
  double mixing = 0.0;
  for (const auto* t : {&g.t1, &g.t2, &g.t3}) {
    mixing = std::max(mixing, (pe * t->entries * po).cwiseAbs().maxCoeff());
  }
  rep.add({"generators preserve parity sectors", mixing, 1e-15});
}

void geometry_suite(CheckReport& rep) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const TestFunction tests[] = {
      [](const E2Point& q) { return q.x * std::sin(q.phi); },
      [](const E2Point& q) { return q.x * q.x + q.y * q.y; },
      [](const E2Point& q) { return q.x * q.y * std::cos(q.phi) + q.y * std::sin(2.0 * q.phi); },
  };
  double inverse = 0.0, mc = 0.0, structure = 0.0, duality = 0.0, fields = 0.0;
  for (int k = 0; k < 100; ++k) {
    const E2Point p{angle(rng), coord(rng), coord(rng)};
    const auto g = e2_matrix(p.phi, p.x, p.y);
    inverse = std::max(inverse, (g.matrix * e2_inverse(g).matrix - Eigen::Matrix3d::Identity())
                                    .cwiseAbs()
                                    .maxCoeff());
    const auto exact = maurer_cartan(p);
    const auto fd = maurer_cartan_finite_difference(p, 1e-5);
    for (int i = 0; i < 3; ++i) {
      mc = std::max({mc, std::abs(exact.omega_phi[i] - fd.omega_phi[i]),
                     std::abs(exact.omega_x[i] - fd.omega_x[i]),
                     std::abs(exact.omega_y[i] - fd.omega_y[i])});
    }
    structure = std::max(structure, structure_equations_check(p, 1e-5));
    duality = std::max(duality, duality_residual(p));
    for (const auto& f : tests) {
      const auto r = field_commutator_check(f, p, 1e-4);
      fields = std::max({fields, r[0], r[1], r[2]});
    }
  }
  rep.add({"g g^-1 = identity (100 points)", inverse, 1e-14});
  rep.add({"Maurer-Cartan closed form vs finite differences", mc, 1e-6});
  rep.add({"structure equations (step 1e-5)", structure, 1e-6});
  rep.add({"form/field duality", duality, 1e-15});
  rep.add({"vector field commutators (step 1e-4)", fields, 1e-5});

  double plus_field = 0.0;
  double minus_coord = 0.0;
  double plus_coord = 0.0;
  for (int k = 0; k < 16; ++k) {
    const double phi = kTwoPi * k / 16;
    plus_field = std::max(plus_field,
                          std::abs(fiducial_annihilation_check(1.0, 0.5, phi, Branch::Plus).field));
    plus_coord = std::max(
        plus_coord, std::abs(fiducial_annihilation_check(1.0, 0.5, phi, Branch::Plus).coordinate));
    minus_coord = std::max(
        minus_coord,
        std::abs(fiducial_annihilation_check(1.0, 0.5, phi, Branch::Minus).coordinate));
  }
  rep.add({"(e_x + e_y) A_plus = 0 with rotated fields", plus_field, 1e-15});
  rep.add({"(d/dx + d/dy) A_plus = 0", plus_coord, 1e-15, true});
  rep.add({"(d/dx + d/dy) A_minus = 0", minus_coord, 1e-15, true});
}

void overlaps_suite(CheckReport& rep) {
  const TruncationPolicy policy{};
  double circle = 0.0, cyl = 0.0, cyl_printed = 0.0, coset = 0.0, termwise = 0.0, printed = 0.0;
  double coset_rearranged = 0.0, coset_printed = 0.0;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double phi : {0.0, 0.7, 2.0, 4.5}) {
      const auto c = circle_total_overlap(PhasePoint(phi), r, policy);
      circle = std::max(circle, c.discrepancy());
      const CylinderLabel lab{0.3, phi};
      const auto y = cylinder_total_overlap(lab, std::polar(r, 0.4), policy);
      cyl = std::max(cyl, y.discrepancy());
      cyl_printed = std::max(
          cyl_printed,
          std::abs(y.series_value - cylinder_total_overlap_displayed(lab, std::polar(r, 0.4), policy)));
      for (bool normalized : {true, false}) {
        const auto k = coset_total_overlap(CosetLabel{{0.4, 0.8}, phi, 1.0, 0.5}, r, normalized,
                                           policy);
        coset = std::max(coset, k.discrepancy());
      }
      const auto nr = coset_total_norm_sq(CosetLabel{{0.4, 0.8}, phi}, r, policy);
      coset_rearranged = std::max(coset_rearranged, std::abs(nr.termwise - nr.termwise_rearranged));
      coset_printed = std::max(coset_printed, std::abs(nr.termwise - nr.displayed));
    }
    const auto n = circle_total_norm_sq(r, policy);
    termwise = std::max(termwise, std::abs(n.series_value.real() -
                                           circle_norm_sq_termwise_closed_form(r)));
    printed = std::max(printed, n.discrepancy());
  }
  rep.add({"circle: even + odd = single sum", circle, 1e-12});
  rep.add({"cylinder: even + odd = single sum", cyl, 1e-12});
  rep.add({"cylinder: even + odd = printed single sum", cyl_printed, 1e-12, true});
  rep.add({"coset: even + odd = single sum", coset, 1e-12});
  rep.add({"circle: termwise norm = r^2/4 closed form", termwise, 1e-12});
  rep.add({"circle: termwise norm = printed closed form", printed, 1e-10, true});
  rep.add({"coset: termwise norm = rearranged sum", coset_rearranged, 1e-12});
  rep.add({"coset: termwise norm = printed closed form", coset_printed, 1e-10, true});

  double london = 0.0;
  for (double reg : {1e-2, 1e-1, 1.0}) {
    for (double d : {0.0, 0.5, 2.0, 3.0}) {
      const cplx s = london_overlap_series(d, 0.0, reg);
      london = std::max(london, std::abs(s - london_overlap(d, 0.0, reg)) / std::abs(s));
    }
  }
  rep.add({"London: damped series = closed form (relative)", london, 1e-12});

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> im(0.1, 3.0);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(0.0, 0.99);
  const TruncationPolicy wide{400};
  double norm = 0.0, contraction = 0.0, pair = 0.0;
  for (int k = 0; k < 50; ++k) {
    const CosetLabel lab{{re(rng), im(rng)}, angle(rng), re(rng), re(rng) + 4.0};
    norm = std::max(norm, std::abs(coset_state_coeffs(lab, wide).norm_sq() - 1.0));
    const cplx w = std::polar(radius(rng), angle(rng));
    contraction = std::max(contraction, std::abs(std::abs(coset_z_prime(lab, w)) -
                                                 std::abs(w) * std::exp(-lab.alpha.imag() / 2)));
    const CosetLabel other{{re(rng), im(rng)}, angle(rng)};
    const auto p = coset_pair_overlap(other, lab, wide);
    pair = std::max(pair, p.discrepancy() / std::max(1.0, std::abs(*p.closed_form_value)));
  }
  rep.add({"coset normalization (50 labels, n_max=400)", norm, 1e-10});
  rep.add({"coset disc contraction |z'| = |w| e^{-Im a/2}", contraction, 1e-14});
  rep.add({"coset pair overlap series = geometric closed form", pair, 1e-10});
}

void identity_suite(CheckReport& rep) {
  for (cplx alpha : {cplx(0.0, 1.0), cplx(0.3, 0.7)}) {
    const auto m = weak_identity_matrix(alpha, 32, 512).entries;
    double diag = 0.0;
    double off = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (i == j) {
          diag = std::max(diag, std::abs(m(i, i) - std::exp(-static_cast<double>(i) * alpha.imag())));
        } else {
          off = std::max(off, std::abs(m(i, j)));
        }
      }
    }
    std::ostringstream name;
    name << "weak identity alpha=" << alpha.real() << "+" << alpha.imag() << "i";
    rep.add({name.str() + ": diagonal e^{-n Im a}", diag, 1e-10});
    rep.add({name.str() + ": off-diagonal", off, 1e-12});
  }
}

}  // namespace

CheckReport run_check(const std::string& suite) {
  using Suite = void (*)(CheckReport&);
  const std::pair<const char*, Suite> suites[] = {
      {"algebra", algebra_suite},
      {"geometry", geometry_suite},
      {"overlaps", overlaps_suite},
      {"identity", identity_suite},
  };
  CheckReport rep;
  rep.suite = suite;
  bool found = false;
  for (const auto& [name, fn] : suites) {
    if (suite == name || suite == "all") {
      fn(rep);
      found = true;
    }
  }
  if (!found) throw ConfigError("unknown check suite '" + suite + "'");
  return rep;
}

// ---------------------------------------------------------------- reconcile

namespace {

nlohmann::json table(std::vector<std::string> columns) {
  return {{"columns", std::move(columns)}, {"rows", nlohmann::json::array()}};
}

}  // namespace

nlohmann::json build_reconcile_report() {
  const TruncationPolicy policy{};
  nlohmann::json report;

  auto cyl = table({"omega_abs", "phi", "direct", "g_form", "ratio", "prefactor",
                    "ratio_minus_prefactor"});
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double phi : {0.0, kPi / 2}) {
      const auto rep = cylinder_total_norm_sq(r, phi, policy);
      cyl["rows"].push_back({r, phi, rep.direct, rep.g_form, rep.ratio, rep.prefactor,
                             rep.ratio - rep.prefactor});
    }
  }
  report["cylinder_norm_prefactor"] = std::move(cyl);

  constexpr double kReg = 1e-2;
  auto london = table({"phi", "phi_prime", "regularizer", "series_re", "series_im",
                       "positive_sign_re", "positive_sign_im", "printed_sign_re",
                       "printed_sign_im"});
  const std::pair<double, double> pairs[] = {
      {0.0, 0.0}, {0.5, 0.0}, {1.0, 0.25}, {kPi / 2, 0.0}, {3.0, 1.0}};
  for (const auto& [a, b] : pairs) {
    const cplx s = london_overlap_series(a, b, kReg);
    const cplx pos = london_overlap(a, b, kReg);
    const cplx neg = london_overlap_displayed(a, b, kReg);
    london["rows"].push_back(
        {a, b, kReg, s.real(), s.imag(), pos.real(), pos.imag(), neg.real(), neg.imag()});
  }
  report["london_sign_convention"] = std::move(london);

  auto fid = table({"phi", "branch", "x", "y", "coordinate_residual", "field_residual",
                    "field_residual_finite_difference"});
  for (double phi : {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}) {
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const auto r = fiducial_annihilation_check(1.0, 0.5, phi, b);
      fid["rows"].push_back(
          {phi, to_string(b), 1.0, 0.5, r.coordinate, r.field, r.field_finite_difference});
    }
  }
  report["fiducial_branch_residual"] = std::move(fid);

  auto sprod = table({"alpha_re", "alpha_im", "phi", "x", "y", "direct", "printed", "expanded"});
  const double samples[][5] = {{0.0, 0.0, 0.0, 1.0, 0.0},  {0.3, 0.0, 0.3, 1.0, 0.0},
                               {0.0, 1.0, 0.0, 1.0, 0.0},  {0.4, 0.8, 1.1, 1.0, 0.5},
                               {-0.7, 0.2, 2.5, 0.3, -1.2}};
  for (const auto& s : samples) {
    const cplx a{s[0], s[1]};
    sprod["rows"].push_back({s[0], s[1], s[2], s[3], s[4], coset_S_product(a, s[2], s[3], s[4]),
                             coset_S_product_displayed(a, s[2], s[3], s[4]),
                             coset_S_product_expanded(a, s[2], s[3], s[4])});
  }
  report["s_product"] = std::move(sprod);

  auto cnorm = table({"omega_abs", "termwise", "printed_closed_form", "quarter_closed_form",
                      "coherent_phi_0", "coherent_phi_1"});
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    cnorm["rows"].push_back({r, circle_total_norm_sq(r, policy).series_value.real(),
                             circle_norm_sq_displayed_closed_form(r),
                             circle_norm_sq_termwise_closed_form(r),
                             circle_total_norm_sq_coherent(PhasePoint(0.0), r, policy),
                             circle_total_norm_sq_coherent(PhasePoint(1.0), r, policy)});
  }
  report["circle_norm_closed_form"] = std::move(cnorm);

  auto csum = table({"omega_abs", "phi", "sector_sum_re", "sector_sum_im", "single_sum_re",
                     "single_sum_im", "printed_single_sum_re", "printed_single_sum_im"});
  for (double r : {0.3, 0.6, 0.9}) {
    for (double phi : {0.0, 1.0}) {
      const CylinderLabel lab{0.0, phi};
      const auto t = cylinder_total_overlap(lab, r, policy);
      const cplx p = cylinder_total_overlap_displayed(lab, r, policy);
      csum["rows"].push_back({r, phi, t.series_value.real(), t.series_value.imag(),
                              t.closed_form_value->real(), t.closed_form_value->imag(), p.real(),
                              p.imag()});
    }
  }
  report["cylinder_single_sum"] = std::move(csum);

  auto knorm = table({"alpha_re", "alpha_im", "omega_abs", "phi", "z_prime_abs", "termwise",
                      "rearranged", "printed_closed_form"});
  for (double r : {0.3, 0.6, 0.9}) {
    for (double phi : {0.0, 1.0}) {
      const cplx alpha{0.0, 1.0};
      const auto rep = coset_total_norm_sq(CosetLabel{alpha, phi}, r, policy);
      knorm["rows"].push_back({alpha.real(), alpha.imag(), r, phi, rep.z_prime_abs, rep.termwise,
                               rep.termwise_rearranged, rep.displayed});
    }
  }
  report["coset_norm_closed_form"] = std::move(knorm);
  return report;
}

// ---------------------------------------------------------------- entry point

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

void print_report(const CheckReport& rep, std::ostream& out) {
  for (const auto& d : rep.details) {
    const char* tag = d.informational ? "INFO" : (d.passed() ? "PASS" : "FAIL");
    out << tag << "  " << d.name << "  residual=" << format_number(d.residual)
        << "  tol=" << format_number(d.tolerance) << '\n';
  }
  out << rep.suite << ": " << rep.passed << " passed, " << rep.failed
      << " failed, worst residual " << format_number(rep.worst_residual) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metaplectic coherent state overlaps, sweeps and self-checks", "states"};
  app.require_subcommand(1);

  std::string quantity, alpha = "0+1i", format = "csv", sweep_out;
  SweepConfig cfg;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a quantity on a (|omega|, phi) grid");
  sweep->add_option("--quantity", quantity, "circle-norm|cylinder-norm|coset-norm|wigner-mm|sector-split")
      ->required();
  sweep->add_option("--omega-min", cfg.omega_abs.min)->required();
  sweep->add_option("--omega-max", cfg.omega_abs.max)->required();
  sweep->add_option("--omega-count", cfg.omega_abs.count)->required();
  sweep->add_option("--phi-count", cfg.phi_count, "Number of phases in [0, 2pi)");
  sweep->add_option("--alpha", alpha, "Coset label, <re>+<im>i");
  sweep->add_option("--out", sweep_out)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::string suite;
  auto* check = app.add_subcommand("check", "Run a self-check suite");
  check->add_option("suite", suite, "algebra|geometry|overlaps|identity|all")->required();

  std::string reconcile_out;
  auto* reconcile = app.add_subcommand("reconcile", "Write the reconciliation tables as JSON");
  reconcile->add_option("--out", reconcile_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sweep) {
      cfg.quantity = parse_quantity(quantity);
      cfg.alpha = parse_complex(alpha);
      cfg.output_path = sweep_out;
      cfg.format = format == "json" ? Format::Json : Format::Csv;
      const Table t = build_sweep(cfg);
      write_file(cfg.output_path, cfg.format == Format::Json ? to_json(t) : to_csv(t));
      out << "wrote " << t.rows.size() << " rows to " << cfg.output_path << '\n';
      return 0;
    }
    if (*check) {
      const auto rep = run_check(suite);
      print_report(rep, out);
      return rep.failed == 0 ? 0 : 1;
    }
    if (*reconcile) {
      write_file(reconcile_out, build_reconcile_report().dump(1) + "\n");
      out << "wrote " << reconcile_out << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace mpstates::cli
