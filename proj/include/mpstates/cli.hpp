#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpstates/fock_core.hpp"

namespace mpstates::cli {

enum class Quantity { CircleNorm, CylinderNorm, CosetNorm, WignerMm, SectorSplit };
enum class Format { Csv, Json };

/// Raised for anything the user got wrong on the command line (exit 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an output file cannot be written (exit 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Quantity parse_quantity(const std::string& s);
const char* to_string(Quantity q);

/// Parses "<re>+<im>i" or "<re>-<im>i".
cplx parse_complex(const std::string& s);

struct RangeSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 2;

  /// min + i (max - min) / (count - 1)
  std::vector<double> points() const;
};

struct SweepConfig {
  Quantity quantity = Quantity::CircleNorm;
  RangeSpec omega_abs{0.0, 0.9, 200};
  int phi_count = 64;  // phi_k = 2 pi k / phi_count
  cplx alpha{0.0, 1.0};
  std::string output_path;
  Format format = Format::Csv;

  /// Throws ConfigError.
  void validate() const;
  std::vector<double> phi_points() const;
};

struct Table {
  std::string quantity;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Rows are ordered by radius, then phase.
Table build_sweep(const SweepConfig& config);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// Shortest text that round-trips the double.
std::string format_number(double v);

struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Reported but not counted: known-false relations kept for visibility.
  bool informational = false;
  bool passed() const { return residual <= tolerance; }
};

struct CheckReport {
  std::string suite;
  int passed = 0;
  int failed = 0;
  double worst_residual = 0.0;
  std::vector<CheckRecord> details;

  void add(CheckRecord r);
};

/// Suites: algebra, geometry, overlaps, identity, all. Throws ConfigError otherwise.
CheckReport run_check(const std::string& suite);

/// Numeric tables for the reconciliation report, keyed by table name. Each
/// table is {"columns": [...], "rows": [[...], ...]}.
nlohmann::json build_reconcile_report();

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mpstates::cli
