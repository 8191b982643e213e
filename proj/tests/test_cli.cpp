#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mpstates/cli.hpp"

using namespace mpstates;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "states");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mpstates_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(cli::parse_complex("0+1i") == cplx(0.0, 1.0));
  CHECK(cli::parse_complex("-0.5-2.5i") == cplx(-0.5, -2.5));
  CHECK(cli::parse_complex("1e-1+3E0i") == cplx(0.1, 3.0));
  CHECK(cli::parse_complex("2+i") == cplx(2.0, 1.0));
  CHECK_THROWS_AS(cli::parse_complex("1i"), cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_complex("abc"), cli::ConfigError);
}

TEST_CASE("sweep config validation") {
  cli::SweepConfig c;
  c.output_path = "x.csv";
  CHECK_NOTHROW(c.validate());
  c.omega_abs.max = 1.0;
  CHECK_THROWS_AS(c.validate(), cli::ConfigError);
  c.quantity = cli::Quantity::WignerMm;
  CHECK_THROWS_AS(c.validate(), cli::ConfigError);  // min = 0
  c.omega_abs.min = 0.05;
  CHECK_NOTHROW(c.validate());
  c.phi_count = 1;
  CHECK_THROWS_AS(c.validate(), cli::ConfigError);
  CHECK_THROWS_AS(cli::parse_quantity("bogus"), cli::ConfigError);
}

TEST_CASE("circle-norm sweep starts at 1 and decreases") {
  cli::SweepConfig c;
  c.omega_abs = {0.0, 0.99, 100};
  c.phi_count = 2;
  c.output_path = "unused";
  const auto t = cli::build_sweep(c);
  REQUIRE(t.rows.size() == 200);
  CHECK(t.columns[3] == "closed_form");
  CHECK(t.rows[0][3] == doctest::Approx(1.0));
  CHECK(t.rows[0][2] == doctest::Approx(1.0));
  for (std::size_t i = 2; i < t.rows.size(); i += 2) CHECK(t.rows[i][3] < t.rows[i - 2][3]);
}

TEST_CASE("sector-split sweep keeps the even curve on top") {
  cli::SweepConfig c;
  c.quantity = cli::Quantity::SectorSplit;
  c.omega_abs = {0.01, 0.94, 40};
  c.phi_count = 8;
  c.output_path = "unused";
  const auto t = cli::build_sweep(c);
  for (const auto& row : t.rows) CHECK(row[6] >= row[7]);
}

TEST_CASE("CSV and JSON output") {
  const fs::path csv = scratch("split.csv");
  const auto args = std::vector<std::string>{
      "sweep", "--quantity", "sector-split", "--omega-min", "0.1", "--omega-max", "0.5",
      "--omega-count", "3", "--phi-count", "4", "--out", csv.string()};
  REQUIRE(invoke(args).code == 0);
  const std::string first = slurp(csv);
  CHECK(first.rfind("omega_abs,phi,even_re,even_im,odd_re,odd_im,even_abs_sq,odd_abs_sq,tail_bound\n", 0) == 0);
  CHECK(std::count(first.begin(), first.end(), '\n') == 13);
  REQUIRE(invoke(args).code == 0);
  CHECK(slurp(csv) == first);  // byte-identical reruns

  const fs::path json = scratch("coset.json");
  REQUIRE(invoke({"sweep", "--quantity", "coset-norm", "--omega-min", "0", "--omega-max", "0.9",
                  "--omega-count", "4", "--alpha", "0.2+0.8i", "--out", json.string(),
                  "--format", "json"})
              .code == 0);
  const auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["quantity"] == "coset-norm");
  CHECK(j["rows"].size() == 4 * 64);
  CHECK(j["columns"][2] == "z_prime_abs");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"check", "algebra"}).code == 0);
  CHECK(invoke({"check", "identity"}).code == 0);
  CHECK(invoke({"check", "nonsense"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"sweep", "--quantity", "circle-norm"}).code == 2);
  CHECK(invoke({"sweep", "--quantity", "circle-norm", "--omega-min", "0", "--omega-max", "1.2",
                "--omega-count", "5", "--out", scratch("bad.csv").string()})
            .code == 2);
  CHECK(invoke({"sweep", "--quantity", "coset-norm", "--omega-min", "0", "--omega-max", "0.5",
                "--omega-count", "5", "--alpha", "1+0i", "--out", scratch("bad.csv").string()})
            .code == 2);
  CHECK(invoke({"sweep", "--quantity", "wigner-mm", "--omega-min", "0.05", "--omega-max", "1",
                "--omega-count", "5", "--out", "/nonexistent-dir/x/y.csv"})
            .code == 3);
  CHECK(invoke({"reconcile", "--out", "/nonexistent-dir/x/r.json"}).code == 3);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("check report formatting") {
  const auto r = invoke({"check", "geometry"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  structure equations") != std::string::npos);
  CHECK(r.out.find("INFO  (d/dx + d/dy) A_minus = 0") != std::string::npos);
}

TEST_CASE("reconcile report tables") {
  const fs::path p = scratch("reconcile.json");
  REQUIRE(invoke({"reconcile", "--out", p.string()}).code == 0);
  const auto j = nlohmann::json::parse(slurp(p));
  for (const char* key : {"cylinder_norm_prefactor", "london_sign_convention",
                          "fiducial_branch_residual", "s_product", "circle_norm_closed_form",
                          "cylinder_single_sum", "coset_norm_closed_form"}) {
    REQUIRE(j.contains(key));
    CHECK(j[key]["rows"].size() > 0);
    for (const auto& row : j[key]["rows"]) CHECK(row.size() == j[key]["columns"].size());
  }
  CHECK(j["london_sign_convention"]["rows"].size() == 5);
}

TEST_CASE("number formatting round-trips") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(std::stod(cli::format_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(cli::format_number(INFINITY) == "inf");
}
