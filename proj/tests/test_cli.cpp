#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qes2d/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qes2d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = qes2d::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("spectrum for n = 1..3") {
  const auto r = run({"spectrum", "--case", "ec0", "--n", "1..3", "--s", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find('\r') == std::string::npos);
  const auto rows = parse_csv(r.out);
  const auto& h = rows.front();
  CHECK(h == std::vector<std::string>{"n", "s", "j", "lambda", "kappa", "b", "energy", "nodes", "physical",
                                      "closed_form", "delta"});
  std::vector<double> lambdas;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][column(h, "physical")] == "true") lambdas.push_back(std::stod(rows[i][column(h, "lambda")]));
  }
  REQUIRE(lambdas.size() == 4);
  CHECK(lambdas[0] == doctest::Approx(1.0));
  CHECK(lambdas[1] == doctest::Approx(6.0));
  CHECK(lambdas[2] == doctest::Approx(10 + std::sqrt(73.0)));
  CHECK(lambdas[3] == doctest::Approx(10 - std::sqrt(73.0)));
}

TEST_CASE("neutral spectrum") {
  const auto r = run({"spectrum", "--case", "q0", "--n", "2", "--s", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.contains("meta"));
  int physical = 0;
  for (const auto& row : doc["rows"]) {
    if (!row["physical"].get<bool>()) continue;
    ++physical;
    CHECK(row["kappa"].get<double>() == doctest::Approx(-std::sqrt(6.0)));
    CHECK(row["b"].get<double>() == doctest::Approx(1.0 / 6.0));
  }
  CHECK(physical == 1);
}

TEST_CASE("n = 0 gives one flagged zero row") {
  const auto r = run({"spectrum", "--n", "0"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][column(rows[0], "lambda")] == "0");
  CHECK(rows[1][column(rows[0], "physical")] == "false");
  CHECK(rows[1][column(rows[0], "b")].empty());
}

TEST_CASE("dimensionful column with charges") {
  const auto r = run({"spectrum", "--n", "2", "--e1", "1", "--e2", "1", "--m1", "1", "--m2", "1", "--B", "1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows[0].back() == "B");
  CHECK(run({"spectrum", "--n", "2", "--e1", "1"}).code == 2);
  CHECK(run({"spectrum", "--n", "2", "--e1", "1", "--e2", "2", "--m1", "1", "--m2", "1", "--B", "1"}).code == 2);
  CHECK(run({"spectrum", "--case", "q0", "--e1", "1", "--e2", "1", "--m1", "1", "--m2", "1", "--B", "1"}).code == 2);
}

TEST_CASE("invalid ranges exit 2") {
  CHECK(run({"spectrum", "--n", "70"}).code == 2);
  CHECK(run({"spectrum", "--n", "5..2"}).code == 2);
  CHECK(run({"spectrum", "--n", "x"}).code == 2);
  CHECK(run({"spectrum", "--s", "-65"}).code == 2);
  CHECK(run({"spectrum", "--case", "bogus"}).code == 2);
  CHECK(run({"spectrum", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("unnormalizable high-order eigenvectors exit 3") {
  CHECK(run({"spectrum", "--n", "64"}).code == 3);
}

TEST_CASE("wavefunction") {
  const auto r = run({"wavefunction", "--n", "3", "--s", "1", "--j", "2", "--grid-points", "50"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows.size() == 51);
  const auto& h = rows[0];
  CHECK(rows[1][column(h, "case")] == "ec0");
  CHECK(rows[1][column(h, "j")] == "2");
  CHECK(run({"wavefunction", "--n", "3", "--j", "3"}).code == 2);
  CHECK(run({"wavefunction", "--n", "0"}).code == 2);
  CHECK(run({"wavefunction", "--n", "2", "--case", "q0", "--j", "1"}).code == 0);
}

TEST_CASE("landau") {
  const auto r = run({"landau", "--n", "0..2", "--s", "-1..1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows.size() == 10);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][column(rows[0], "casimir_residual")] == "0");
  CHECK(run({"landau", "--case", "q0"}).code == 2);
  CHECK(run({"landau", "--e1", "1", "--e2", "-1", "--m1", "1", "--m2", "1", "--B", "1"}).code == 2);
}

TEST_CASE("verify scoping and tolerance") {
  const auto scoped = run({"verify", "--only", "oracle", "--n", "4", "--s", "2"});
  CHECK(scoped.code == 0);
  CHECK(scoped.out.find("fd_match_n4_s2") != std::string::npos);
  CHECK(scoped.out.find("sl2.") == std::string::npos);

  const auto tight = run({"verify", "--tol", "1e-15"});
  CHECK(tight.code == 1);
  std::istringstream in(tight.out);
  std::string line;
  int oracle_fail = 0;
  while (std::getline(in, line)) {
    if (line.rfind("FAIL", 0) == 0) {
      CHECK(line.find("oracle.") != std::string::npos);
      ++oracle_fail;
    }
  }
  CHECK(oracle_fail > 0);
  CHECK(run({"verify", "--only", "bogus"}).code == 2);
}

TEST_CASE("identical runs give identical bytes") {
  const auto a = run({"spectrum", "--n", "0..8", "--s", "-2..2", "--format", "json"});
  const auto b = run({"spectrum", "--n", "0..8", "--s", "-2..2", "--format", "json"});
  CHECK(a.out == b.out);
  const auto v1 = run({"verify", "--only", "catalog"});
  const auto v2 = run({"verify", "--only", "catalog"});
  CHECK(v1.out == v2.out);
}

TEST_CASE("--out writes the file") {
  const std::string path = "qes2d_cli_test_out.csv";
  const auto r = run({"spectrum", "--n", "1", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().rfind("n,s,j,", 0) == 0);
  std::remove(path.c_str());
}
