#include <doctest.h>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "output.hpp"
#include "params.hpp"
#include "zmw/error.hpp"
#include "zmw/partitions.hpp"

using namespace zmw;
using namespace zmw::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"zmw"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Data rows of a CSV document (schema line and header dropped).
std::vector<std::vector<std::string>> csv_rows(const std::string& text, std::string* schema = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  int index = 0;
  while (std::getline(in, line)) {
    if (index == 0 && schema) *schema = line;
    if (index++ < 2) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("complex and mu literals") {
  CHECK(parse_complex("0.3") == cplx(0.3, 0.0));
  CHECK(parse_complex("0.2+0.5i") == cplx(0.2, 0.5));
  CHECK(parse_complex("0.2-0.5i") == cplx(0.2, -0.5));
  CHECK(parse_complex("-1e-2") == cplx(-0.01, 0.0));
  CHECK(parse_complex("2i") == cplx(0.0, 2.0));
  CHECK(parse_complex("-i") == cplx(0.0, -1.0));
  CHECK_THROWS_AS(parse_complex("abc"), UsageError);
  CHECK_THROWS_AS(parse_complex("0.2+"), UsageError);

  CHECK(parse_mu("0.15") == std::pair{MuKind::real, 0.15});
  CHECK(parse_mu("2i") == std::pair{MuKind::imaginary, 2.0});
  CHECK_THROWS_AS(parse_mu("0.1+2i"), UsageError);
}

TEST_CASE("parameter groups") {
  ParamInput in;
  in.z = "0.2+0.5i";
  const Parameters p = resolve_parameters(in);
  CHECK(p.kind() == Parameters::Kind::principal);
  CHECK(p.zprime() == cplx(0.2, -0.5));

  ParamInput pairs;
  pairs.pairs = "z=0.3,zprime=0.6";
  CHECK(resolve_parameters(pairs).t() == doctest::Approx(0.18));

  ParamInput amu;
  amu.a = "0.1";
  amu.mu = "2i";
  const Parameters q = resolve_parameters(amu);
  CHECK(q.a() == doctest::Approx(0.1));
  CHECK(q.mu_squared() == doctest::Approx(-4.0));

  ParamInput real_alone;
  real_alone.z = "0.3";
  CHECK_THROWS_AS(resolve_parameters(real_alone), UsageError);

  ParamInput none;
  CHECK_THROWS_AS(resolve_parameters(none), UsageError);

  ParamInput straddle;
  straddle.pairs = "z=0.3,zprime=1.6";
  CHECK_THROWS_AS(resolve_parameters(straddle), AdmissibilityError);
}

TEST_CASE("output helpers") {
  CHECK(format_number(0.1, "x") == "0.10000000000000001");
  CHECK_THROWS_AS(format_number(std::nan(""), "x"), ConvergenceError);
  CHECK_THROWS_AS(check_finite(nlohmann::json{{"v", std::numeric_limits<double>::infinity()}}),
                  ConvergenceError);
  CsvTable t("zmw.test/1", {"a", "b"});
  t.add({t.num(1.5, 0), t.num(-2.0, 1)});
  std::ostringstream os;
  t.write(os);
  CHECK(os.str() == "# schema: zmw.test/1\na,b\n1.5,-2\n");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"--help"}).code == kExitOk);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"no-such-command"}).code == kExitUsage);
  CHECK(run_cli({"gap-prob", "--z", "0.3"}).code == kExitUsage);
  CHECK(run_cli({"gap-prob", "--z", "0.3", "--a", "0.1"}).code == kExitUsage);
  CHECK(run_cli({"sample", "--n", "3", "--count", "2", "--z", "0.2+0.5i"}).code == kExitUsage);
  const Result bad = run_cli({"gap-prob", "--z", "0.3", "--zprime", "1.6"});
  CHECK(bad.code == kExitAdmissibility);
  CHECK(bad.err.find("admissibility") != std::string::npos);
  CHECK(run_cli({"moments", "mass", "--z", "1.5+0.5i"}).code == kExitOk);
  CHECK(run_cli({"kernel", "eval", "--x", "1", "--y", "1", "--kernel", "l", "--z", "0.9+0.5i"}).code ==
        kExitAdmissibility);
  CHECK(run_cli({"specfun", "eval", "--fn", "lgamma", "--w", "-2"}).code == kExitUsage);
}

TEST_CASE("gap-prob emits a monotone distribution function") {
  const Result r = run_cli({"gap-prob", "--tau-min", "0.5", "--tau-max", "20", "--steps", "40", "--z", "0.3",
                            "--zprime", "0.6"});
  REQUIRE(r.code == kExitOk);
  std::string schema;
  const auto rows = csv_rows(r.out, &schema);
  CHECK(schema == "# schema: zmw.gap-prob/1");
  REQUIRE(rows.size() == 40);
  CHECK(std::stod(rows.front()[0]) == 0.5);
  CHECK(std::stod(rows.back()[0]) == 20.0);
  double prev = 0.0;
  for (const auto& row : rows) {
    const double v = std::stod(row[1]);
    CHECK(v >= prev);
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("moments crosscheck") {
  const Result r = run_cli({"moments", "crosscheck", "--kmax", "6", "--params", "z=0.3,zprime=0.6"});
  REQUIRE(r.code == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) CHECK(std::stod(row[3]) <= 1e-4);
  CHECK(std::stod(rows[0][1]) == doctest::Approx(0.18).epsilon(1e-14));
}

TEST_CASE("sampling subcommands are reproducible") {
  const auto a = run_cli({"sample", "--n", "12", "--count", "5", "--seed", "11", "--z", "0.2+0.5i"});
  const auto b = run_cli({"sample", "--n", "12", "--count", "5", "--seed", "11", "--z", "0.2+0.5i"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(Partition::parse(line).size() == 12);
    ++count;
  }
  CHECK(count == 5);
  CHECK(run_cli({"sample", "--n", "50", "--count", "2", "--seed", "1", "--method", "enumerate", "--z",
                 "0.2+0.5i"})
            .code == kExitUsage);

  const Result mc = run_cli({"mc", "--statistic", "alpha-mass", "--n", "20", "--count", "2000", "--seed", "5",
                             "--z", "0.3", "--zprime", "0.6"});
  REQUIRE(mc.code == kExitOk);
  const auto doc = nlohmann::json::parse(mc.out);
  for (const char* key : {"mean", "stderr", "oracle", "z_score"}) CHECK(doc.contains(key));
  CHECK(doc["stderr"].get<double>() > 0.0);
}

TEST_CASE("evaluation subcommands") {
  const Result w = run_cli({"specfun", "eval", "--fn", "whittaker", "--kappa", "0.5", "--mu", "0", "--x", "1"});
  REQUIRE(w.code == kExitOk);
  const auto rows = csv_rows(w.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::stod(rows[0][4]) == doctest::Approx(0.6065306597).epsilon(1e-9));

  const Result k = run_cli({"kernel", "eval", "--block", "++", "--x", "0.5", "1", "--y", "2", "--z", "0.2+0.5i"});
  REQUIRE(k.code == kExitOk);
  CHECK(csv_rows(k.out).size() == 2);
  const Result t = run_cli({"kernel", "tail", "--xi", "0", "--eta", "0", "--kernel", "K", "--z", "0.2+0.5i"});
  REQUIRE(t.code == kExitOk);
  CHECK(csv_rows(t.out).size() == 4);
  CHECK(std::stod(csv_rows(t.out)[0][4]) == 1.0);

  const Result tail = run_cli({"tail", "--constants", "--z", "0.2+0.5i"});
  REQUIRE(tail.code == kExitOk);
  const auto doc = nlohmann::json::parse(tail.out);
  CHECK(doc["c"].get<double>() * doc["B"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("verify report") {
  const Result r = run_cli({"verify", "operators", "--params", "z=0.3,zprime=0.6"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == "zmw.verify/1");
  CHECK(doc["summary"]["ok"] == true);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("units"));
    CHECK(c.contains("tolerance"));
    CHECK(c["module"] == "operators");
  }
  CHECK(run_cli({"verify", "--suite", "nope", "--z", "0.2+0.5i"}).code == kExitUsage);
}

TEST_CASE("config file and --out") {
  const std::string dir = ZMW_TEST_TMPDIR;
  const std::string cfg = dir + "/cli_test.ini";
  const std::string out = dir + "/cli_test_out.csv";
  {
    std::ofstream f(cfg);
    f << "z=0.3\nzprime=0.6\n";
  }
  // Flags override the file: --zprime 0.7 wins.
  const Result r = run_cli({"--config", cfg.c_str(), "--zprime", "0.7", "--out", out.c_str(), "moments",
                            "crosscheck", "--kmax", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream text;
  text << f.rdbuf();
  const auto rows = csv_rows(text.str());
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[0][1]) == doctest::Approx(0.3 * 0.7).epsilon(1e-14));
}
