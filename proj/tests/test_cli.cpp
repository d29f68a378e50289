#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nvg/cli.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nvg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("growth csv golden bytes") {
  RunResult r = run({"growth", "--n", "3", "--k-max", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "k,q,p,source\n"
        "0,1,1,enumerated\n"
        "1,1,2,enumerated\n"
        "2,2,4,enumerated\n"
        "3,3,7,enumerated\n"
        "4,4,11,enumerated\n"
        "5,5,16,enumerated\n");
}

TEST_CASE("growth table golden bytes") {
  RunResult r = run({"growth", "--n", "3", "--k-max", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n = 3, k_max = 5\n"
        "k  q   p  source\n"
        "0  1   1  enumerated\n"
        "1  1   2  enumerated\n"
        "2  2   4  enumerated\n"
        "3  3   7  enumerated\n"
        "4  4  11  enumerated\n"
        "5  5  16  enumerated\n");
}

TEST_CASE("closed csv golden bytes") {
  RunResult r = run({"closed", "--n", "5", "--k-max", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k,q,p,source\n"
        "0,1,1,closed_form\n"
        "1,1,2,closed_form\n"
        "2,3,5,closed_form\n"
        "3,7,12,closed_form\n"
        "4,14,26,closed_form\n");
}

TEST_CASE("growth json parses back with string-typed counts") {
  RunResult r = run({"growth", "--n", "6", "--k-max", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["k_max"] == 6);
  REQUIRE(j["rows"].size() == 7);
  CHECK(j["rows"][2]["k"] == 2);
  CHECK(j["rows"][2]["q"] == "2");
  CHECK(j["rows"][2]["p"] == "4");
  CHECK(j["rows"][2]["source"] == "enumerated");
  CHECK(j["rows"][6]["p"] == "22");
}

TEST_CASE("output is deterministic, including across thread counts") {
  std::vector<std::string> base = {"growth", "--n", "8", "--k-max", "7",
                                   "--format", "json"};
  RunResult a = run(base);
  RunResult b = run(base);
  CHECK(a.out == b.out);

  std::vector<std::string> threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  RunResult c = run(threaded);
  CHECK(a.code == 0);
  CHECK(c.code == 0);
  CHECK(a.out == c.out);
}

TEST_CASE("closed matches growth row for row at a prime") {
  RunResult closed = run({"closed", "--n", "7", "--k-max", "6", "--format", "csv"});
  RunResult growth = run({"growth", "--n", "7", "--k-max", "6", "--format", "csv"});
  REQUIRE(closed.code == 0);
  REQUIRE(growth.code == 0);
  std::string c = closed.out, g = growth.out;
  std::string::size_type pos;
  while ((pos = c.find("closed_form")) != std::string::npos)
    c.replace(pos, 11, "enumerated");
  CHECK(c == g);
}

TEST_CASE("usage errors exit 1 with a diagnostic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"growth"},
           {"growth", "--n", "3"},
           {"growth", "--k-max", "3"},
           {"growth", "--n", "abc", "--k-max", "3"},
           {"growth", "--n", "5..3", "--k-max", "3"},
           {"growth", "--n", "2..5", "--k-max", "3"},
           {"growth", "--n", "1", "--k-max", "3"},
           {"growth", "--n", "3", "--k-max", "-2"},
           {"growth", "--n", "3", "--k-max", "3", "--format", "yaml"},
           {"growth", "--n", "3", "--k-max", "3", "--threads", "0"},
           {"growth", "--n", "3", "--k-max", "3", "--budget", "-5"},
           {"growth", "--n", "3", "--k-max", "3", "stray"},
           {"closed", "--n", "9", "--k-max", "3"},
           {"crosscheck", "--n", "3", "--k-max", "2", "--tol", "0"},
           {"interpolate", "--n", "5", "--k-max", "2"},
       }) {
    RunResult r = run(args);
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits 0 and mentions the subcommands") {
  RunResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("growth") != std::string::npos);
  CHECK(top.out.find("hypotheses") != std::string::npos);

  RunResult sub = run({"growth", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--k-max") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2") {
  RunResult r = run({"growth", "--n", "3", "--k-max", "100000", "--budget", "100000"});
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("NVG_BUDGET environment variable backs the --budget flag") {
  ::setenv("NVG_BUDGET", "50", 1);
  RunResult starved = run({"growth", "--n", "3", "--k-max", "10"});
  CHECK(starved.code == 2);

  RunResult flag_wins =
      run({"growth", "--n", "3", "--k-max", "10", "--budget", "100000"});
  CHECK(flag_wins.code == 0);

  ::setenv("NVG_BUDGET", "x9", 1);
  RunResult malformed = run({"growth", "--n", "3", "--k-max", "10"});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.find("NVG_BUDGET") != std::string::npos);
  ::unsetenv("NVG_BUDGET");
}

TEST_CASE("interpolate reports the shared quadratic in plain text") {
  RunResult r = run({"interpolate", "--n", "3", "--k-max", "6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("p(k) = 1 + 1/2 k + 1/2 k^2") != std::string::npos);
  CHECK(r.out.find("matches the enumerated series through k = 6 of 6") !=
        std::string::npos);
}

TEST_CASE("interpolate json carries all three representations") {
  RunResult r = run({"interpolate", "--n", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["phi_n"] == 4);
  CHECK(j["monomial_coeffs"].size() == 5);
  CHECK(j["kk2_coeffs"][1]["num"] == "5");
  CHECK(j["kk2_coeffs"][1]["den"] == "12");
  CHECK(j["binomial_c"] == nlohmann::json({"1", "2", "2", "1", "1"}));
  // Default depth is phi(n) + 3.
  CHECK(j["verified_through"] == 7);
}

TEST_CASE("interpolate marks the one series outside the kk2 span") {
  RunResult r = run({"interpolate", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["kk2_coeffs"].is_null());
  CHECK(j["binomial_c"] == nlohmann::json({"1", "1"}));
}

TEST_CASE("hypotheses accepts a range and emits one csv row per n") {
  RunResult r = run({"hypotheses", "--n", "3..4", "--k-max", "7", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "n,phi,degree_observed,degree_matches,polynomial_on_tested_range,"
        "leading_num,leading_den,leading_matches_factorial,kk2_representable,"
        "integer_valued,coincident_with\n"
        "3,2,2,yes,yes,1,2,yes,yes,yes,4\n"
        "4,2,2,yes,yes,1,2,na,yes,yes,3\n");
}

TEST_CASE("only hypotheses may take an n range") {
  CHECK(run({"interpolate", "--n", "2..5"}).code == 1);
  CHECK(run({"crosscheck", "--n", "2..5", "--k-max", "3"}).code == 1);
}

TEST_CASE("--out writes the same bytes the stream would get") {
  namespace fs = std::filesystem;
  fs::path target = fs::temp_directory_path() / "nvg_cli_test_out.csv";
  fs::remove(target);

  RunResult direct = run({"growth", "--n", "4", "--k-max", "5", "--format", "csv"});
  RunResult filed = run({"growth", "--n", "4", "--k-max", "5", "--format", "csv",
                         "--out", target.string()});
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());

  std::ifstream in(target, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  fs::remove(target);

  RunResult bad = run({"growth", "--n", "4", "--k-max", "5", "--out",
                       "/nonexistent-dir/depth/x.csv"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("crosscheck agrees with itself on small instances") {
  RunResult r = run({"crosscheck", "--n", "3", "--k-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("crosscheck ok") != std::string::npos);

  RunResult json = run({"crosscheck", "--n", "5", "--k-max", "2", "--format", "json"});
  REQUIRE(json.code == 0);
  nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["match"] == true);
  CHECK(j["rows"][2]["p"] == "5");
}

TEST_CASE("crosscheck surfaces tolerance dead zones as a resource failure") {
  RunResult r = run({"crosscheck", "--n", "3", "--k-max", "2", "--tol", "0.75"});
  CHECK(r.code == 2);
  CHECK(r.err.find("tol") != std::string::npos);
}
