#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "proxcg/csv.hpp"
#include "proxcg/errors.hpp"
#include "proxcg/suite_config.hpp"

using namespace proxcg;
namespace fs = std::filesystem;

namespace {

const std::string kCli = PROXCG_CLI_PATH;
const std::string kDataDir = PROXCG_DATA_DIR;

int run_cli(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "proxcg_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve writes trace and summary and exits 0") {
  const fs::path out = fresh_dir("solve_ok");
  const int code = run_cli(
      "solve --family lasso --m 60 --n 20 --s 5 --lambda 0.1 --variant alg31 --seed 7 --out " +
      out.string());
  CHECK(code == 0);
  CHECK(fs::exists(out / "trace.csv"));
  CHECK(fs::exists(out / "summary.csv"));
  const std::string trace = slurp(out / "trace.csv");
  CHECK(trace.rfind("# proxcg-csv v1", 0) == 0);
  CHECK(trace.find("step_kind") != std::string::npos);
}

TEST_CASE("solve exit code 2 on max-iter") {
  const fs::path out = fresh_dir("solve_maxiter");
  const int code = run_cli(
      "solve --family lasso --m 60 --n 20 --s 5 --variant pgm --seed 7 --max-iter 3 --out " +
      out.string());
  CHECK(code == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("solve --m 10") == 1);                       // missing --family
  CHECK(run_cli("bogus") == 1);                              // unknown subcommand
  CHECK(run_cli("solve --family logistic --variant alg31") == 1);  // missing --dataset
}

TEST_CASE("apg on mcp is a usage error") {
  const fs::path out = fresh_dir("apg_mcp");
  const int code = run_cli(
      "solve --family mcp --m 30 --n 10 --s 3 --c 10 --variant apg --seed 1 --out " +
      out.string());
  CHECK(code == 1);
}

TEST_CASE("suite from flags, aggregates equal run rows at one repetition") {
  const fs::path out = fresh_dir("suite_flags");
  const int code = run_cli(
      "suite --family lasso --m 40 --n 15 --s 4 --lambda 0.1 --variants alg31,pgm "
      "--repetitions 1 --seed 5 --out " +
      out.string());
  CHECK(code == 0);
  const auto rows = read_runs_csv((out / "runs.csv").string());
  REQUIRE(rows.size() == 2);
  // single-repetition aggregates mirror the run rows
  const std::string agg = slurp(out / "aggregate.csv");
  for (const auto& row : rows) {
    CHECK(agg.find(row.variant + ",1,1," + fmt_double(static_cast<double>(row.iterations))) !=
          std::string::npos);
  }
}

TEST_CASE("suite from a config file with a logistic problem") {
  const fs::path out = fresh_dir("suite_config");
  const fs::path cfg = out / "suite.cfg";
  {
    std::ofstream f(cfg);
    f << "[suite]\n"
      << "variants = alg31, pgm\n"
      << "repetitions = 1\n"
      << "seed = 2\n"
      << "tol = 1e-6\n"
      << "max_iter = 20000\n"
      << "[problem]\n"
      << "family = logistic\n"
      << "dataset = " << kDataDir << "/sample100.libsvm\n"
      << "lambda = 0.1\n"
      << "[problem]\n"
      << "family = lasso\n"
      << "m = 40\nn = 15\ns = 4\nlambda = 0.1\n";
  }
  const int code = run_cli("suite --config " + cfg.string() + " --out " + out.string());
  CHECK(code == 0);
  const auto rows = read_runs_csv((out / "runs.csv").string());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].family == "logistic");
  CHECK(rows[0].status == "converged");
  CHECK(rows[2].family == "lasso");
}

TEST_CASE("profile metrics give distinct valid outputs") {
  const fs::path out = fresh_dir("profile_metrics");
  REQUIRE(run_cli("suite --family lasso --m 40 --n 15 --s 4 --variants alg31,pgm "
                  "--repetitions 2 --seed 5 --out " +
                  out.string()) == 0);
  CHECK(run_cli("profile --runs " + (out / "runs.csv").string() + " --metric iterations --out " +
                (out / "it").string()) == 0);
  CHECK(run_cli("profile --runs " + (out / "runs.csv").string() + " --metric time --out " +
                (out / "tm").string()) == 0);
  const std::string by_iters = slurp(out / "it" / "profile.csv");
  const std::string by_time = slurp(out / "tm" / "profile.csv");
  CHECK(by_iters.rfind("# proxcg-csv v1", 0) == 0);
  CHECK(by_iters != by_time);
}

TEST_CASE("profile rejects malformed and empty csv with exit 1") {
  const fs::path out = fresh_dir("profile_bad");
  const fs::path bad = out / "bad.csv";
  std::ofstream(bad) << "# proxcg-csv v1\nnot,a,header\n";
  CHECK(run_cli("profile --runs " + bad.string() + " --out " + out.string()) == 1);
  const fs::path empty = out / "empty.csv";
  std::ofstream(empty).close();
  CHECK(run_cli("profile --runs " + empty.string() + " --out " + out.string()) == 1);
}

TEST_CASE("runs csv round trip") {
  std::vector<ProblemSpec> specs{McpSpec{30, 12, 3, 0.1, 10.0, false, 0}};
  SuiteOptions options;
  options.variants = {Variant::ProxCgWeakly};
  options.repetitions = 2;
  const SuiteResult result = run_suite(specs, options);
  const auto rows = make_run_rows(specs, result.runs);

  const fs::path out = fresh_dir("roundtrip");
  write_runs_csv((out / "runs.csv").string(), rows);
  const auto parsed = read_runs_csv((out / "runs.csv").string());
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].family == rows[i].family);
    CHECK(parsed[i].variant == rows[i].variant);
    CHECK(parsed[i].iterations == rows[i].iterations);
    CHECK(parsed[i].final_f == rows[i].final_f);
    CHECK(parsed[i].seed == rows[i].seed);
  }
}

TEST_CASE("suite config parser diagnostics") {
  CHECK_THROWS_AS(parse_suite_config_text("x = 1\n"), ParseError);  // key outside sections
  try {
    parse_suite_config_text("[suite]\nvariants = alg31\n[problem]\nfamily = lasso\nwhat = 3\n");
    FAIL("unknown key must be rejected");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_suite_config_text("[suite]\nrepetitions = 2\n"), std::runtime_error);

  const SuiteConfigFile parsed = parse_suite_config_text(
      "[suite]\nvariants = alg41 , pgm\nrepetitions = 3\nseed = 9\nmu_increase = true\n"
      "[problem]\nfamily = mcp\nm = 10\nn = 5\ns = 2\nc = 0.1\n");
  CHECK(parsed.options.variants.size() == 2);
  CHECK(parsed.options.variants[0] == Variant::ProxCgWeakly);
  CHECK(parsed.options.repetitions == 3);
  CHECK(parsed.options.seed_base == 9);
  CHECK(parsed.options.config.mu_increase);
  REQUIRE(parsed.problems.size() == 1);
  CHECK(std::get<McpSpec>(parsed.problems[0]).c == 0.1);
}

TEST_SUITE_END();
