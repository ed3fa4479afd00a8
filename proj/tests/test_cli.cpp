#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sumsetlab/cli.hpp"
#include "sumsetlab/exact_enum.hpp"
#include "sumsetlab/io.hpp"

using Json = nlohmann::json;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> full{"sumsetlab"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  return sumsetlab::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sumsetlab_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json run_json(std::initializer_list<std::string> args, int expect_code,
              const std::string& tag) {
  const auto path = temp_file(tag + ".json");
  std::vector<std::string> full(args);
  full.push_back("--out");
  full.push_back(path.string());
  std::vector<std::string> owned{"sumsetlab"};
  owned.insert(owned.end(), full.begin(), full.end());
  std::vector<const char*> argv;
  for (const std::string& s : owned) argv.push_back(s.c_str());
  const int code =
      sumsetlab::cli::run(static_cast<int>(argv.size()), argv.data());
  CHECK(code == expect_code);
  const Json doc = Json::parse(slurp(path));
  std::filesystem::remove(path);
  return doc;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({"dist", "--ensemble", "free", "--kind", "sum"}) == 2);
  CHECK(run_cli({"dist", "--n", "10", "--method", "mc"}) == 2);  // no seed
  CHECK(run_cli({"dist", "--n", "70"}) == 2);
  CHECK(run_cli({"dist", "--n", "10", "--interval", "garble"}) == 2);
  CHECK(run_cli({"check", "--rule", "no-such-rule", "--n", "8"}) == 2);
  CHECK(run_cli({"check", "--rule", "t2a-r"}) == 2);  // missing --n
  CHECK(run_cli({"formula", "--which", "cond"}) == 2);
  CHECK(run_cli({"formula", "--which", "cond", "--k", "3", "--format",
                 "csv"}) == 2);
  CHECK(run_cli({"scan", "--rule", "blips"}) == 2);
  CHECK(run_cli({"scan", "--rule", "blips", "--n-range", "9:3"}) == 2);
  CHECK(run_cli({"tail"}) == 2);
  CHECK(run_cli({"nonsense"}) == 2);
}

TEST_CASE("dist json round-trips the exact distribution") {
  const Json doc = run_json({"dist", "--ensemble", "free", "--kind", "sum",
                             "--interval", "all", "--n", "10"},
                            0, "dist_free");
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("command") == "dist");
  CHECK(doc.at("inputs").at("ensemble") == "free");
  CHECK(doc.at("inputs").at("n") == 10);
  const sumsetlab::ExactPmf parsed =
      sumsetlab::io::pmf_from_json(doc.at("results").at("pmf"));
  const sumsetlab::ExactPmf direct = sumsetlab::exact_pmf(
      {sumsetlab::Ensemble::Free, sumsetlab::Kind::Sum,
       sumsetlab::PresetName::All, 10});
  CHECK(parsed.n_free == direct.n_free);
  CHECK(parsed.counts == direct.counts);
}

TEST_CASE("dist csv carries the documented schema") {
  const auto path = temp_file("dist.csv");
  CHECK(run_cli({"dist", "--ensemble", "zero-end", "--kind", "diff",
                 "--interval", "half", "--n", "9", "--method", "exact",
                 "--format", "csv", "--out", path.string()}) == 0);
  std::istringstream body(slurp(path));
  std::filesystem::remove(path);

  std::string line;
  std::vector<std::string> rows;
  bool saw_echo = false, saw_header = false;
  while (std::getline(body, line)) {
    if (line.rfind("#", 0) == 0) {
      saw_echo = true;
      continue;
    }
    if (!saw_header) {
      CHECK(line == "m,count,denom_log2,prob");
      saw_header = true;
      continue;
    }
    rows.push_back(line);
  }
  CHECK(saw_echo);
  REQUIRE(saw_header);
  REQUIRE(rows.size() == 10);

  const std::vector<long> expected{63, 27, 16, 8, 6, 6, 1, 1, 0, 0};
  long total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::istringstream row(rows[i]);
    std::string m, count, denom, prob;
    std::getline(row, m, ',');
    std::getline(row, count, ',');
    std::getline(row, denom, ',');
    std::getline(row, prob, ',');
    CHECK(std::stol(m) == static_cast<long>(i));
    CHECK(std::stol(count) == expected[i]);
    CHECK(std::stol(denom) == 7);
    total += std::stol(count);
  }
  CHECK(total == 128);
}

TEST_CASE("dist monte carlo honors seed echo and sample totals") {
  const Json doc =
      run_json({"dist", "--ensemble", "zero", "--kind", "sum", "--interval",
                "s", "--n", "12", "--method", "mc", "--samples", "20000",
                "--seed", "42"},
               0, "dist_mc");
  CHECK(doc.at("inputs").at("seed") == 42);
  CHECK(doc.at("inputs").at("samples") == 20000);
  const sumsetlab::EstimatedPmf est =
      sumsetlab::io::estimated_from_json(doc.at("results").at("pmf"));
  CHECK(est.samples == 20000);
  std::uint64_t total = 0;
  for (std::uint64_t h : est.hits) total += h;
  CHECK(total == 20000);

  // Same seed, same tallies.
  const Json again =
      run_json({"dist", "--ensemble", "zero", "--kind", "sum", "--interval",
                "s", "--n", "12", "--method", "mc", "--samples", "20000",
                "--seed", "42"},
               0, "dist_mc2");
  CHECK(again.at("results").at("pmf") == doc.at("results").at("pmf"));
}

TEST_CASE("formula cond matches the documented spot value") {
  const Json doc = run_json({"formula", "--which", "cond", "--k", "3"}, 0,
                            "formula_cond");
  CHECK(doc.at("results").at("k") == 3);
  CHECK(doc.at("results").at("value_num") == 3);
  CHECK(doc.at("results").at("value_den") == 5);
}

TEST_CASE("formula t-rec emits the whole sequence") {
  const Json doc =
      run_json({"formula", "--which", "t-rec", "--k", "6"}, 0, "formula_trec");
  const Json& values = doc.at("results").at("values");
  REQUIRE(values.size() == 6);
  CHECK(values[0].at("num") == 1);
  CHECK(values[0].at("den") == 4);
  CHECK(doc.at("results").at("value_num") == 17);
  CHECK(doc.at("results").at("value_den") == 32);
}

TEST_CASE("failing convolution check exits 1 and reports the gap") {
  const Json doc = run_json({"check", "--rule", "t2a-r", "--n", "6"}, 1,
                            "check_fail");
  CHECK(doc.at("results").at("pass") == false);
  const Json& report = doc.at("results").at("report");
  CHECK(report.at("rule") == "t2a-r");
  CHECK(report.at("tv").at("num") == 773);
  CHECK(report.at("tv").at("den") == 2048);
  CHECK(report.at("tv_gap").get<double>() > 0.3);
}

TEST_CASE("structural checks pass with exit 0") {
  CHECK(run_json({"check", "--rule", "middle-mass", "--n", "8"}, 0,
                 "check_mm")
            .at("results")
            .at("pass") == true);
  CHECK(run_json({"check", "--rule", "independence", "--n", "8"}, 0,
                 "check_ind")
            .at("results")
            .at("pass") == true);
  CHECK(run_json({"check", "--rule", "tails", "--n", "8"}, 0, "check_tails")
            .at("results")
            .at("pass") == true);
  CHECK(run_json({"check", "--rule", "min-element", "--n", "10"}, 0,
                 "check_min")
            .at("results")
            .at("pass") == true);
  const Json hs = run_json({"check", "--rule", "halfline-sums"}, 0,
                           "check_hs");
  CHECK(hs.at("results").at("pass") == true);
  CHECK(hs.at("results").at("max_bin").at("m") == 19);
  CHECK(hs.at("results").at("max_bin").at("count") == 1);
  // The series variant is informational and never fails.
  CHECK(run_json({"check", "--rule", "halfline", "--variant", "series",
                  "--n", "4"},
                 0, "check_series")
            .at("results")
            .at("pass") == true);
}

TEST_CASE("difference rule variant flag reaches the report") {
  const Json doc = run_json({"check", "--rule", "t2b-4", "--variant", "half",
                             "--n", "8"},
                            1, "check_b4_half");
  CHECK(doc.at("inputs").at("variant") == "half");
  CHECK(doc.at("results").at("report").at("tv").at("num") == 317);
  CHECK(doc.at("results").at("report").at("tv").at("den") == 2048);
  CHECK(run_cli({"check", "--rule", "t2b-4", "--variant", "sideways", "--n",
                 "8"}) == 2);
}

TEST_CASE("scan reports agree across the default families") {
  const Json doc = run_json({"scan", "--rule", "blips", "--n-range", "1:10"},
                            0, "scan_blips");
  const Json& rows = doc.at("results").at("rows");
  REQUIRE(rows.size() == 60);  // six families, ten sizes
  for (const Json& row : rows) {
    CHECK(row.at("agrees") == true);
  }
  const Json shape = run_json({"scan", "--rule", "limit-shape", "--n-range",
                               "4:8"},
                              0, "scan_shape");
  CHECK(shape.at("results").at("rows").size() == 5);
  CHECK(shape.at("results").at("series").size() == 5);
}

TEST_CASE("scan csv lists witnesses") {
  const auto path = temp_file("scan.csv");
  CHECK(run_cli({"scan", "--rule", "small-window-sums", "--n-range", "1:8",
                 "--format", "csv", "--out", path.string()}) == 0);
  const std::string text = slurp(path);
  std::filesystem::remove(path);
  CHECK(text.find("label,n,m_star,witnesses,") != std::string::npos);
  CHECK(text.find("zero/sum/s") != std::string::npos);
}

TEST_CASE("tail command spans a range") {
  const Json doc = run_json({"tail", "--n-range", "5:10"}, 0, "tail_range");
  CHECK(doc.at("results").at("all_match") == true);
  const Json& rows = doc.at("results").at("rows");
  REQUIRE(rows.size() == 6);
  for (const Json& row : rows) {
    CHECK(row.at("top_bins_zero") == true);
    CHECK(row.at("matches_exact") == true);
  }
  CHECK(rows[4].at("n") == 9);
  CHECK(rows[4].at("witnesses").empty());
  CHECK_FALSE(rows[5].at("witnesses").empty());
}

TEST_CASE("guard environment variable limits enumeration") {
  REQUIRE(setenv("SUMSETLAB_GUARD_LOG2", "5", 1) == 0);
  CHECK(run_cli({"dist", "--n", "10", "--out", "/dev/null"}) == 3);
  REQUIRE(setenv("SUMSETLAB_GUARD_LOG2", "notanumber", 1) == 0);
  CHECK(run_cli({"dist", "--n", "10", "--out", "/dev/null"}) == 2);
  REQUIRE(unsetenv("SUMSETLAB_GUARD_LOG2") == 0);
  CHECK(run_cli({"dist", "--n", "10", "--out", "/dev/null"}) == 0);
}

TEST_CASE("negative interval bounds parse in equals form") {
  const Json doc = run_json({"dist", "--ensemble", "zero", "--kind", "diff",
                             "--interval=-4:4", "--n", "5"},
                            0, "dist_negiv");
  const sumsetlab::ExactPmf parsed =
      sumsetlab::io::pmf_from_json(doc.at("results").at("pmf"));
  const sumsetlab::ExactPmf direct = sumsetlab::exact_pmf(
      {sumsetlab::Ensemble::Zero, sumsetlab::Kind::Diff,
       sumsetlab::IntervalSpec{-4, 4}, 5});
  CHECK(parsed.counts == direct.counts);
}
