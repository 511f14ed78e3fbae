#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <unistd.h>

#include "commands.hpp"
#include "run_config.hpp"
#include "spectrum_cache.hpp"

namespace fs = std::filesystem;
using echspec::cli::run_main;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "echspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("echspec_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const char* name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Parse, Ranges) {
  const auto r = echspec::cli::parse_range("3..17");
  EXPECT_EQ(r.lo, 3);
  EXPECT_EQ(r.hi, 17);
  const auto single = echspec::cli::parse_range("42");
  EXPECT_EQ(single.lo, 42);
  EXPECT_EQ(single.hi, 42);
  for (const char* bad : {"", "5..", "..5", "-1..3", "-2", "7..3", "1.5"}) {
    EXPECT_THROW(echspec::cli::parse_range(bad), std::invalid_argument) << bad;
  }
}

TEST(Parse, ComplexPoints) {
  EXPECT_EQ(echspec::cli::parse_complex("0.5,14.1"), echspec::ComplexVal(0.5, 14.1));
  EXPECT_EQ(echspec::cli::parse_complex("-3"), echspec::ComplexVal(-3.0, 0.0));
  EXPECT_THROW(echspec::cli::parse_complex("1,2,3"), std::invalid_argument);
  EXPECT_THROW(echspec::cli::parse_complex("x"), std::invalid_argument);
}

TEST(Capacities, UnitBallCsv) {
  const auto r = run({"capacities", "-a", "1", "-b", "1", "-k", "0..5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "k,c_num,c_den,c_float");
  EXPECT_EQ(ls[1], "0,0,1,0");
  EXPECT_EQ(ls[4], "3,2,1,2");
  EXPECT_EQ(ls[6], "5,2,1,2");
}

TEST(Capacities, JsonRoundTripsTheCsvRows) {
  const auto csv = run({"capacities", "-a", "3", "-b", "7/2", "-k", "10..30"});
  const auto js = run({"capacities", "-a", "3", "-b", "7/2", "-k", "10..30", "--format", "json"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(js.code, 0);
  const auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["config"]["command"], "capacities");
  EXPECT_EQ(doc["config"]["b"], "7/2");
  const auto ls = lines(csv.out);
  ASSERT_EQ(doc["rows"].size() + 1, ls.size());
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto& row = doc["rows"][i];
    std::ostringstream rebuilt;
    rebuilt << row["k"].get<std::string>() << ',' << row["c_num"].get<std::string>() << ','
            << row["c_den"].get<std::string>() << ',';
    EXPECT_EQ(ls[i + 1].rfind(rebuilt.str(), 0), 0u) << ls[i + 1];
    const double f = std::stod(ls[i + 1].substr(rebuilt.str().size()));
    EXPECT_EQ(row["c_float"].get<double>(), f);
  }
}

TEST(Weyl, DocumentedCounts) {
  const auto r = run({"weyl", "-a", "1", "-b", "1", "-R", "0,10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls[1], "0,1,0,1,1");
  EXPECT_EQ(ls[2], "10,1,10,66,11");
}

TEST(Weyl, ReportsOracleAndStatedCoefficients) {
  std::string radii;
  for (int R = 20; R <= 1000; R += 20) radii += (radii.empty() ? "" : ",") + std::to_string(R);
  const auto r = run({"weyl", "-a", "1", "-b", "1", "-R", radii, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["oracle_coefficient"], "1/2");
  EXPECT_NEAR(doc["summary"]["fit_over_oracle"].get<double>(), 1.0, 0.02);
  EXPECT_NEAR(doc["summary"]["stated_over_fit"].get<double>(), 2.0, 0.05);
  EXPECT_FALSE(doc["warnings"].empty());
}

TEST(Dk, RowsAndSummary) {
  const auto r = run({"dk", "-a", "1", "-b", "1", "-k", "1..20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "j,c_num,c_den,d,d_err");
  EXPECT_EQ(ls[3].substr(0, 6), "3,2,1,");
  EXPECT_NEAR(std::stod(ls[3].substr(6)), 2.0 - std::sqrt(6.0), 1e-15);
  EXPECT_NE(r.out.find("# exponent="), std::string::npos);
}

TEST(Zeta, EvaluatesEveryRequestedPoint) {
  const auto r = run({"zeta", "-a", "1", "-b", "1", "-s", "3", "-s", "0.5,2", "--convention", "interior"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[1].substr(0, 14), "interior,3,0,0");
  const double z2 = M_PI * M_PI / 6, z3 = 1.2020569031595942854;
  EXPECT_NEAR(std::stod(ls[1].substr(13)), z2 - z3, 1e-12);
}

TEST(Zeta, PoleIsANumericalError) {
  const auto r = run({"zeta", "-a", "1", "-b", "2", "-s", "2", "--convention", "full"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Residues, EllipsoidOneTwo) {
  const auto r = run({"residues", "-a", "1", "-b", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  bool saw_value = false;
  for (const auto& row : doc["rows"]) {
    const std::string conv = row["convention"], q = row["quantity"];
    const double s0 = row["s0"], re = row["re"];
    if (conv == "distinct") continue;
    if (q == "residue" && s0 == 2) EXPECT_NEAR(re, 0.5, 1e-6) << conv;
    if (q == "residue" && s0 == 1) EXPECT_NEAR(re, conv == "full" ? 0.75 : -0.75, 1e-6) << conv;
    if (q == "value" && conv == "interior") {
      EXPECT_NEAR(re, 11.0 / 24.0, 1e-6);
      saw_value = true;
    }
  }
  EXPECT_TRUE(saw_value);
}

TEST(Envelope, DefaultsAreInadmissibleAndReported) {
  const auto r = run({"envelope", "--steps", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("minimal admissible j"), std::string::npos);
  EXPECT_NE(r.out.find("# min_admissible_j="), std::string::npos);
}

TEST(Envelope, UncheckedSweep) {
  const auto r = run({"envelope", "--steps", "4", "--j-min", "1e4", "--j-max", "1e10", "--unchecked", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 4u);
  for (const auto& row : doc["rows"]) {
    EXPECT_LE(row["c_lo"].get<double>(), row["c_hi"].get<double>());
    EXPECT_LE(row["r1_deviation"].get<double>(), doc["summary"]["r1_deviation_bound"].get<double>());
  }
}

TEST(Cache, WarmRunIsByteIdentical) {
  TempDir dir;
  const auto path = dir.file("e37.cache");
  const auto plain = run({"capacities", "-a", "3", "-b", "7", "-k", "100..400"});
  const auto cold = run({"capacities", "-a", "3", "-b", "7", "-k", "100..400", "--cache", path});
  ASSERT_TRUE(fs::exists(path));
  const auto warm = run({"capacities", "-a", "7", "-b", "3", "-k", "150..300", "--cache", path});
  const auto warm_full = run({"capacities", "-a", "3", "-b", "7", "-k", "100..400", "--cache", path});
  EXPECT_EQ(cold.out, plain.out);
  EXPECT_EQ(warm_full.out, plain.out);
  EXPECT_TRUE(warm.err.empty());
  const auto sub = run({"capacities", "-a", "7", "-b", "3", "-k", "150..300"});
  EXPECT_EQ(warm.out, sub.out);
}

TEST(Cache, CorruptFileIsRebuiltWithAWarning) {
  TempDir dir;
  const auto path = dir.file("bad.cache");
  {
    std::ofstream f(path);
    f << "ECHSPEC v1 a=1 b=1 kmax=3\n0,0,1\n1,1,1\n2,5,1\n3,2,1\n";
  }
  const auto r = run({"capacities", "-a", "1", "-b", "1", "-k", "0..5", "--cache", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# warning:"), std::string::npos);
  EXPECT_EQ(lines(r.out)[3], "2,1,1,1");
  const auto loaded = echspec::cli::SpectrumCache::load(path);
  EXPECT_EQ(loaded.kmax(), 5);
}

TEST(Cache, RejectsMalformedHeaders) {
  TempDir dir;
  const auto path = dir.file("hdr.cache");
  {
    std::ofstream f(path);
    f << "ECHSPEC v0 a=1 b=1 kmax=0\n0,0,1\n";
  }
  EXPECT_THROW(echspec::cli::SpectrumCache::load(path), echspec::cli::CacheError);
}

TEST(Errors, InvalidInputExitsTwoWithDiagnosticsOnStderr) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"capacities", "-a", "0.5", "-b", "1", "-k", "0..2"},
           {"capacities", "-a", "1", "-b", "1", "-k", "4..2"},
           {"capacities", "--bogus"},
           {"frobnicate"},
           {},
           {"zeta", "-s", "1,2,3"},
           {"envelope", "--c1", "0"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "(none)" : args[0]);
    EXPECT_TRUE(r.out.empty()) << r.out;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Errors, HelpGoesToStdout) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("capacities"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}
