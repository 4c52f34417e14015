#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace homcount {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("homcount_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& body) const {
    const auto p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(CliCount, Examples) {
  EXPECT_EQ(run({"count", "--sequence", "I", "--k", "5"}).out, "5487\nmethod: recurrence\n");
  EXPECT_EQ(run({"count", "--sequence", "L", "--k", "6", "--method", "egf"}).out, "131244\nmethod: egf\n");
  EXPECT_EQ(run({"count", "--sequence", "I", "--k", "3", "--method", "brute-force"}).out,
            "71\nmethod: brute-force\n");
  const auto closed = run({"count", "--sequence", "I", "--k", "13", "--method", "closed-form"});
  EXPECT_EQ(closed.code, 0);
  EXPECT_EQ(closed.out,
            "63638447941550\nmethod: closed-form\nnote: excludes the empty ordering; recurrence value is +1 "
            "(63638447941551)\n");
  EXPECT_EQ(run({"count", "--sequence", "fubini", "--k", "4"}).out, "75\nmethod: recurrence\n");
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--sequence", "Q", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--sequence", "I", "--k", "3", "--method", "magic"}).code, 2);
  const auto egf_for_I = run({"count", "--sequence", "I", "--k", "3", "--method", "egf"});
  EXPECT_EQ(egf_for_I.code, 2);
  EXPECT_NE(egf_for_I.err.find("does not apply"), std::string::npos);
  EXPECT_EQ(run({"count", "--sequence", "L", "--k", "3", "--method", "closed-form"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliCap, RefusesAboveCap) {
  const auto r = run({"count", "--sequence", "I", "--k", "8", "--method", "brute-force"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("k=8 exceeds cap 7"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--k", "4", "--cap", "3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--k", "3", "--cap", "3"}).code, 0);
}

TEST(CliCap, EnvironmentVariable) {
  ::setenv("HOMCOUNT_CAP", "2", 1);
  EXPECT_EQ(run({"count", "--sequence", "L", "--k", "3", "--method", "brute-force"}).code, 2);
  EXPECT_EQ(run({"count", "--sequence", "L", "--k", "3", "--method", "brute-force", "--cap", "3"}).out,
            "95\nmethod: brute-force\n");
  ::setenv("HOMCOUNT_CAP", "many", 1);
  EXPECT_EQ(run({"count", "--sequence", "L", "--k", "1", "--method", "brute-force"}).code, 2);
  ::unsetenv("HOMCOUNT_CAP");
  EXPECT_EQ(run({"count", "--sequence", "L", "--k", "3", "--method", "brute-force"}).code, 0);
}

TEST(CliEnumerate, TextAndJson) {
  const auto r = run({"enumerate", "--k", "1"});
  EXPECT_EQ(r.out, "(empty)\nR1\nS{1}\n# 3 models\n");
  const auto two = run({"enumerate", "--k", "2"});
  EXPECT_NE(two.out.find("# 12 models"), std::string::npos);
  const auto parts = run({"enumerate", "--k", "2", "--partitions"});
  EXPECT_EQ(parts.out, "S{1,2}\nS{1} S{2}\nS{2} S{1}\n# 3 models\n");
  const auto json = run({"enumerate", "--k", "1", "--format", "json", "--unconstrained", "--surjective"});
  EXPECT_EQ(json.out,
            "{\"k\": 1, \"adjacency_constrained\": false, \"points\": [{\"type\":\"R\",\"color\":1}]}\n"
            "{\"k\": 1, \"adjacency_constrained\": false, \"points\": [{\"type\":\"S\",\"colors\":[1]}]}\n");
  EXPECT_EQ(run({"enumerate", "--k", "1", "--format", "xml"}).code, 2);
}

TEST(CliVerify, PassesAndReportsFailures) {
  const auto six = run({"verify", "--k-max", "6"});
  EXPECT_EQ(six.code, 0) << six.out;
  EXPECT_NE(six.out.find("checks passed"), std::string::npos);
  EXPECT_EQ(run({"verify", "--k-max", "0"}).code, 0);

  CountSources broken;
  broken.I = [](unsigned k) { return count_I(k) + (k == 4 ? 1 : 0); };
  std::ostringstream os;
  EXPECT_EQ(report_checks(run_checks({.k_max = 6, .series_order = 8, .cap = 6}, broken), os), 1);
  EXPECT_NE(os.str().find("FAIL  I-sequence"), std::string::npos);
  EXPECT_NE(os.str().find("I(4): got 559, expected 558"), std::string::npos);
}

TEST(CliExport, Formats) {
  EXPECT_EQ(run({"export", "--sequence", "I", "--k-max", "3"}).out, "1 3\n2 12\n3 71\n");
  EXPECT_EQ(run({"export", "--sequence", "L", "--k-max", "2"}).out, "0 1\n1 3\n2 14\n");
  EXPECT_EQ(run({"export", "--sequence", "L", "--k-max", "0", "--format", "csv"}).out, "k,value\n0,1\n");
  const auto json = run({"export", "--sequence", "J", "--k-max", "2", "--format", "json"}).out;
  const auto doc = nlohmann::json::parse(json);
  EXPECT_EQ(doc["sequence"], "J");
  EXPECT_EQ(doc["terms"].size(), 3u);
  EXPECT_EQ(doc["terms"][2][1], "9");
  EXPECT_EQ(run({"export", "--sequence", "L", "--k-max", "2", "--format", "tsv"}).code, 2);
}

TEST(CliExport, Files) {
  TempDir dir;
  const auto path = dir.path("I.txt");
  EXPECT_EQ(run({"export", "--sequence", "I", "--k-max", "2", "--output", path}).code, 0);
  EXPECT_EQ(slurp(path), "1 3\n2 12\n");
  const auto bad = run({"export", "--sequence", "I", "--k-max", "2", "--output", dir.path("missing/dir/x.txt")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("cannot write"), std::string::npos);
}

TEST(CliCorrespondence, ExpandAndContract) {
  TempDir dir;
  const auto model = dir.file(
      "m.json", R"({"k": 3, "adjacency_constrained": true, "points": [{"type":"S","colors":[1,3]},{"type":"R","color":2}]})");
  const auto expanded = run({"expand", "--input", model});
  ASSERT_EQ(expanded.code, 0) << expanded.err;
  EXPECT_EQ(expanded.out,
            "{\"segments\":[{\"type\":\"shuffle\",\"kinds\":[{\"finite\":1},{\"finite\":3}]}, "
            "{\"type\":\"block\",\"kind\":{\"finite\":2}}]}\n");
  const auto desc = dir.file("d.json", expanded.out);
  const auto back = run({"contract", "--input", desc});
  EXPECT_EQ(back.out, slurp(model) + "\n");

  const auto colored = dir.file(
      "c.json", R"({"k": 2, "adjacency_constrained": false, "points": [{"type":"R","color":1},{"type":"R","color":2}]})");
  const auto c = run({"expand", "--input", colored});
  EXPECT_EQ(c.out, "{\"segments\":[{\"type\":\"block\",\"color\":1}, {\"type\":\"block\",\"color\":2}]}\n");
  EXPECT_EQ(run({"contract", "--input", dir.file("c2.json", c.out)}).out, slurp(colored) + "\n");

  const auto bad_model = dir.file(
      "bad.json", R"({"k": 2, "adjacency_constrained": true, "points": [{"type":"R","color":1},{"type":"R","color":2}]})");
  const auto rejected = run({"expand", "--input", bad_model});
  EXPECT_EQ(rejected.code, 2);
  EXPECT_NE(rejected.err.find("Tprime.3b"), std::string::npos);
  const auto omega = dir.file("o.json", R"({"segments":[{"type":"block","kind":"omega"}]})");
  EXPECT_EQ(run({"contract", "--input", omega, "--k", "3"}).code, 2);
  EXPECT_EQ(run({"contract", "--input", dir.path("nope.json")}).code, 2);
}

TEST(CliSeries, Coefficients) {
  const auto r = run({"series", "--egf", "f", "--terms", "3"});
  EXPECT_EQ(r.out, "j  coefficient  j!*coefficient\n0  1  1\n1  2  2\n2  9/2  9\n3  61/6  61\n");
  EXPECT_EQ(run({"series", "--egf", "g"}).code, 2);
}

TEST(CliAsymptotic, ConstantsAndRatios) {
  const auto c = run({"asymptotic", "constants"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("Z            0.4428544"), std::string::npos);
  EXPECT_NE(c.out.find("limit_ratio  0.6422007"), std::string::npos);
  const auto r = run({"asymptotic", "ratios", "--k-max", "3"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, 5);
  EXPECT_EQ(run({"asymptotic", "ratios", "--k-max", "171"}).code, 2);
}

}  // namespace
}  // namespace homcount
