#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace opplab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "opplab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, OppIntervalsExample) {
  const auto r = invoke({"opp-intervals", "--n", "3", "--I", "132,231", "--J", "213,312"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(first_line(r.out), "true");
  const auto j = invoke({"opp-intervals", "--I", "1342,2341", "--J", "3124,4123", "--format", "json"});
  EXPECT_EQ(j.code, cli::kOk);
  const auto body = nlohmann::json::parse(j.out);
  EXPECT_FALSE(body["opposed"].get<bool>());
  EXPECT_FALSE(body["opposed_numeric"].get<bool>());
}

TEST(Cli, IntervalsAcceptJson) {
  const auto r = invoke({"opp-intervals", "--I", R"({"v":[1,3,2],"w":[2,3,1]})", "--J", "213,312", "--trials", "0"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(first_line(r.out), "true");
}

TEST(Cli, CensusReportsOneOpposedDisjointPair) {
  const std::string path = ::testing::TempDir() + "opplab_s3.jsonl";
  const auto r = invoke({"census", "--n", "3", "--out", path, "--format", "json"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["opposed_disjoint"].get<int>(), 1);
  EXPECT_EQ(body["pairs"].get<int>(), 190);
  std::ifstream file(path);
  std::string line;
  int lines = 0;
  while (std::getline(file, line)) {
    const auto entry = nlohmann::json::parse(line);
    for (const char* key : {"I", "J", "opposed", "intersect", "bip_intersect"}) EXPECT_TRUE(entry.contains(key)) << key;
    ++lines;
  }
  EXPECT_EQ(lines, 190);
  std::remove(path.c_str());
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"census", "--n", "3", "--format", "json"},
      {"opp-intervals", "--I", "1324,3412", "--J", "2143,4231", "--seed", "5"},
      {"sample-cell", "--I", "1234,4321", "--side", "TNP", "--seed", "3"},
      {"grasstope-check", "--I", "123,321", "--W", "[[1],[1],[1]]", "--k", "1"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, EachSubcommandRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"opp-flags", "--F", "[[1,0,0],[0,1,0],[0,0,1]]", "--G", "[[0,0,1],[0,-1,0],[1,0,0]]"},
      {"opp-flags", "--F", "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]", "--G", "[[0,0],[0,0],[1,0],[0,1]]", "--F-dims", "2",
       "--G-dims", "2"},
      {"bip", "--I", "1342,2341", "--J", "3124,4123"},
      {"flag-class", "--F", "[[1,0,0],[2,1,0],[3,4,1]]"},
      {"sample-cell", "--I", "132,231", "--params", "1"},
      {"torus-check", "--basis", "[[1,\"-1/2\",\"2/5\"],[1,0,\"-1/5\"],[1,1,\"3/5\"]]"},
      {"torus-check", "--g1", "[[1,0,0],[1,1,0],[1,3,1]]", "--g2", "[[1,-1,\"1/5\"],[0,1,\"-3/10\"],[0,0,1]]", "--ratios", "1,5,10"},
      {"framed-census", "--n", "2"},
      {"grasstope-check", "--I", "1234,4321", "--W", "[[1,0],[0,1],[-2,3],[-4,5]]", "--k", "2"},
  };
  for (const auto& c : commands) {
    const auto r = invoke(c);
    EXPECT_EQ(r.code, cli::kOk) << c[0] << ": " << r.err;
    EXPECT_FALSE(r.out.empty()) << c[0];
  }
}

TEST(Cli, BipReportsTheWitness) {
  const auto r = invoke({"bip", "--I", "1342,2341", "--J", "3124,4123", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["witness"], nlohmann::json({"2", "3", "2", "3"}));
}

TEST(Cli, InvalidInputExitsWithTwoAndNamesTheField) {
  const auto bad_json = invoke({"opp-flags", "--F", "[[1,0],[0,1]", "--G", "[[1,0],[0,1]]"});
  EXPECT_EQ(bad_json.code, cli::kInvalidInput);
  EXPECT_NE(bad_json.err.find("--F"), std::string::npos) << bad_json.err;

  const auto bad_entry = invoke({"flag-class", "--F", "[[1,\"x\"],[0,1]]"});
  EXPECT_EQ(bad_entry.code, cli::kInvalidInput);
  EXPECT_NE(bad_entry.err.find("--F"), std::string::npos) << bad_entry.err;

  const auto bad_interval = invoke({"opp-intervals", "--I", R"({"v":[1,3,2]})", "--J", "213,312"});
  EXPECT_EQ(bad_interval.code, cli::kInvalidInput);
  EXPECT_NE(bad_interval.err.find("--I"), std::string::npos) << bad_interval.err;

  const auto empty = invoke({"opp-intervals", "--I", "231,132", "--J", "213,312"});
  EXPECT_EQ(empty.code, cli::kInvalidInput);

  const auto wrong_n = invoke({"opp-intervals", "--n", "4", "--I", "132,231", "--J", "213,312"});
  EXPECT_EQ(wrong_n.code, cli::kInvalidInput);

  EXPECT_EQ(invoke({}).code, cli::kInvalidInput);
  EXPECT_EQ(invoke({"no-such-command"}).code, cli::kInvalidInput);
  EXPECT_EQ(invoke({"census"}).code, cli::kInvalidInput);
  EXPECT_EQ(invoke({"sample-cell", "--I", "123,321", "--params", "1,1"}).code, cli::kInvalidInput);
}

TEST(Cli, ReferenceChecksPass) {
  const auto r = invoke({"verify-paper"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_NE(r.out.find("all checks pass"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  for (const auto& check : cli::paper_checks()) EXPECT_TRUE(check.check()) << check.name;
}

TEST(Cli, OperationTableCoversEachOperationOnce) {
  std::set<std::string> seen;
  const auto& names = cli::subcommand_names();
  for (const auto& route : cli::operation_table()) {
    EXPECT_TRUE(seen.insert(route.operation).second) << route.operation;
    EXPECT_NE(std::find(names.begin(), names.end(), route.subcommand), names.end()) << route.subcommand;
  }
  for (const char* op : {"bruhat_leq", "opposed_intervals", "mr_sample", "hulls_intersect", "lusztig_scan", "census_opposed",
                         "grasstope_well_defined", "framed_cell_census", "counterexample_suite"})
    EXPECT_TRUE(seen.count(op)) << op;
}
