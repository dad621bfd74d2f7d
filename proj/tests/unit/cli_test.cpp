#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "starconf/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "starconf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = starconf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err, env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HilbertOfThreeQuadricsInP3) {
  const auto r = run({"hilbert", "--n", "3", "--r", "3", "--s", "3", "--degrees", "2,2,2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const std::vector<std::int64_t> h = j["hilbert"];
  EXPECT_EQ(std::vector<std::int64_t>(h.begin(), h.begin() + 5), (std::vector<std::int64_t>{1, 4, 7, 8, 8}));
  EXPECT_EQ(j["config"]["forms_text"].size(), 3u);
}

TEST(Cli, TextRowsUseAmpersandLayout) {
  const auto r = run({"hilbert", "--s", "4", "--degrees", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H : 1 & 3 & 6 & 10 & 15 & 21 & 24 & 24"), std::string::npos) << r.out;
}

TEST(Cli, BettiTableOfFourLines) {
  const auto r = run({"betti", "--r", "2", "--s", "4", "--degrees", "1,1,1,1", "--verify", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("predicted,1,3,4\npredicted,2,4,3\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("koszul,1,3,4\nkoszul,2,4,3\n"), std::string::npos) << r.out;
}

TEST(Cli, AssertingCommandsPass) {
  EXPECT_EQ(run({"verify-intersection", "--n", "3", "--r", "2", "--degrees", "1,2,2"}).code, 0);
  EXPECT_EQ(run({"bdl", "--n", "3", "--r", "2", "--degrees", "2,1,2"}).code, 0);
  EXPECT_EQ(run({"degree", "--n", "3", "--r", "3", "--degrees", "2,2,2"}).code, 0);
  EXPECT_EQ(run({"union-hf", "--s", "3", "--degrees", "2", "--y-s", "2", "--y-degrees", "2"}).code, 0);
  EXPECT_EQ(run({"wlp", "--s", "4", "--degrees", "1", "--y-s", "3", "--y-degrees", "1"}).code, 0);
  EXPECT_EQ(run({"wlp", "--linked", "0", "--s", "3"}).code, 0);
  EXPECT_EQ(run({"experiment", "--s", "3", "--t-cfg", "3", "--d", "2"}).code, 0);
  EXPECT_EQ(run({"suite", "--grid", "tiny", "--criterion", "5"}).code, 0);
}

TEST(Cli, FailingAssertionExitsOne) {
  // H(3) = 10 has not reached the degree 24 yet.
  const auto r = run({"degree", "--s", "4", "--degrees", "2", "--t-max", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--s", "3", "--r", "4"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--s", "3", "--degrees", "1,2"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--degrees", "1,1", "--prime", "12"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--s", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"degree", "--n", "3", "--r", "2", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"bdl", "--r", "1", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"wlp", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"wlp", "--ideal", "x0^2; x1^2", "--t-max", "6"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--spec", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--s", "3"}, "not-a-number").code, 2);
  EXPECT_EQ(run({"suite", "--grid", "huge"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--help"}).code, 0);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (std::vector<std::string> args : {std::vector<std::string>{"wlp", "--s", "4", "--degrees", "2", "--y-s", "4", "--y-degrees", "2", "--format", "json"},
                                        std::vector<std::string>{"union-hf", "--s", "3", "--degrees", "1,2,2", "--y-s", "3", "--format", "json"},
                                        std::vector<std::string>{"suite", "--grid", "tiny", "--format", "json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, SeedPrecedence) {
  auto seed_of = [](const Result& r) { return nlohmann::json::parse(r.out)["config"]["seed"].get<std::uint64_t>(); };
  EXPECT_EQ(seed_of(run({"hilbert", "--s", "3", "--format", "json"})), 20140322u);
  EXPECT_EQ(seed_of(run({"hilbert", "--s", "3", "--format", "json"}, "5")), 5u);
  EXPECT_EQ(seed_of(run({"hilbert", "--s", "3", "--format", "json", "--seed", "7"}, "5")), 7u);
}

TEST(Cli, SpecFileAndOutputFile) {
  const auto dir = std::filesystem::temp_directory_path() / "starconf_cli_test";
  std::filesystem::create_directories(dir);
  const auto spec = dir / "spec.json";
  const auto report = dir / "report.json";
  std::ofstream(spec) << R"({"n": 2, "r": 2, "s": 3, "degrees": [1, 1, 1], "forms": ["x0", "x1", "x2"]})";
  const auto r = run({"hilbert", "--spec", spec.string(), "--format", "json", "--output", report.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["hilbert"][2], 3);
  EXPECT_EQ(j["config"]["forms_text"][0], "1 * x0^1");
  EXPECT_EQ(run({"hilbert", "--spec", spec.string(), "--n", "3"}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExplicitIdealReportIsExperimental) {
  const auto r = run({"wlp", "--ideal", "x0^2; x1^2; x2^2", "--element", "x0 + x1 + x2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "experimental");
  EXPECT_TRUE(j["verdict"].get<bool>());
}
