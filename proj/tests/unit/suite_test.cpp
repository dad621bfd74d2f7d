#include <gtest/gtest.h>

#include "starconf/lefschetz.hpp"
#include "starconf/suite.hpp"

using namespace starconf;

TEST(Suite, GridNames) {
  EXPECT_EQ(parse_grid("tiny"), Grid::Tiny);
  EXPECT_EQ(parse_grid("small"), Grid::Small);
  EXPECT_THROW(parse_grid("huge"), ParameterError);
  EXPECT_EQ(grid_name(Grid::Small), "small");
}

TEST(Suite, TinyGridPasses) {
  SuiteOptions opts;
  opts.grid = Grid::Tiny;
  const auto results = run_suite(opts);
  ASSERT_EQ(results.size(), static_cast<std::size_t>(kCriterionCount));
  for (const auto& r : results) {
    EXPECT_TRUE(r.pass()) << r.id << " " << r.title << "\n" << suite_text({r});
    EXPECT_FALSE(r.cells.empty()) << r.id;
  }
}

TEST(Suite, ThreadCountDoesNotChangeTheReport) {
  SuiteOptions one;
  one.grid = Grid::Tiny;
  SuiteOptions many = one;
  many.threads = 4;
  for (int id : {1, 11}) EXPECT_EQ(suite_to_json({run_criterion(id, one)}, one).dump(), suite_to_json({run_criterion(id, many)}, one).dump());
  EXPECT_THROW(run_criterion(13, one), ParameterError);
}

TEST(Suite, JsonIsDeterministic) {
  SuiteOptions opts;
  opts.grid = Grid::Tiny;
  EXPECT_EQ(suite_to_json(run_suite(opts), opts).dump(), suite_to_json(run_suite(opts), opts).dump());
}

TEST(Suite, ExperimentReportChecker) {
  auto good = experiment_to_json(experiment_open_question(2, 3, 3, 2, 1));
  EXPECT_TRUE(experiment_report_well_formed(good));
  std::string why;
  auto bad = good;
  bad["status"] = "theorem";
  EXPECT_FALSE(experiment_report_well_formed(bad, &why));
  EXPECT_NE(why.find("experimental"), std::string::npos);
  bad = good;
  bad["degrees"][0]["maximal"] = !bad["degrees"][0]["maximal"].get<bool>();
  EXPECT_FALSE(experiment_report_well_formed(bad));
  bad = good;
  bad.erase("provenance");
  EXPECT_FALSE(experiment_report_well_formed(bad));
  bad = good;
  bad["verdict"] = !bad["verdict"].get<bool>();
  EXPECT_FALSE(experiment_report_well_formed(bad));
}
