#include "hyperlab/case_studies.hpp"
#include "hyperlab/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace hyperlab::cases {
namespace {

TEST(Headline, NumericAndCategorical) {
  EXPECT_TRUE(Headline::numeric("a", 1.0, 1.05, 0.1, Provenance::Oracle).passed);
  EXPECT_FALSE(Headline::numeric("a", 1.0, 1.2, 0.1, Provenance::Oracle).passed);
  EXPECT_FALSE(Headline::numeric("a", NAN, 1.0, 0.1, Provenance::Oracle).passed);
  EXPECT_TRUE(Headline::categorical("b", "x", "x", Provenance::Identity).passed);
  EXPECT_FALSE(Headline::categorical("b", "x", "y", Provenance::Identity).passed);
  EXPECT_STREQ(to_string(Provenance::Published), "published");
}

class EveryStudy : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryStudy, AllHeadlinesPassWithinTheirTolerances) {
  const auto report = run_study(GetParam());
  EXPECT_EQ(report.name, GetParam());
  ASSERT_FALSE(report.headlines.empty());
  for (const auto& h : report.headlines) {
    EXPECT_TRUE(h.passed) << h.name;
    if (h.measured) {
      ASSERT_TRUE(h.expected && h.tolerance) << h.name;
      EXPECT_LE(std::abs(*h.measured - *h.expected), *h.tolerance) << h.name;
    } else {
      EXPECT_EQ(h.measured_text, h.expected_text) << h.name;
    }
  }
  EXPECT_TRUE(report.passed());
}

TEST_P(EveryStudy, IsDeterministic) {
  EXPECT_EQ(report::to_json(run_study(GetParam())).dump(2), report::to_json(run_study(GetParam())).dump(2));
}

INSTANTIATE_TEST_SUITE_P(Cases, EveryStudy, ::testing::ValuesIn(study_names()),
                         [](const auto& info) { return info.param; });

TEST(Studies, UnknownNameListsTheValidOnes) {
  try {
    (void)run_study("nonexistent");
    FAIL();
  } catch (const UnknownStudy& e) {
    for (const auto& name : study_names()) EXPECT_NE(std::string(e.what()).find(name), std::string::npos);
  }
  EXPECT_EQ(study_names().size(), 5u);
}

TEST(Studies, CauchySeriesRecordsThePrintedFigureAsHistorical) {
  const auto r = study_cauchy_series();
  EXPECT_NEAR(*r.headline("4 terms").measured, std::numbers::pi / 2 - 1 + 1.0 / 18 - 1.0 / 600, 1e-15);
  ASSERT_EQ(r.historical.size(), 1u);
  EXPECT_EQ(r.historical[0].printed, 0.6244);
  EXPECT_NEAR(r.historical[0].computed - r.historical[0].printed, 3.1e-4, 1e-5);
  EXPECT_THROW((void)r.headline("no such headline"), std::out_of_range);
}

TEST(Studies, SawtoothBlockTableApproachesTheIntegral) {
  const auto r = study_sawtooth({100, 1000}, {100, 1000});
  EXPECT_TRUE(r.passed());
  const auto& h = r.headline("block at x = 0");
  EXPECT_EQ(*h.measured, 0.0);
  EXPECT_EQ(r.historical.at(0).printed, 0.6244);
}

TEST(Studies, RiemannSumWithDefaultParametersStoresTheExtrapolation) {
  const auto r = study_riemann_sum();
  ASSERT_TRUE(r.parameters.contains("extrapolated"));
  EXPECT_EQ(*r.headline("M = 1 empty sum").measured, 0.0);
}

TEST(Report, TextAndCsvRenderings) {
  const auto r = study_cauchy_series();
  const auto text = report::to_text(r);
  EXPECT_NE(text.find("study cauchy_series: pass"), std::string::npos);
  EXPECT_NE(text.find("historical"), std::string::npos);
  const Table t{"demo", {"n", "value"}, {{1, 0.5}, {10, 0.25}}};
  EXPECT_EQ(report::to_csv(t), "n,value\n1,0.5\n10,0.25\n");
  EXPECT_EQ(report::to_gnuplot(t), "# n value\n1 0.5\n10 0.25\n");
  const auto j = report::to_json(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["study"], "cauchy_series");
}

}  // namespace
}  // namespace hyperlab::cases
