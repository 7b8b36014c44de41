#include <gtest/gtest.h>

#include "confhodge/checks.hpp"
#include "support.hpp"

namespace confhodge {
namespace {

using testing::fixture;

TEST(Checks, FixturesPass) {
  const std::vector<std::pair<const char*, int>> cases = {
      {"point", 3}, {"p1", 3}, {"elliptic", 2}, {"genus2", 2}, {"p1xp1", 2}, {"acyclic", 2}};
  for (const auto& [name, n] : cases) {
    const CheckReport report = run_checks(fixture(name), DiagonalGraph::complete(n));
    EXPECT_TRUE(report.passed()) << name << "\n" << report.to_string();
  }
}

TEST(Checks, CompleteGraphsIncludeTheE2Model) {
  const CheckReport report = run_checks(fixture("p1"), DiagonalGraph::complete(3));
  for (const char* name : {"d2 well defined", "d2^2 = 0", "E3 equals dual of relative table", "oracle identity",
                           "weight spectral sequence degenerates at E2", "delta^2 = 0", "(d' + delta)^2 = 0"}) {
    ASSERT_NE(report.find(name), nullptr) << name;
    EXPECT_TRUE(report.find(name)->passed) << name;
  }
  const CheckReport partial = run_checks(fixture("p1"), DiagonalGraph::parse(3, "1-2"));
  EXPECT_TRUE(partial.passed());
  EXPECT_EQ(partial.find("d2 well defined"), nullptr);
}

TEST(Checks, FlippedSignFailsDeltaSquare) {
  CheckOptions options;
  options.flip = FlippedComponent{EdgeSubset{}, 0};
  const CheckReport report = run_checks(fixture("p1"), DiagonalGraph::complete(3), options);
  EXPECT_FALSE(report.passed());
  ASSERT_NE(report.find("delta^2 = 0"), nullptr);
  EXPECT_FALSE(report.find("delta^2 = 0")->passed);
  EXPECT_NE(report.to_string().find("FAIL delta^2 = 0"), std::string::npos);
}

TEST(Checks, InvalidAlgebraStopsEarly) {
  AlgebraSpec spec = fixture("p1").spec();
  spec.products.push_back({"h", "h", {{1, "h"}}});
  const CheckReport report = run_checks(Algebra(spec), DiagonalGraph::complete(2));
  ASSERT_EQ(report.results.size(), 1U);
  EXPECT_FALSE(report.passed());
}

TEST(Checks, OracleIdentityOnEveryGraph) {
  for (const char* name : {"p1", "elliptic"})
    for (const auto& g : testing::all_graphs(3)) {
      const CheckReport report = run_checks(fixture(name), g);
      EXPECT_TRUE(report.passed()) << name << " " << g.to_string() << "\n" << report.to_string();
    }
}

}  // namespace
}  // namespace confhodge
