#include <gtest/gtest.h>

#include "confhodge/double_complex.hpp"
#include "confhodge/error.hpp"
#include "confhodge/tensor.hpp"
#include "support.hpp"

namespace confhodge {
namespace {

using testing::fixture;

const char* const kHodgeFixtures[] = {"point", "p1", "elliptic", "genus2", "p1xp1"};

HodgeTable table_of(SpaceKind kind, int n, int d, const std::string& graph,
                    std::initializer_list<std::pair<HodgeKey, std::size_t>> entries) {
  HodgeTable t(kind, n, d, graph);
  for (const auto& [k, v] : entries) t.add(k, v);
  return t;
}

std::size_t column_dim(const DoubleComplex& dc, std::size_t column) {
  std::size_t total = 0;
  for (const auto& g : dc.gradings()) total += dc.dim(column, g);
  return total;
}

TEST(DoubleComplex, P1TwoPoints) {
  const auto dc = build_double_complex(fixture("p1"), DiagonalGraph::complete(2));
  ASSERT_EQ(dc.columns(), 2U);
  const Grading g0{0, {0, 0}}, g2{2, {1, 1}}, g4{4, {2, 2}};
  EXPECT_EQ(dc.dim(0, g0), 1U);
  EXPECT_EQ(dc.dim(0, g2), 2U);
  EXPECT_EQ(dc.dim(0, g4), 1U);
  EXPECT_EQ(dc.dim(1, g0), 1U);
  EXPECT_EQ(dc.dim(1, g2), 1U);
  EXPECT_EQ(dc.dim(1, g4), 0U);
  EXPECT_EQ(dc.delta(0, g2), RationalMatrix::from_rows(2, {{1, 1}}));
  EXPECT_EQ(rank(dc.delta(0, g2)), 1U);
  const auto k = kernel_basis(dc.delta(0, g2));
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0][0], -k[0][1]);  // h⊗1 − 1⊗h up to scale
  EXPECT_EQ(cohomology_dim(RationalMatrix(2, 0), dc.delta(0, g2)), 1U);
  EXPECT_TRUE(dc.dprime(0, g2).is_zero());
}

TEST(DoubleComplex, PointTwoPoints) {
  const Algebra point = fixture("point");
  const auto dc = build_double_complex(point, DiagonalGraph::complete(2));
  EXPECT_EQ(dc.delta(0, {0, {0, 0}}), RationalMatrix::from_rows(1, {{1}}));
  EXPECT_TRUE(relative_table(dc).empty());
  EXPECT_TRUE(total_cohomology(point, DiagonalGraph::complete(2)).betti.empty());
}

TEST(DoubleComplex, P1ThreePointsColumnSizes) {
  const auto dc = build_double_complex(fixture("p1"), DiagonalGraph::complete(3));
  EXPECT_EQ(column_dim(dc, 0), 8U);
  EXPECT_EQ(column_dim(dc, 1), 12U);
  EXPECT_EQ(column_dim(dc, 2), 6U);
  EXPECT_EQ(column_dim(dc, 3), 2U);
  EXPECT_EQ(dc.total_dimension(), 28U);
}

TEST(RelativeCohomology, Examples) {
  const Algebra p1 = fixture("p1");
  EXPECT_TRUE(relative_cohomology(p1, DiagonalGraph::complete(2))
                  .same_entries(table_of(SpaceKind::Relative, 2, 1, "complete", {{{2, 2, 1, 1}, 1}, {{4, 4, 2, 2}, 1}})));
  EXPECT_TRUE(relative_cohomology(p1, DiagonalGraph::complete(3))
                  .same_entries(table_of(SpaceKind::Relative, 3, 1, "complete", {{{3, 2, 1, 1}, 1}, {{6, 6, 3, 3}, 1}})));
  EXPECT_TRUE(relative_cohomology(p1, DiagonalGraph::parse(3, "1-2"))
                  .same_entries(table_of(SpaceKind::Relative, 3, 1, "1-2",
                                         {{{2, 2, 1, 1}, 1}, {{4, 4, 2, 2}, 2}, {{6, 6, 3, 3}, 1}})));
}

TEST(RelativeCohomology, EdgelessGraphGivesTensorPower) {
  for (const char* name : kHodgeFixtures) {
    const Algebra alg = fixture(name);
    for (int n = 1; n <= 3; ++n) {
      const HodgeTable t = relative_cohomology(alg, DiagonalGraph::edgeless(n));
      HodgeTable expected(SpaceKind::Relative, n, alg.complex_dim(), "edgeless");
      const TensorBasis words(alg.dim(), static_cast<std::size_t>(n));
      for (std::uint64_t i = 0; i < words.size(); ++i) {
        const Word w = words.word(i);
        const int m = word_degree(alg, w);
        const HodgeType type = word_type(alg, w);
        expected.add({m, m, type.p, type.q}, 1);
      }
      EXPECT_TRUE(t.same_entries(expected)) << name << " n=" << n;
    }
  }
}

TEST(RelativeCohomology, SinglePointIsTheAlgebra) {
  const Algebra e = fixture("elliptic");
  const HodgeTable t = relative_cohomology(e, DiagonalGraph::complete(1));
  EXPECT_EQ(t.at({0, 0, 0, 0}), 1U);
  EXPECT_EQ(t.at({1, 1, 1, 0}), 1U);
  EXPECT_EQ(t.at({1, 1, 0, 1}), 1U);
  EXPECT_EQ(t.at({2, 2, 1, 1}), 1U);
  EXPECT_EQ(t.entries().size(), 4U);
}

TEST(DoubleComplex, DifferentialsSquareToZeroOnSmallGraphs) {
  for (const char* name : kHodgeFixtures) {
    const Algebra alg = fixture(name);
    const int max_n = std::string(name) == "genus2" || std::string(name) == "p1xp1" ? 3 : 4;
    for (int n = 1; n <= max_n; ++n)
      for (const auto& g : testing::all_graphs(n)) {
        const auto dc = build_double_complex(alg, g);
        ASSERT_TRUE(differential_violations(dc).empty()) << name << " " << g.to_string();
        const HodgeTable t = relative_table(dc);
        ASSERT_TRUE(relative_table_violations(t, g.edge_count()).empty()) << name << " " << g.to_string();
        ASSERT_TRUE(relative_weight_spectral_sequence(dc).degenerates_at(2)) << name << " " << g.to_string();
      }
  }
}

TEST(DoubleComplex, DetectsFlippedSigns) {
  const Algebra p1 = fixture("p1");
  const auto g = DiagonalGraph::complete(3);
  ComplexOptions options;
  options.flip = FlippedComponent{EdgeSubset{}, 1};
  const auto bad = build_double_complex(p1, g, options);
  const auto violations = differential_violations(bad);
  ASSERT_FALSE(violations.empty());
  EXPECT_EQ(violations.front().rfind("delta^2", 0), 0U);
  EXPECT_THROW(relative_table(bad), ConsistencyError);

  auto tampered = build_double_complex(p1, g);
  auto& m = tampered.mutable_delta(1, {0, {0, 0}});
  m.set(0, 0, -m.at(0, 0));
  EXPECT_FALSE(differential_violations(tampered).empty());
}

TEST(TotalCohomology, AgreesWithRelativeRouteForZeroDifferential) {
  for (const char* name : {"p1", "elliptic"}) {
    const Algebra alg = fixture(name);
    for (const auto& g : testing::all_graphs(3)) {
      const auto dc = build_double_complex(alg, g);
      const TotalCohomology total = total_cohomology(dc);
      EXPECT_EQ(total.betti, relative_table(dc).betti()) << name << " " << g.to_string();
      EXPECT_TRUE(total.weight_spectral_sequence.degenerates_at(2));
      EXPECT_EQ(total.weight_spectral_sequence.limit, relative_weight_spectral_sequence(dc).limit);
    }
  }
}

TEST(TotalCohomology, AcyclicAlgebraBehavesLikeAPoint) {
  const Algebra acyclic = fixture("acyclic");
  for (int n = 1; n <= 3; ++n) {
    const auto dc = build_double_complex(acyclic, DiagonalGraph::complete(n));
    EXPECT_TRUE(differential_violations(dc).empty());
    const auto betti = total_cohomology(dc).betti;
    if (n == 1)
      EXPECT_EQ(betti, (std::map<int, std::size_t>{{0, 1}}));
    else
      EXPECT_TRUE(betti.empty()) << n;
  }
  EXPECT_THROW(relative_cohomology(acyclic, DiagonalGraph::complete(2)), ValidationError);
}

TEST(TotalCohomology, DetectsBrokenVerticalDifferential) {
  auto dc = build_double_complex(fixture("acyclic"), DiagonalGraph::complete(2));
  bool flipped = false;
  for (const auto& g : dc.gradings()) {
    auto& m = dc.mutable_dprime(1, g);
    if (m.is_zero()) continue;
    for (std::size_t r = 0; r < m.rows() && !flipped; ++r)
      if (!m.row(r).empty()) {
        const auto [c, v] = *m.row(r).begin();
        m.set(r, c, -v);
        flipped = true;
      }
    if (flipped) break;
  }
  ASSERT_TRUE(flipped);
  const auto violations = differential_violations(dc);
  ASSERT_FALSE(violations.empty());
  EXPECT_EQ(violations.front().rfind("d' delta", 0), 0U);
  EXPECT_THROW(total_cohomology(dc), ConsistencyError);
}

TEST(DoubleComplex, IndependentOfJobCount) {
  const Algebra e = fixture("elliptic");
  const auto g = DiagonalGraph::complete(3);
  ComplexOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = build_double_complex(e, g, serial);
  const auto b = build_double_complex(e, g, parallel);
  ASSERT_EQ(a.gradings(), b.gradings());
  for (const auto& grading : a.gradings())
    for (std::size_t i = 0; i < a.columns(); ++i) EXPECT_EQ(a.delta(i, grading), b.delta(i, grading));
  EXPECT_TRUE(relative_table(a, 1).same_entries(relative_table(b, 3)));
}

}  // namespace
}  // namespace confhodge
