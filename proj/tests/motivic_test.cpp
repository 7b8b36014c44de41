#include <gtest/gtest.h>

#include <functional>

#include "confhodge/double_complex.hpp"
#include "confhodge/error.hpp"
#include "confhodge/motivic.hpp"
#include "support.hpp"

namespace confhodge {
namespace {

using testing::fixture;

EPolynomial poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  EPolynomial p;
  for (const auto& [a, b, c] : terms) p.add(a, b, c);
  return p;
}

// Number of connected components of the spanning subgraph with edge set
// `mask`, by depth-first search.
int component_count(const DiagonalGraph& g, std::uint64_t mask) {
  std::vector<int> seen(static_cast<std::size_t>(g.n() + 1), 0);
  int count = 0;
  std::function<void(int)> visit = [&](int v) {
    seen[static_cast<std::size_t>(v)] = 1;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!((mask >> e) & 1U)) continue;
      const Edge& edge = g.edge(e);
      const int other = edge.i == v ? edge.j : edge.j == v ? edge.i : 0;
      if (other != 0 && !seen[static_cast<std::size_t>(other)]) visit(other);
    }
  };
  for (int v = 1; v <= g.n(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) {
      ++count;
      visit(v);
    }
  return count;
}

// Whitney's subgraph expansion Σ_J (−1)^{|J|} t^{c(J)}.
IntPolynomial whitney(const DiagonalGraph& g) {
  IntPolynomial p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
    p.add(component_count(g, mask), std::popcount(mask) % 2 == 0 ? 1 : -1);
  return p;
}

// Inclusion–exclusion over strata: Σ_J (−1)^{|J|} E(X)^{c(J)}.
EPolynomial strata_expansion(const EPolynomial& e, const DiagonalGraph& g) {
  EPolynomial out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
    out += Integer(std::popcount(mask) % 2 == 0 ? 1 : -1) * power(e, component_count(g, mask));
  return out;
}

TEST(EPolynomial, OfFixtures) {
  EXPECT_EQ(e_of_algebra(fixture("p1")), poly({{0, 0, 1}, {1, 1, 1}}));
  EXPECT_EQ(e_of_algebra(fixture("elliptic")), poly({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}));
  EXPECT_EQ(e_of_algebra(fixture("point")), EPolynomial::one());
  EXPECT_EQ(e_of_algebra(fixture("p1")).to_string(), "uv + 1");
  EXPECT_EQ(e_of_algebra(fixture("genus2")).to_string(), "uv - 2u - 2v + 1");
  EXPECT_EQ(EPolynomial().to_string(), "0");
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_polynomial(DiagonalGraph::complete(1)), IntPolynomial::monomial(1));
  EXPECT_EQ(chromatic_polynomial(DiagonalGraph::complete(3)).to_string(), "t^3 - 3t^2 + 2t");
  // t(t−1)^2
  EXPECT_EQ(chromatic_polynomial(DiagonalGraph::parse(3, "1-2,2-3")).to_string(), "t^3 - 2t^2 + t");
  EXPECT_EQ(chromatic_polynomial(DiagonalGraph::edgeless(4)), IntPolynomial::monomial(4));
}

TEST(Chromatic, CompleteGraphsAreFallingFactorials) {
  for (int n = 1; n <= 6; ++n) {
    IntPolynomial expected = IntPolynomial::monomial(0);
    for (int i = 0; i < n; ++i) {
      IntPolynomial factor = IntPolynomial::monomial(1);
      factor.add(0, -i);
      expected = expected * factor;
    }
    EXPECT_EQ(chromatic_polynomial(DiagonalGraph::complete(n)), expected) << n;
  }
}

TEST(Chromatic, AgreesWithWhitneyExpansion) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : testing::all_graphs(n))
      ASSERT_EQ(chromatic_polynomial(g), whitney(g)) << g.to_string();
}

TEST(ExpectedEc, Examples) {
  const Algebra p1 = fixture("p1");
  EXPECT_EQ(expected_ec(p1, DiagonalGraph::complete(2)).to_string(), "u^2v^2 + uv");
  EXPECT_EQ(expected_ec(p1, DiagonalGraph::complete(3)).to_string(), "u^3v^3 - uv");
  for (const char* name : {"point", "p1", "elliptic", "genus2"}) {
    const Algebra alg = fixture(name);
    EXPECT_EQ(expected_ec(alg, DiagonalGraph::edgeless(3)), power(e_of_algebra(alg), 3)) << name;
  }
}

TEST(ExpectedEc, AgreesWithStrataExpansion) {
  for (const char* name : {"p1", "elliptic", "genus2"})
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : testing::all_graphs(n)) {
        const Algebra alg = fixture(name);
        EXPECT_EQ(expected_ec(alg, g), strata_expansion(e_of_algebra(alg), g)) << name << " " << g.to_string();
      }
}

TEST(TableEc, Examples) {
  const Algebra p1 = fixture("p1");
  EXPECT_EQ(table_ec(relative_cohomology(p1, DiagonalGraph::complete(2))), poly({{1, 1, 1}, {2, 2, 1}}));
  const Algebra e = fixture("elliptic");
  EXPECT_EQ(table_ec(relative_cohomology(e, DiagonalGraph::edgeless(2))), power(e_of_algebra(e), 2));
  // (1−u)^2(1−v)^2 − (1−u)(1−v)
  const EPolynomial a = poly({{0, 0, 1}, {1, 0, -1}});
  const EPolynomial b = poly({{0, 0, 1}, {0, 1, -1}});
  EPolynomial expected = a * a * b * b;
  expected -= a * b;
  EXPECT_EQ(table_ec(relative_cohomology(e, DiagonalGraph::complete(2))), expected);
  EXPECT_THROW(table_ec(HodgeTable(SpaceKind::Open, 2, 1, "complete")), ValidationError);
}

TEST(TableEc, EulerCharacteristicSpecialisation) {
  for (const char* name : {"p1", "elliptic", "genus2", "p1xp1"}) {
    const Algebra alg = fixture(name);
    const Integer euler = e_of_algebra(alg).at_one();
    for (const auto& g : testing::all_graphs(3)) {
      const HodgeTable t = relative_cohomology(alg, g);
      Integer alternating = 0;
      for (const auto& [m, b] : t.betti()) alternating += (m % 2 == 0 ? 1 : -1) * Integer(static_cast<unsigned long>(b));
      Integer chi = 0, power_of_euler = 1;
      const IntPolynomial c = chromatic_polynomial(g);
      for (int k = 0; k <= c.degree(); ++k) {
        chi += c.coefficient(k) * power_of_euler;
        power_of_euler *= euler;
      }
      EXPECT_EQ(alternating, chi) << name << " " << g.to_string();
    }
  }
}

}  // namespace
}  // namespace confhodge
