#include <gtest/gtest.h>

#include <algorithm>

#include "confhodge/algebra.hpp"
#include "confhodge/error.hpp"
#include "confhodge/tensor.hpp"
#include "support.hpp"

namespace confhodge {
namespace {

using testing::fixture;

bool mentions(const ValidationReport& report, const std::string& text) {
  return std::any_of(report.begin(), report.end(),
                     [&](const std::string& line) { return line.find(text) != std::string::npos; });
}

AlgebraSpec p1_spec() { return fixture("p1").spec(); }

ProductEntry* find_product(AlgebraSpec& spec, const std::string& l, const std::string& r) {
  for (auto& p : spec.products)
    if (p.left == l && p.right == r) return &p;
  return nullptr;
}

TEST(Validate, FixturesAreValid) {
  for (const char* name : {"point", "p1", "elliptic", "genus2", "p1xp1"}) {
    EXPECT_TRUE(validate_algebra(fixture(name)).empty()) << name;
  }
  EXPECT_TRUE(validate_cdga(fixture("acyclic")).empty());
  EXPECT_TRUE(mentions(validate_algebra(fixture("acyclic")), "differential"));
}

TEST(Validate, DegreeAdditivity) {
  AlgebraSpec spec = p1_spec();
  spec.products.push_back({"h", "h", {{1, "h"}}});
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "degree additivity violated at (h,h)"));
}

TEST(Validate, GradedCommutativity) {
  AlgebraSpec spec = fixture("elliptic").spec();
  find_product(spec, "b", "a")->result = {{1, "t"}};
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "graded commutativity violated at (a,b)"));
}

TEST(Validate, UnitLaw) {
  AlgebraSpec spec = p1_spec();
  spec.products.erase(std::remove_if(spec.products.begin(), spec.products.end(),
                                     [](const ProductEntry& p) { return p.left == "h" && p.right == "1"; }),
                      spec.products.end());
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "unit law violated"));
}

TEST(Validate, Purity) {
  AlgebraSpec spec = p1_spec();
  spec.basis[1].hodge_p = 2;
  spec.basis[1].hodge_q = 1;
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "purity violated"));
}

TEST(Validate, Connectedness) {
  AlgebraSpec spec = p1_spec();
  spec.basis.push_back({"e", 0, 0, 0});
  spec.products.push_back({"1", "e", {{1, "e"}}});
  spec.products.push_back({"e", "1", {{1, "e"}}});
  spec.products.push_back({"e", "e", {{1, "e"}}});
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "connectedness violated"));
}

TEST(Validate, HodgeTypeAdditivity) {
  AlgebraSpec spec = fixture("elliptic").spec();
  // a·a = t keeps degrees but breaks types and commutativity in odd degree
  spec.products.push_back({"a", "a", {{1, "t"}}});
  const auto report = validate_algebra(Algebra(spec));
  EXPECT_TRUE(mentions(report, "Hodge type additivity violated at (a,a)"));
}

TEST(Validate, DegeneratePairing) {
  AlgebraSpec spec = fixture("p1xp1").spec();
  find_product(spec, "x", "y")->result.clear();
  find_product(spec, "y", "x")->result.clear();
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "Poincare pairing degenerate between degrees 2 and 2"));
}

TEST(Validate, Associativity) {
  // (x·x)·y = u·y = f but x·(x·y) = x·v = 0.
  AlgebraSpec spec;
  spec.name = "nonassoc";
  spec.complex_dim = 3;
  spec.basis = {{"1", 0, 0, 0}, {"x", 2, 1, 1}, {"y", 2, 1, 1}, {"u", 4, 2, 2}, {"v", 4, 2, 2}, {"f", 6, 3, 3}};
  spec.unit = "1";
  spec.fundamental = "f";
  for (const auto& b : spec.basis) {
    spec.products.push_back({"1", b.id, {{1, b.id}}});
    if (b.id != "1") spec.products.push_back({b.id, "1", {{1, b.id}}});
  }
  spec.products.push_back({"x", "x", {{1, "u"}}});
  spec.products.push_back({"x", "y", {{1, "v"}}});
  spec.products.push_back({"y", "x", {{1, "v"}}});
  spec.products.push_back({"u", "y", {{1, "f"}}});
  spec.products.push_back({"y", "u", {{1, "f"}}});
  EXPECT_TRUE(mentions(validate_algebra(Algebra(spec)), "associativity violated at (x,x,y)"));
}

TEST(Construction, RejectsMalformedDescriptions) {
  AlgebraSpec spec = p1_spec();
  spec.basis.push_back({"h", 2, 1, 1});
  EXPECT_THROW(Algebra{spec}, ValidationError);
  spec = p1_spec();
  spec.products.push_back({"h", "nope", {}});
  EXPECT_THROW(Algebra{spec}, ValidationError);
  spec = p1_spec();
  spec.products.push_back({"1", "h", {{1, "h"}}});
  EXPECT_THROW(Algebra{spec}, ValidationError);
  spec = p1_spec();
  spec.unit = "u";
  EXPECT_THROW(Algebra{spec}, ValidationError);
}

TEST(Multiply, Examples) {
  const Algebra p1 = fixture("p1");
  const auto one = AlgebraElement::basis(p1, "1");
  const auto h = AlgebraElement::basis(p1, "h");
  EXPECT_EQ(multiply(p1, one, h), h);
  EXPECT_TRUE(multiply(p1, h, h).is_zero());

  const Algebra e = fixture("elliptic");
  const auto a = AlgebraElement::basis(e, "a");
  const auto b = AlgebraElement::basis(e, "b");
  EXPECT_EQ(multiply(e, a, b), AlgebraElement::basis(e, "t"));
  EXPECT_EQ(multiply(e, b, a), AlgebraElement::basis(e, "t", -1));
  EXPECT_THROW(multiply(e, a, h), ValidationError);
}

TEST(Pairing, FixturesHaveInvertiblePairings) {
  for (const char* name : {"point", "p1", "elliptic", "genus2", "p1xp1"}) {
    const Algebra alg = fixture(name);
    const int top = 2 * alg.complex_dim();
    for (int k = 0; k <= top; ++k) {
      std::vector<std::size_t> low, high;
      for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (alg.degree(i) == k) low.push_back(i);
        if (alg.degree(i) == top - k) high.push_back(i);
      }
      ASSERT_EQ(low.size(), high.size()) << name;
      RationalMatrix m(low.size(), high.size());
      for (std::size_t r = 0; r < low.size(); ++r)
        for (std::size_t c = 0; c < high.size(); ++c) m.add(r, c, poincare_pairing(alg, low[r], high[c]));
      EXPECT_EQ(rank(m), low.size()) << name << " degree " << k;
    }
  }
}

}  // namespace
}  // namespace confhodge
