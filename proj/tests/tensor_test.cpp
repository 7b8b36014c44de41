#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "confhodge/error.hpp"
#include "confhodge/tensor.hpp"
#include "support.hpp"

namespace confhodge {
namespace {

using testing::fixture;

Word word(const Algebra& alg, std::initializer_list<const char*> ids) {
  Word w;
  for (const char* id : ids) w.push_back(static_cast<std::uint32_t>(alg.index_of(id)));
  return w;
}

TensorCombination single(const Word& w, const Rational& c = 1) { return {{w, c}}; }

TEST(TensorBasis, IndexRoundTrip) {
  TensorBasis basis(3, 4);
  EXPECT_EQ(basis.size(), 81U);
  for (std::uint64_t i = 0; i < basis.size(); ++i) EXPECT_EQ(basis.index(basis.word(i)), i);
  EXPECT_EQ(basis.word(1), (Word{0, 0, 0, 1}));
  EXPECT_EQ(TensorBasis(2, 0).size(), 1U);
}

TEST(TensorMultiply, Examples) {
  const Algebra p1 = fixture("p1");
  EXPECT_EQ(multiply_words(p1, word(p1, {"1", "h"}), word(p1, {"h", "1"})), single(word(p1, {"h", "h"})));
  const Algebra e = fixture("elliptic");
  EXPECT_EQ(multiply_words(e, word(e, {"1", "a"}), word(e, {"a", "1"})), single(word(e, {"a", "a"}), -1));
  for (std::uint64_t i = 0; i < TensorBasis(e.dim(), 2).size(); ++i) {
    const Word w = TensorBasis(e.dim(), 2).word(i);
    EXPECT_EQ(multiply_words(e, word(e, {"1", "1"}), w), single(w));
  }
  EXPECT_THROW(tensor_multiply(e, 3, single(word(e, {"1", "a"})), single(word(e, {"1", "a"}))), ValidationError);
}

TEST(TensorMultiply, AssociativeAndGradedCommutative) {
  for (const char* name : {"p1", "elliptic", "genus2", "p1xp1"}) {
    const Algebra alg = fixture(name);
    const TensorBasis basis(alg.dim(), 2);
    for (std::uint64_t i = 0; i < basis.size(); ++i)
      for (std::uint64_t j = 0; j < basis.size(); ++j) {
        const Word x = basis.word(i), y = basis.word(j);
        const int sign = (word_degree(alg, x) * word_degree(alg, y)) % 2 == 0 ? 1 : -1;
        TensorCombination yx;
        add_scaled(yx, sign, multiply_words(alg, y, x));
        ASSERT_EQ(multiply_words(alg, x, y), yx) << name;
        for (std::uint64_t k = 0; k < basis.size(); ++k) {
          const TensorCombination z = single(basis.word(k));
          ASSERT_EQ(tensor_multiply(alg, 2, tensor_multiply(alg, 2, single(x), single(y)), z),
                    tensor_multiply(alg, 2, single(x), tensor_multiply(alg, 2, single(y), z)))
              << name;
        }
      }
  }
}

TEST(Merge, Examples) {
  const Algebra p1 = fixture("p1");
  EXPECT_EQ(merge_word(p1, word(p1, {"h", "1"}), 0, 1), single(word(p1, {"h"})));
  EXPECT_TRUE(merge_word(p1, word(p1, {"h", "h"}), 0, 1).empty());
  const Algebra e = fixture("elliptic");
  EXPECT_TRUE(merge_word(e, word(e, {"a", "b", "a"}), 0, 2).empty());
  EXPECT_EQ(merge_word(e, word(e, {"a", "t", "b"}), 0, 2), single(word(e, {"t", "t"})));
  // moving b past a costs a sign: a⊗b⊗... merge(0,2) on a⊗a⊗b = −(a·b)⊗a
  EXPECT_EQ(merge_word(e, word(e, {"a", "a", "b"}), 0, 2), single(word(e, {"t", "a"}), -1));
  EXPECT_THROW(merge_word(e, word(e, {"a", "b"}), 1, 1), ValidationError);
  EXPECT_THROW(merge_word(e, word(e, {"a", "b"}), 0, 2), ValidationError);
}

std::size_t after_removal(std::size_t position, std::size_t removed) {
  return position > removed ? position - 1 : position;
}

TEST(Merge, DisjointMergesCommute) {
  std::mt19937 rng(5);
  for (const char* name : {"elliptic", "genus2", "p1xp1"}) {
    const Algebra alg = fixture(name);
    for (std::size_t c = 4; c <= 5; ++c) {
      const TensorBasis basis(alg.dim(), c);
      std::uniform_int_distribution<std::uint64_t> pick(0, basis.size() - 1);
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> pos(c);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        const std::size_t u = std::min(pos[0], pos[1]), v = std::max(pos[0], pos[1]);
        const std::size_t u2 = std::min(pos[2], pos[3]), v2 = std::max(pos[2], pos[3]);
        const TensorCombination x = single(basis.word(pick(rng)));
        const auto first = merge_factors(alg, merge_factors(alg, x, u, v), after_removal(u2, v), after_removal(v2, v));
        const auto second =
            merge_factors(alg, merge_factors(alg, x, u2, v2), after_removal(u, v2), after_removal(v, v2));
        ASSERT_EQ(first, second) << name;
      }
    }
  }
}

TEST(Diagonal, Examples) {
  const Algebra point = fixture("point");
  EXPECT_EQ(diagonal_class(point), single(word(point, {"1", "1"})));
  const Algebra p1 = fixture("p1");
  EXPECT_EQ(diagonal_class(p1), (TensorCombination{{word(p1, {"1", "h"}), 1}, {word(p1, {"h", "1"}), 1}}));
  const Algebra e = fixture("elliptic");
  EXPECT_EQ(diagonal_class(e), (TensorCombination{{word(e, {"1", "t"}), 1},
                                                  {word(e, {"t", "1"}), 1},
                                                  {word(e, {"a", "b"}), -1},
                                                  {word(e, {"b", "a"}), 1}}));
}

TEST(Diagonal, AbsorbsFactorsFromEitherSide) {
  for (const char* name : {"point", "p1", "elliptic", "genus2", "p1xp1"}) {
    const Algebra alg = fixture(name);
    const TensorCombination delta = diagonal_class(alg);
    const auto unit = static_cast<std::uint32_t>(alg.unit());
    for (std::uint32_t x = 0; x < alg.dim(); ++x) {
      EXPECT_EQ(tensor_multiply(alg, 2, single({x, unit}), delta), tensor_multiply(alg, 2, single({unit, x}), delta))
          << name << " " << alg.basis(x).id;
    }
    // ∫ m(Δ) is the Euler number
    Rational euler = 0;
    for (const auto& b : alg.basis()) euler += b.degree % 2 == 0 ? 1 : -1;
    Rational integral = 0;
    if (auto f = alg.find(alg.spec().fundamental))
      for (const auto& [w, c] : delta)
        for (const auto& [m, mc] : merge_word(alg, w, 0, 1))
          if (m[0] == *f) integral += c * mc;
    EXPECT_EQ(integral, euler) << name;
  }
}

TEST(Differentiate, KoszulRule) {
  const Algebra acyclic = fixture("acyclic");
  EXPECT_EQ(differentiate_word(acyclic, word(acyclic, {"x", "x"})),
            (TensorCombination{{word(acyclic, {"y", "x"}), 1}, {word(acyclic, {"x", "y"}), -1}}));
  EXPECT_TRUE(differentiate_word(fixture("p1"), {0, 1}).empty());
}

}  // namespace
}  // namespace confhodge
