#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "confhodge/algebra.hpp"

namespace confhodge {

// An element of the induced basis of B^{⊗c}: one basis index per factor.
using Word = std::vector<std::uint32_t>;
using TensorCombination = std::map<Word, Rational>;

// Words of B^{⊗c}, ordered lexicographically over the algebra's declared
// basis order. Indices fit in 64 bits for every size this library handles.
class TensorBasis {
 public:
  TensorBasis(std::size_t algebra_dim, std::size_t factors);

  std::size_t factors() const { return factors_; }
  std::uint64_t size() const { return size_; }
  Word word(std::uint64_t index) const;
  std::uint64_t index(const Word& word) const;

 private:
  std::size_t radix_;
  std::size_t factors_;
  std::uint64_t size_;
};

int word_degree(const Algebra& algebra, const Word& word);
HodgeType word_type(const Algebra& algebra, const Word& word);

void add_term(TensorCombination& combination, const Word& word, const Rational& coefficient);
void add_scaled(TensorCombination& target, const Rational& scale, const TensorCombination& source);

// (a_1⊗..⊗a_c)(b_1⊗..⊗b_c) = ± (a_1 b_1)⊗..⊗(a_c b_c), the sign being the
// Koszul sign of moving every b_k past a_{k+1}, .., a_c.
TensorCombination multiply_words(const Algebra& algebra, const Word& a, const Word& b);

// Bilinear extension of multiply_words. Throws ValidationError if a word does
// not have `factors` factors.
TensorCombination tensor_multiply(const Algebra& algebra, std::size_t factors,
                                  const TensorCombination& u, const TensorCombination& v);

// Pullback along the diagonal identifying factors u < v (0-based): factor v
// is moved next to u with its Koszul sign, then the two are multiplied. The
// result lives on the c - 1 remaining positions, in their original order.
TensorCombination merge_word(const Algebra& algebra, const Word& word, std::size_t u, std::size_t v);
TensorCombination merge_factors(const Algebra& algebra, const TensorCombination& combination,
                                std::size_t u, std::size_t v);

// Factorwise extension of the algebra differential with the Koszul rule
// d(x_1⊗..⊗x_c) = Σ_k (−1)^{|x_1|+..+|x_{k-1}|} x_1⊗..⊗dx_k⊗..⊗x_c.
TensorCombination differentiate_word(const Algebra& algebra, const Word& word);

// The class Δ in (B⊗B)^{2d} characterised by <y, Δ> = ∫ m(y) for every y of
// degree 2d, where <,> is the pairing of B⊗B and ∫ reads the coefficient of
// the fundamental class. Solved as a linear system; throws ValidationError if
// the system is singular (degenerate pairing).
TensorCombination diagonal_class(const Algebra& algebra);

}  // namespace confhodge
