#include "confhodge/tensor.hpp"

#include <string>

#include "confhodge/error.hpp"

namespace confhodge {

namespace {

int sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

TensorBasis::TensorBasis(std::size_t algebra_dim, std::size_t factors)
    : radix_(algebra_dim), factors_(factors), size_(1) {
  for (std::size_t k = 0; k < factors; ++k) size_ *= radix_;
}

Word TensorBasis::word(std::uint64_t index) const {
  Word w(factors_);
  for (std::size_t k = factors_; k-- > 0;) {
    w[k] = static_cast<std::uint32_t>(index % radix_);
    index /= radix_;
  }
  return w;
}

std::uint64_t TensorBasis::index(const Word& word) const {
  std::uint64_t i = 0;
  for (auto x : word) i = i * radix_ + x;
  return i;
}

int word_degree(const Algebra& algebra, const Word& word) {
  int total = 0;
  for (auto x : word) total += algebra.degree(x);
  return total;
}

HodgeType word_type(const Algebra& algebra, const Word& word) {
  HodgeType total;
  for (auto x : word) total = total + algebra.type(x);
  return total;
}

void add_term(TensorCombination& combination, const Word& word, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = combination.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) combination.erase(it);
  }
}

void add_scaled(TensorCombination& target, const Rational& scale, const TensorCombination& source) {
  for (const auto& [w, c] : source) add_term(target, w, scale * c);
}

TensorCombination multiply_words(const Algebra& algebra, const Word& a, const Word& b) {
  const std::size_t c = a.size();
  long exponent = 0;
  int suffix = 0;  // degree of a_{k+1} .. a_c
  for (std::size_t k = c; k-- > 0;) {
    exponent += static_cast<long>(algebra.degree(b[k])) * suffix;
    suffix += algebra.degree(a[k]);
  }

  // Expand the factorwise products one position at a time.
  TensorCombination partial{{Word{}, Rational(sign_of(exponent))}};
  for (std::size_t k = 0; k < c; ++k) {
    const auto& product = algebra.product(a[k], b[k]);
    if (product.empty()) return {};
    TensorCombination next;
    for (const auto& [prefix, coefficient] : partial) {
      for (const auto& [e, value] : product) {
        Word extended = prefix;
        extended.push_back(static_cast<std::uint32_t>(e));
        add_term(next, extended, coefficient * value);
      }
    }
    partial = std::move(next);
  }
  return partial;
}

TensorCombination tensor_multiply(const Algebra& algebra, std::size_t factors,
                                  const TensorCombination& u, const TensorCombination& v) {
  TensorCombination out;
  for (const auto& [a, ca] : u) {
    if (a.size() != factors) throw ValidationError("tensor_multiply: factor-count mismatch");
    for (const auto& [b, cb] : v) {
      if (b.size() != factors) throw ValidationError("tensor_multiply: factor-count mismatch");
      add_scaled(out, ca * cb, multiply_words(algebra, a, b));
    }
  }
  return out;
}

TensorCombination merge_word(const Algebra& algebra, const Word& word, std::size_t u, std::size_t v) {
  if (!(u < v && v < word.size()))
    throw ValidationError("merge_factors: positions " + std::to_string(u) + "," +
                          std::to_string(v) + " out of range for " +
                          std::to_string(word.size()) + " factors");
  long between = 0;
  for (std::size_t k = u + 1; k < v; ++k) between += algebra.degree(word[k]);
  const int sign = sign_of(static_cast<long>(algebra.degree(word[v])) * between);

  TensorCombination out;
  for (const auto& [e, value] : algebra.product(word[u], word[v])) {
    Word merged;
    merged.reserve(word.size() - 1);
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k == v) continue;
      merged.push_back(k == u ? static_cast<std::uint32_t>(e) : word[k]);
    }
    add_term(out, merged, sign * value);
  }
  return out;
}

TensorCombination merge_factors(const Algebra& algebra, const TensorCombination& combination,
                                std::size_t u, std::size_t v) {
  TensorCombination out;
  for (const auto& [w, c] : combination) add_scaled(out, c, merge_word(algebra, w, u, v));
  return out;
}

TensorCombination differentiate_word(const Algebra& algebra, const Word& word) {
  TensorCombination out;
  int prefix = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    for (const auto& [e, value] : algebra.differential(word[k])) {
      Word image = word;
      image[k] = static_cast<std::uint32_t>(e);
      add_term(out, image, sign_of(prefix) * value);
    }
    prefix += algebra.degree(word[k]);
  }
  return out;
}

TensorCombination diagonal_class(const Algebra& algebra) {
  auto top = algebra.fundamental();
  if (!top) throw ValidationError("diagonal_class: algebra has no fundamental class");
  const int top_degree = 2 * algebra.complex_dim();

  // Unknowns and test vectors both range over the words a⊗b of degree 2d.
  std::vector<Word> words;
  for (std::uint32_t a = 0; a < algebra.dim(); ++a)
    for (std::uint32_t b = 0; b < algebra.dim(); ++b)
      if (algebra.degree(a) + algebra.degree(b) == top_degree) words.push_back({a, b});

  const Word top_word{static_cast<std::uint32_t>(*top), static_cast<std::uint32_t>(*top)};
  RationalMatrix system(words.size(), words.size());
  DenseVector rhs(words.size());
  for (std::size_t row = 0; row < words.size(); ++row) {
    const Word& y = words[row];
    auto integral = algebra.product(y[0], y[1]);
    if (auto it = integral.find(*top); it != integral.end()) rhs[row] = it->second;
    for (std::size_t col = 0; col < words.size(); ++col) {
      auto product = multiply_words(algebra, y, words[col]);
      if (auto it = product.find(top_word); it != product.end()) system.add(row, col, it->second);
    }
  }

  auto solution = solve_unique(system, rhs);
  if (!solution) throw ValidationError("diagonal_class: pairing on B⊗B is degenerate");
  TensorCombination delta;
  for (std::size_t i = 0; i < words.size(); ++i) add_term(delta, words[i], (*solution)[i]);
  return delta;
}

}  // namespace confhodge
