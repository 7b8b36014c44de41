#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "confhodge/algebra.hpp"
#include "confhodge/arrangement.hpp"
#include "confhodge/hodge_table.hpp"

namespace confhodge {

// Integer polynomial in one variable t, keyed by exponent.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial monomial(int exponent, const Integer& coefficient = 1);

  const std::map<int, Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(int exponent) const;
  int degree() const;  // -1 for zero
  void add(int exponent, const Integer& coefficient);

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "t^3 - 3t^2 + 2t"
  std::string to_string() const;

 private:
  std::map<int, Integer> coefficients_;
};

// Two-variable polynomial in u, v; key (p, q) is u^p v^q.
class EPolynomial {
 public:
  EPolynomial() = default;
  static EPolynomial one();

  const std::map<std::pair<int, int>, Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(int p, int q) const;
  void add(int p, int q, const Integer& coefficient);
  bool is_zero() const { return coefficients_.empty(); }

  EPolynomial& operator+=(const EPolynomial& other);
  EPolynomial& operator-=(const EPolynomial& other);
  friend EPolynomial operator*(const EPolynomial& a, const EPolynomial& b);
  friend EPolynomial operator*(const Integer& s, const EPolynomial& a);
  friend bool operator==(const EPolynomial&, const EPolynomial&) = default;

  // Value at u = v = 1.
  Integer at_one() const;
  // "u^2v^2 + uv", highest total degree first.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Integer> coefficients_;
};

EPolynomial power(const EPolynomial& base, int exponent);

// Σ over basis classes of (−1)^deg u^p v^q.
EPolynomial e_of_algebra(const Algebra& algebra);

// Deletion–contraction, memoized on a relabelled adjacency form.
IntPolynomial chromatic_polynomial(const DiagonalGraph& graph);

// chromatic_polynomial(graph) evaluated at e_of_algebra(algebra).
EPolynomial expected_ec(const Algebra& algebra, const DiagonalGraph& graph);

// Σ (−1)^m dim u^p v^q. Throws ValidationError for an open table.
EPolynomial table_ec(const HodgeTable& table);

}  // namespace confhodge
