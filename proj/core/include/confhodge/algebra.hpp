#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "confhodge/linalg.hpp"
#include "confhodge/rational.hpp"

namespace confhodge {

struct HodgeType {
  int p = 0;
  int q = 0;

  friend auto operator<=>(const HodgeType&, const HodgeType&) = default;
  friend HodgeType operator+(HodgeType a, HodgeType b) { return {a.p + b.p, a.q + b.q}; }
};

struct BasisClass {
  std::string id;
  int degree = 0;
  int hodge_p = 0;
  int hodge_q = 0;
};

using Term = std::pair<Rational, std::string>;

struct ProductEntry {
  std::string left;
  std::string right;
  std::vector<Term> result;
};

struct DifferentialEntry {
  std::string source;
  std::vector<Term> result;
};

// Plain description of an algebra as it appears in an algebra file. Products
// that are not listed are zero, including products with the unit.
struct AlgebraSpec {
  std::string name;
  int complex_dim = 0;
  std::vector<BasisClass> basis;
  std::string unit;
  std::string fundamental;  // empty for algebras without a fundamental class
  std::vector<ProductEntry> products;
  std::vector<DifferentialEntry> differential;  // empty for H*(X), which has d = 0
};

// A finite-dimensional graded algebra over Q given by structure constants.
// Construction only checks that the description is well formed (ids unique
// and resolvable, no repeated table entries); mathematical invariants are
// reported by validate_algebra / validate_cdga.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  int complex_dim() const { return spec_.complex_dim; }
  std::uint64_t tag() const { return tag_; }

  std::size_t dim() const { return spec_.basis.size(); }
  const std::vector<BasisClass>& basis() const { return spec_.basis; }
  const BasisClass& basis(std::size_t i) const { return spec_.basis.at(i); }
  int degree(std::size_t i) const { return spec_.basis[i].degree; }
  HodgeType type(std::size_t i) const { return {spec_.basis[i].hodge_p, spec_.basis[i].hodge_q}; }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  std::size_t unit() const { return unit_; }
  std::optional<std::size_t> fundamental() const { return fundamental_; }

  // Structure constants c_{ab}^e as a sparse vector indexed by e.
  const SparseVector& product(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
  const SparseVector& differential(std::size_t a) const { return differential_[a]; }
  bool has_differential() const;

 private:
  AlgebraSpec spec_;
  std::uint64_t tag_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t unit_ = 0;
  std::optional<std::size_t> fundamental_;
  std::vector<SparseVector> table_;
  std::vector<SparseVector> differential_;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(const Algebra& algebra) : tag_(algebra.tag()) {}

  static AlgebraElement basis(const Algebra& algebra, std::string_view id,
                              const Rational& coefficient = 1);

  void add(std::size_t index, const Rational& coefficient);
  const SparseVector& terms() const { return terms_; }
  std::uint64_t tag() const { return tag_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::uint64_t tag_;
  SparseVector terms_;
};

// Report of violated invariants. Empty means valid.
using ValidationReport = std::vector<std::string>;

// Invariants of H*(X, Q) for smooth compact X: connectedness, purity,
// degree/type additivity, graded commutativity, unit, associativity, and a
// nondegenerate Poincare pairing. An algebra with a differential is reported.
ValidationReport validate_algebra(const Algebra& algebra);

// Invariants of a cdga: unit, degree additivity, graded commutativity,
// associativity, and for the differential: degree +1, d^2 = 0, Leibniz rule.
// Hodge data is not inspected.
ValidationReport validate_cdga(const Algebra& algebra);

// Throws ValidationError if the elements do not belong to this algebra.
AlgebraElement multiply(const Algebra& algebra, const AlgebraElement& x, const AlgebraElement& y);

// Coefficient of the fundamental class in a * b.
Rational poincare_pairing(const Algebra& algebra, std::size_t a, std::size_t b);

}  // namespace confhodge
