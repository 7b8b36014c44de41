#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "confhodge/rational.hpp"

namespace confhodge {

using SparseVector = std::map<std::size_t, Rational>;
using DenseVector = std::vector<Rational>;

// Sparse row-major matrix over Q. Explicit zeros are never stored.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, const Rational& value);
  void set(std::size_t r, std::size_t c, const Rational& value);
  Rational at(std::size_t r, std::size_t c) const;

  const SparseVector& row(std::size_t r) const { return rows_[r]; }

  std::size_t nonzeros() const;
  bool is_zero() const;

  RationalMatrix transpose() const;
  DenseVector apply(const DenseVector& x) const;

  static RationalMatrix from_rows(std::size_t cols, const std::vector<DenseVector>& rows);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<DenseVector>& columns);

  RationalMatrix& operator+=(const RationalMatrix& other);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::vector<SparseVector> rows_;
  std::size_t cols_ = 0;
};

// Fraction-free (Bareiss) elimination with Markowitz pivoting. Ties are broken
// by lowest row, then lowest column, so results are reproducible.
std::size_t rank(const RationalMatrix& m);

// Exact null-space basis; one vector per non-pivot column.
std::vector<DenseVector> kernel_basis(const RationalMatrix& m);

// Rank of the span of the given vectors (all of one length).
std::size_t span_dimension(const std::vector<DenseVector>& vectors, std::size_t length);

// Unique solution of a x = b, or nullopt when a has a kernel or the system is
// inconsistent.
std::optional<DenseVector> solve_unique(const RationalMatrix& a, const DenseVector& b);

// d_out * d_in == 0, exactly. Shapes must chain.
bool composes_to_zero(const RationalMatrix& d_in, const RationalMatrix& d_out);

// dim ker(d_out) - rank(d_in) for V --d_out--> and --d_in--> V. Throws
// ConsistencyError if d_out * d_in != 0 and ValidationError on shape mismatch.
std::size_t cohomology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out);

// Incrementally built row-reduced basis of a subspace of Q^dimension. Each
// stored row has a 1 in its pivot coordinate and zeros in every other pivot
// coordinate; the pivot is the largest coordinate of the inserted residual,
// so the smallest coordinates tend to survive as a quotient basis.
class EchelonSpace {
 public:
  explicit EchelonSpace(std::size_t dimension = 0) : dimension_(dimension) {}

  bool insert(const SparseVector& v);
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t coordinate) const { return rows_.count(coordinate) != 0; }
  std::vector<std::size_t> non_pivots() const;
  std::vector<SparseVector> basis() const;

 private:
  std::size_t dimension_;
  std::map<std::size_t, SparseVector> rows_;
};

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

}  // namespace confhodge
