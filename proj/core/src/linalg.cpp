#include "confhodge/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "confhodge/error.hpp"

namespace confhodge {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  auto& row = rows_.at(r);
  if (c >= cols_) throw std::out_of_range("RationalMatrix column out of range");
  auto [it, inserted] = row.try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  auto& row = rows_.at(r);
  if (c >= cols_) throw std::out_of_range("RationalMatrix column out of range");
  if (value == 0)
    row.erase(c);
  else
    row[c] = value;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  return t;
}

DenseVector RationalMatrix::apply(const DenseVector& x) const {
  if (x.size() != cols_) throw ValidationError("matrix-vector shape mismatch");
  DenseVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) y[r] += v * x[c];
  return y;
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols, const std::vector<DenseVector>& rows) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.add(r, c, rows[r].at(c));
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<DenseVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.add(r, c, columns[c].at(r));
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_) throw ValidationError("matrix sum shape mismatch");
  for (std::size_t r = 0; r < rows(); ++r) axpy(rows_[r], Rational(1), other.rows_[r]);
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  RationalMatrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector acc;
    for (const auto& [k, av] : a.rows_[r]) axpy(acc, av, b.rows_[k]);
    p.rows_[r] = std::move(acc);
  }
  return p;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [c, v] : x) {
    auto [it, inserted] = y.try_emplace(c, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

namespace {

using IntRow = std::vector<std::pair<std::uint32_t, Integer>>;

struct PivotRow {
  std::uint32_t column;
  IntRow entries;
};

struct Elimination {
  std::vector<PivotRow> pivots;
  std::size_t cols = 0;
};

IntRow to_integer_row(const SparseVector& row) {
  Integer scale = 1;
  for (const auto& [c, v] : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer e = v.get_num() * (scale / v.get_den());
    out.emplace_back(static_cast<std::uint32_t>(c), std::move(e));
  }
  return out;
}

Integer entry(const IntRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : Integer(0);
}

// (pivot * row - factor * pivot_row) / previous, exact.
IntRow bareiss_update(const IntRow& row, const IntRow& pivot_row, const Integer& pivot,
                      const Integer& factor, const Integer& previous) {
  IntRow out;
  out.reserve(row.size() + pivot_row.size());
  auto a = row.begin();
  auto b = pivot_row.begin();
  Integer value;
  while (a != row.end() || b != pivot_row.end()) {
    std::uint32_t col;
    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
      col = a->first;
      value = pivot * a->second;
      ++a;
    } else if (a == row.end() || b->first < a->first) {
      col = b->first;
      value = -factor * b->second;
      ++b;
    } else {
      col = a->first;
      value = pivot * a->second - factor * b->second;
      ++a;
      ++b;
    }
    if (value == 0) continue;
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
    out.emplace_back(col, value);
  }
  return out;
}

Elimination eliminate(const RationalMatrix& m) {
  struct Active {
    std::size_t origin;
    IntRow entries;
  };
  std::vector<Active> active;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) active.push_back({r, to_integer_row(m.row(r))});

  Elimination result;
  result.cols = m.cols();
  Integer previous = 1;
  std::vector<std::size_t> col_count(m.cols());

  while (!active.empty()) {
    std::fill(col_count.begin(), col_count.end(), 0);
    for (const auto& a : active)
      for (const auto& [c, v] : a.entries) ++col_count[c];

    // Markowitz: minimise (r_i - 1)(c_j - 1); active rows stay sorted by
    // origin, and entries by column, so the first strict minimum found is the
    // lowest-row, lowest-column tie-break.
    std::size_t best_row = 0;
    std::uint32_t best_col = 0;
    auto best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < active.size(); ++i) {
      std::size_t row_nnz = active[i].entries.size();
      for (const auto& [c, v] : active[i].entries) {
        std::size_t cost = (row_nnz - 1) * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = i;
          best_col = c;
        }
      }
    }

    PivotRow pivot{best_col, std::move(active[best_row].entries)};
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_row));
    Integer pivot_value = entry(pivot.entries, best_col);

    std::vector<Active> next;
    next.reserve(active.size());
    for (auto& a : active) {
      Integer factor = entry(a.entries, best_col);
      IntRow updated = bareiss_update(a.entries, pivot.entries, pivot_value, factor, previous);
      if (!updated.empty()) next.push_back({a.origin, std::move(updated)});
    }
    active = std::move(next);
    previous = pivot_value;
    result.pivots.push_back(std::move(pivot));
  }
  return result;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return eliminate(m).pivots.size(); }

std::vector<DenseVector> kernel_basis(const RationalMatrix& m) {
  Elimination e = eliminate(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& p : e.pivots) is_pivot[p.column] = true;

  std::vector<DenseVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    DenseVector x(m.cols());
    x[free] = 1;
    // Pivot row k only involves its own column, columns pivoted later, and
    // free columns, so solving in reverse pivot order is a back-substitution.
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      Rational sum = 0;
      Rational diagonal;
      for (const auto& [c, v] : it->entries) {
        if (c == it->column)
          diagonal = Rational(v);
        else if (x[c] != 0)
          sum += Rational(v) * x[c];
      }
      x[it->column] = -sum / diagonal;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t span_dimension(const std::vector<DenseVector>& vectors, std::size_t length) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_rows(length, vectors));
}

std::optional<DenseVector> solve_unique(const RationalMatrix& a, const DenseVector& b) {
  if (b.size() != a.rows()) throw ValidationError("solve_unique: right-hand side has wrong length");
  if (rank(a) != a.cols()) return std::nullopt;
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) augmented.add(r, c, v);
    augmented.add(r, a.cols(), -b[r]);
  }
  auto kernel = kernel_basis(augmented);
  // Full column rank of a leaves at most one kernel direction, which is
  // consistent iff its last coordinate can be normalised to 1.
  if (kernel.size() != 1 || kernel[0].back() == 0) return std::nullopt;
  DenseVector x(a.cols());
  Rational scale = kernel[0].back();
  for (std::size_t i = 0; i < a.cols(); ++i) x[i] = kernel[0][i] / scale;
  return x;
}

bool composes_to_zero(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  if (d_out.cols() != d_in.rows()) throw ValidationError("differentials do not chain");
  return (d_out * d_in).is_zero();
}

std::size_t cohomology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  if (!composes_to_zero(d_in, d_out))
    throw ConsistencyError("d_out * d_in != 0 (" + std::to_string(d_in.cols()) + " -> " +
                           std::to_string(d_in.rows()) + " -> " + std::to_string(d_out.rows()) +
                           ")");
  std::size_t kernel = d_out.cols() - rank(d_out);
  return kernel - rank(d_in);
}

bool EchelonSpace::insert(const SparseVector& v) {
  SparseVector residual = reduce(v);
  if (residual.empty()) return false;
  auto pivot = residual.rbegin()->first;
  Rational inverse = 1 / residual.rbegin()->second;
  for (auto& [c, value] : residual) value *= inverse;
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) {
      Rational factor = -it->second;
      axpy(row, factor, residual);
    }
  }
  rows_.emplace(pivot, std::move(residual));
  return true;
}

SparseVector EchelonSpace::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [c, value] : v) {
    auto it = rows_.find(c);
    if (it != rows_.end()) axpy(out, -value, it->second);
  }
  return out;
}

std::vector<std::size_t> EchelonSpace::non_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dimension_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

std::vector<SparseVector> EchelonSpace::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

}  // namespace confhodge
