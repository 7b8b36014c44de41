#include "confhodge/algebra.hpp"

#include <atomic>
#include <set>

#include "confhodge/error.hpp"

namespace confhodge {

namespace {

std::atomic<std::uint64_t> next_tag{1};

int koszul(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }

SparseVector mul(const Algebra& alg, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  for (const auto& [a, xa] : x)
    for (const auto& [b, yb] : y) axpy(out, xa * yb, alg.product(a, b));
  return out;
}

SparseVector unit_vector(std::size_t i) { return SparseVector{{i, Rational(1)}}; }

std::string pair_label(const Algebra& alg, std::size_t a, std::size_t b) {
  return "(" + alg.basis(a).id + "," + alg.basis(b).id + ")";
}

void check_multiplicative(const Algebra& alg, ValidationReport& report) {
  const std::size_t r = alg.dim();
  const std::size_t one = alg.unit();
  if (alg.degree(one) != 0) report.push_back("unit " + alg.basis(one).id + " has nonzero degree");

  for (std::size_t a = 0; a < r; ++a) {
    if (alg.product(one, a) != unit_vector(a) || alg.product(a, one) != unit_vector(a))
      report.push_back("unit law violated at " + pair_label(alg, one, a));
  }

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (const auto& [e, c] : alg.product(a, b)) {
        if (alg.degree(e) != alg.degree(a) + alg.degree(b)) {
          report.push_back("degree additivity violated at " + pair_label(alg, a, b));
          break;
        }
      }
    }
  }

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      SparseVector swapped = alg.product(b, a);
      for (auto& [e, c] : swapped) c *= koszul(alg.degree(a), alg.degree(b));
      if (alg.product(a, b) != swapped)
        report.push_back("graded commutativity violated at " + pair_label(alg, a, b));
    }
  }

  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        auto left = mul(alg, alg.product(a, b), unit_vector(c));
        auto right = mul(alg, unit_vector(a), alg.product(b, c));
        if (left != right)
          report.push_back("associativity violated at (" + alg.basis(a).id + "," +
                           alg.basis(b).id + "," + alg.basis(c).id + ")");
      }
}

}  // namespace

Algebra::Algebra(AlgebraSpec spec) : spec_(std::move(spec)), tag_(next_tag++) {
  const std::size_t r = spec_.basis.size();
  if (r == 0) throw ValidationError("algebra '" + spec_.name + "' has an empty basis");
  for (std::size_t i = 0; i < r; ++i) {
    if (!index_.emplace(spec_.basis[i].id, i).second)
      throw ValidationError("duplicate basis id '" + spec_.basis[i].id + "'");
  }
  unit_ = index_of(spec_.unit);
  if (!spec_.fundamental.empty()) fundamental_ = index_of(spec_.fundamental);

  table_.assign(r * r, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : spec_.products) {
    auto a = index_of(entry.left);
    auto b = index_of(entry.right);
    if (!seen.emplace(a, b).second)
      throw ValidationError("product " + entry.left + "*" + entry.right + " listed twice");
    auto& cell = table_[a * r + b];
    for (const auto& [coefficient, id] : entry.result) axpy(cell, coefficient, unit_vector(index_of(id)));
  }

  differential_.assign(r, {});
  std::set<std::size_t> seen_d;
  for (const auto& entry : spec_.differential) {
    auto a = index_of(entry.source);
    if (!seen_d.insert(a).second)
      throw ValidationError("differential of " + entry.source + " listed twice");
    for (const auto& [coefficient, id] : entry.result)
      axpy(differential_[a], coefficient, unit_vector(index_of(id)));
  }
}

std::optional<std::size_t> Algebra::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Algebra::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw ValidationError("unknown basis id '" + std::string(id) + "'");
  return *found;
}

bool Algebra::has_differential() const {
  for (const auto& d : differential_)
    if (!d.empty()) return true;
  return false;
}

AlgebraElement AlgebraElement::basis(const Algebra& algebra, std::string_view id,
                                     const Rational& coefficient) {
  AlgebraElement e(algebra);
  e.add(algebra.index_of(id), coefficient);
  return e;
}

void AlgebraElement::add(std::size_t index, const Rational& coefficient) {
  axpy(terms_, coefficient, unit_vector(index));
}

AlgebraElement multiply(const Algebra& algebra, const AlgebraElement& x, const AlgebraElement& y) {
  if (x.tag() != algebra.tag() || y.tag() != algebra.tag())
    throw ValidationError("multiply: element does not belong to algebra '" + algebra.name() + "'");
  AlgebraElement out(algebra);
  for (const auto& [e, c] : mul(algebra, x.terms(), y.terms())) out.add(e, c);
  return out;
}

Rational poincare_pairing(const Algebra& algebra, std::size_t a, std::size_t b) {
  auto top = algebra.fundamental();
  if (!top) throw ValidationError("algebra '" + algebra.name() + "' has no fundamental class");
  const auto& p = algebra.product(a, b);
  auto it = p.find(*top);
  return it == p.end() ? Rational(0) : it->second;
}

ValidationReport validate_algebra(const Algebra& alg) {
  ValidationReport report;
  const int d = alg.complex_dim();
  if (d < 0) report.push_back("complex_dimension is negative");

  std::vector<std::size_t> bottom, top;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const auto& b = alg.basis(i);
    if (b.hodge_p < 0 || b.hodge_q < 0 || b.hodge_p + b.hodge_q != b.degree)
      report.push_back("purity violated at " + b.id + ": p + q != degree");
    if (b.degree < 0 || b.degree > 2 * d) report.push_back("degree out of range at " + b.id);
    if (b.degree == 0) bottom.push_back(i);
    if (b.degree == 2 * d) top.push_back(i);
  }
  if (bottom.size() != 1)
    report.push_back("connectedness violated: " + std::to_string(bottom.size()) +
                     " classes in degree 0");
  else if (bottom[0] != alg.unit())
    report.push_back("unit is not the degree-0 class");
  if (top.size() != 1)
    report.push_back(std::to_string(top.size()) + " classes in top degree " + std::to_string(2 * d));
  if (!alg.fundamental())
    report.push_back("no fundamental class declared");
  else if (alg.degree(*alg.fundamental()) != 2 * d)
    report.push_back("fundamental class " + alg.basis(*alg.fundamental()).id +
                     " is not in degree 2d");

  check_multiplicative(alg, report);

  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b)
      for (const auto& [e, c] : alg.product(a, b))
        if (alg.type(e) != alg.type(a) + alg.type(b)) {
          report.push_back("Hodge type additivity violated at " + pair_label(alg, a, b));
          break;
        }

  if (alg.has_differential()) report.push_back("nonzero differential on a Hodge algebra");

  if (alg.fundamental() && alg.degree(*alg.fundamental()) == 2 * d) {
    for (int k = 0; k <= 2 * d; ++k) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (alg.degree(i) == k) rows.push_back(i);
        if (alg.degree(i) == 2 * d - k) cols.push_back(i);
      }
      bool ok = rows.size() == cols.size();
      if (ok && !rows.empty()) {
        RationalMatrix pairing(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < cols.size(); ++c)
            pairing.add(r, c, poincare_pairing(alg, rows[r], cols[c]));
        ok = rank(pairing) == rows.size();
      }
      if (!ok)
        report.push_back("Poincare pairing degenerate between degrees " + std::to_string(k) +
                         " and " + std::to_string(2 * d - k));
    }
  }
  return report;
}

ValidationReport validate_cdga(const Algebra& alg) {
  ValidationReport report;
  check_multiplicative(alg, report);
  const std::size_t r = alg.dim();
  for (std::size_t a = 0; a < r; ++a) {
    for (const auto& [e, c] : alg.differential(a))
      if (alg.degree(e) != alg.degree(a) + 1) {
        report.push_back("differential degree violated at " + alg.basis(a).id);
        break;
      }
    SparseVector dd;
    for (const auto& [e, c] : alg.differential(a)) axpy(dd, c, alg.differential(e));
    if (!dd.empty()) report.push_back("d^2 != 0 at " + alg.basis(a).id);
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      SparseVector lhs;
      for (const auto& [e, c] : alg.product(a, b)) axpy(lhs, c, alg.differential(e));
      SparseVector rhs = mul(alg, alg.differential(a), unit_vector(b));
      axpy(rhs, koszul(alg.degree(a), 1), mul(alg, unit_vector(a), alg.differential(b)));
      if (lhs != rhs) report.push_back("Leibniz rule violated at " + pair_label(alg, a, b));
    }
  return report;
}

}  // namespace confhodge
