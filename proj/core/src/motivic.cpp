#include "confhodge/motivic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "confhodge/error.hpp"

namespace confhodge {

IntPolynomial IntPolynomial::monomial(int exponent, const Integer& coefficient) {
  IntPolynomial p;
  p.add(exponent, coefficient);
  return p;
}

Integer IntPolynomial::coefficient(int exponent) const {
  auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? Integer(0) : it->second;
}

int IntPolynomial::degree() const { return coefficients_.empty() ? -1 : coefficients_.rbegin()->first; }

void IntPolynomial::add(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [e, c] : other.coefficients_) add(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [e, c] : other.coefficients_) add(e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [ea, ca] : a.coefficients_)
    for (const auto& [eb, cb] : b.coefficients_) out.add(ea + eb, ca * cb);
  return out;
}

namespace {

// Appends "c·monomial" with a sign separator; `body` is the monomial text
// without coefficient, empty for a constant.
void append_term(std::string& out, const Integer& c, const std::string& body) {
  const bool negative = c < 0;
  const Integer magnitude = negative ? Integer(-c) : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (magnitude != 1 || body.empty()) out += magnitude.get_str();
  out += body;
}

std::string power_text(const char* variable, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return variable;
  return std::string(variable) + "^" + std::to_string(exponent);
}

}  // namespace

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    append_term(out, it->second, power_text("t", it->first));
  return out;
}

EPolynomial EPolynomial::one() {
  EPolynomial p;
  p.add(0, 0, 1);
  return p;
}

Integer EPolynomial::coefficient(int p, int q) const {
  auto it = coefficients_.find({p, q});
  return it == coefficients_.end() ? Integer(0) : it->second;
}

void EPolynomial::add(int p, int q, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients_.try_emplace({p, q}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients_.erase(it);
  }
}

EPolynomial& EPolynomial::operator+=(const EPolynomial& other) {
  for (const auto& [k, c] : other.coefficients_) add(k.first, k.second, c);
  return *this;
}

EPolynomial& EPolynomial::operator-=(const EPolynomial& other) {
  for (const auto& [k, c] : other.coefficients_) add(k.first, k.second, -c);
  return *this;
}

EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
  EPolynomial out;
  for (const auto& [ka, ca] : a.coefficients_)
    for (const auto& [kb, cb] : b.coefficients_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

EPolynomial operator*(const Integer& s, const EPolynomial& a) {
  EPolynomial out;
  for (const auto& [k, c] : a.coefficients_) out.add(k.first, k.second, s * c);
  return out;
}

Integer EPolynomial::at_one() const {
  Integer sum = 0;
  for (const auto& [k, c] : coefficients_) sum += c;
  return sum;
}

std::string EPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Integer>> terms(coefficients_.begin(), coefficients_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [k, c] : terms) append_term(out, c, power_text("u", k.first) + power_text("v", k.second));
  return out;
}

EPolynomial power(const EPolynomial& base, int exponent) {
  EPolynomial out = EPolynomial::one();
  for (int k = 0; k < exponent; ++k) out = out * base;
  return out;
}

EPolynomial e_of_algebra(const Algebra& algebra) {
  EPolynomial out;
  for (const auto& b : algebra.basis()) out.add(b.hodge_p, b.hodge_q, b.degree % 2 == 0 ? 1 : -1);
  return out;
}

namespace {

// Simple graph on vertices 0..v-1 as an adjacency bit matrix.
struct SimpleGraph {
  int vertices = 0;
  std::vector<std::uint64_t> adjacency;

  bool has_edges() const {
    return std::any_of(adjacency.begin(), adjacency.end(), [](std::uint64_t row) { return row != 0; });
  }
};

std::string encode(const SimpleGraph& g, const std::vector<int>& order) {
  std::vector<int> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  std::string key(1, static_cast<char>(g.vertices));
  for (std::size_t a = 0; a < order.size(); ++a) {
    std::uint64_t row = 0;
    const std::uint64_t original = g.adjacency[static_cast<std::size_t>(order[a])];
    for (int b = 0; b < g.vertices; ++b)
      if ((original >> b) & 1U) row |= std::uint64_t{1} << inverse[static_cast<std::size_t>(b)];
    key.append(reinterpret_cast<const char*>(&row), sizeof row);
  }
  return key;
}

// Vertices sorted by degree; within equal-degree runs every permutation is
// tried when the search is small, keeping the lexicographically least code.
std::string canonical_key(const SimpleGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertices));
  std::iota(order.begin(), order.end(), 0);
  auto degree = [&](int v) { return std::popcount(g.adjacency[static_cast<std::size_t>(v)]); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) < degree(b); });

  std::vector<std::pair<std::size_t, std::size_t>> runs;
  double search = 1;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start;
    while (end < order.size() && degree(order[end]) == degree(order[start])) ++end;
    runs.emplace_back(start, end);
    for (std::size_t k = 2; k <= end - start; ++k) search *= static_cast<double>(k);
    start = end;
  }
  if (search > 5040) return encode(g, order);

  std::string best;
  auto recurse = [&](auto&& self, std::size_t run) -> void {
    if (run == runs.size()) {
      std::string key = encode(g, order);
      if (best.empty() || key < best) best = std::move(key);
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(runs[run].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(runs[run].second);
    std::sort(first, last);
    do self(self, run + 1);
    while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

class Chromatic {
 public:
  IntPolynomial operator()(const SimpleGraph& g) {
    if (!g.has_edges()) return IntPolynomial::monomial(g.vertices);
    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int a = 0, b = 0;
    for (a = 0; a < g.vertices; ++a)
      if (g.adjacency[static_cast<std::size_t>(a)] != 0) {
        b = std::countr_zero(g.adjacency[static_cast<std::size_t>(a)]);
        break;
      }
    SimpleGraph deleted = g;
    deleted.adjacency[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
    deleted.adjacency[static_cast<std::size_t>(b)] &= ~(std::uint64_t{1} << a);

    IntPolynomial result = (*this)(deleted);
    result -= (*this)(contract(deleted, a, b));
    memo_.emplace(key, result);
    return result;
  }

 private:
  // Identifies b with a (b removed, later vertices shifted down).
  static SimpleGraph contract(const SimpleGraph& g, int a, int b) {
    auto remap = [&](int v) { return v == b ? (a < b ? a : a - 1) : (v > b ? v - 1 : v); };
    SimpleGraph out;
    out.vertices = g.vertices - 1;
    out.adjacency.assign(static_cast<std::size_t>(out.vertices), 0);
    for (int x = 0; x < g.vertices; ++x)
      for (int y = 0; y < g.vertices; ++y)
        if ((g.adjacency[static_cast<std::size_t>(x)] >> y) & 1U) {
          const int rx = remap(x), ry = remap(y);
          if (rx != ry) out.adjacency[static_cast<std::size_t>(rx)] |= std::uint64_t{1} << ry;
        }
    return out;
  }

  std::unordered_map<std::string, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial chromatic_polynomial(const DiagonalGraph& graph) {
  SimpleGraph g;
  g.vertices = graph.n();
  g.adjacency.assign(static_cast<std::size_t>(g.vertices), 0);
  for (const auto& e : graph.edges()) {
    g.adjacency[static_cast<std::size_t>(e.i - 1)] |= std::uint64_t{1} << (e.j - 1);
    g.adjacency[static_cast<std::size_t>(e.j - 1)] |= std::uint64_t{1} << (e.i - 1);
  }
  Chromatic chromatic;
  return chromatic(g);
}

EPolynomial expected_ec(const Algebra& algebra, const DiagonalGraph& graph) {
  const EPolynomial e = e_of_algebra(algebra);
  const IntPolynomial chi = chromatic_polynomial(graph);
  EPolynomial out;
  EPolynomial e_power = EPolynomial::one();
  for (int k = 0; k <= chi.degree(); ++k) {
    if (const Integer c = chi.coefficient(k); c != 0) out += c * e_power;
    e_power = e_power * e;
  }
  return out;
}

EPolynomial table_ec(const HodgeTable& table) {
  if (table.kind() != SpaceKind::Relative)
    throw ValidationError(std::string("table_ec needs a relative table, got ") + to_string(table.kind()));
  EPolynomial out;
  for (const auto& [k, dim] : table.entries())
    out.add(k.p, k.q, (k.m % 2 == 0 ? 1 : -1) * Integer(static_cast<unsigned long>(dim)));
  return out;
}

}  // namespace confhodge
