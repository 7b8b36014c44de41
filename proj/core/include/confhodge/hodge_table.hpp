#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace confhodge {

// (cohomological degree, weight, Hodge type)
struct HodgeKey {
  int m = 0;
  int w = 0;
  int p = 0;
  int q = 0;

  friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
};

enum class SpaceKind { Relative, Open };

const char* to_string(SpaceKind kind);

// Sparse table of mixed Hodge numbers. Relative tables describe
// H*(X^n, D_G); open tables describe H*(F_G(X)). Zero entries are never stored.
class HodgeTable {
 public:
  HodgeTable(SpaceKind kind, int n, int complex_dim, std::string graph);

  SpaceKind kind() const { return kind_; }
  int n() const { return n_; }
  int complex_dim() const { return complex_dim_; }
  int total_dim() const { return n_ * complex_dim_; }
  const std::string& graph() const { return graph_; }

  void add(const HodgeKey& key, std::size_t dim);
  std::size_t at(const HodgeKey& key) const;
  const std::map<HodgeKey, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::map<int, std::size_t> betti() const;

  // Equal entries and kind; metadata is not compared.
  bool same_entries(const HodgeTable& other) const {
    return kind_ == other.kind_ && entries_ == other.entries_;
  }

 private:
  SpaceKind kind_;
  int n_;
  int complex_dim_;
  std::string graph_;
  std::map<HodgeKey, std::size_t> entries_;
};

// "{(0,0,0,0):1, (2,2,1,1):1}"
std::string format_entries(const HodgeTable& table);

// One line per differing key: "(m,w,p,q): left=a right=b".
std::vector<std::string> diff_tables(const HodgeTable& left, const HodgeTable& right);

// Structural invariants of a relative table: p + q = w, 0 <= m - w <= columns - 1,
// Hodge symmetry, H^0 = 0 when the graph has edges, nothing above degree 2N.
std::vector<std::string> relative_table_violations(const HodgeTable& table, std::size_t edge_count);

// Structural invariants of an open table: p + q = w, Hodge symmetry,
// m <= w <= 2m, and H^0 = Q(0) when the space is nonempty (d >= 1 or no
// edges); an empty space (a point with diagonals removed) must have no entries.
std::vector<std::string> open_table_violations(const HodgeTable& table, std::size_t edge_count);

}  // namespace confhodge
