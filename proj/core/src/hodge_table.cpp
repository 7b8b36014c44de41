#include "confhodge/hodge_table.hpp"

#include <set>

#include "confhodge/error.hpp"

namespace confhodge {

namespace {

std::string key_label(const HodgeKey& k) {
  return "(" + std::to_string(k.m) + "," + std::to_string(k.w) + "," + std::to_string(k.p) + "," +
         std::to_string(k.q) + ")";
}

void check_pure_and_symmetric(const HodgeTable& table, std::vector<std::string>& out) {
  for (const auto& [k, dim] : table.entries()) {
    if (k.p + k.q != k.w) out.push_back("purity: p + q != w at " + key_label(k));
    if (k.p < 0 || k.q < 0) out.push_back("negative Hodge index at " + key_label(k));
    HodgeKey mirror{k.m, k.w, k.q, k.p};
    if (table.at(mirror) != dim) out.push_back("Hodge symmetry fails at " + key_label(k));
  }
}

}  // namespace

const char* to_string(SpaceKind kind) { return kind == SpaceKind::Relative ? "relative" : "open"; }

HodgeTable::HodgeTable(SpaceKind kind, int n, int complex_dim, std::string graph)
    : kind_(kind), n_(n), complex_dim_(complex_dim), graph_(std::move(graph)) {}

void HodgeTable::add(const HodgeKey& key, std::size_t dim) {
  if (dim == 0) return;
  entries_[key] += dim;
}

std::size_t HodgeTable::at(const HodgeKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

std::map<int, std::size_t> HodgeTable::betti() const {
  std::map<int, std::size_t> out;
  for (const auto& [k, dim] : entries_) out[k.m] += dim;
  return out;
}

std::string format_entries(const HodgeTable& table) {
  std::string out = "{";
  for (const auto& [k, dim] : table.entries()) {
    if (out.size() > 1) out += ", ";
    out += key_label(k) + ":" + std::to_string(dim);
  }
  return out + "}";
}

std::vector<std::string> diff_tables(const HodgeTable& left, const HodgeTable& right) {
  std::vector<std::string> out;
  if (left.kind() != right.kind())
    out.push_back(std::string("kind: left=") + to_string(left.kind()) + " right=" + to_string(right.kind()));
  std::set<HodgeKey> keys;
  for (const auto& [k, d] : left.entries()) keys.insert(k);
  for (const auto& [k, d] : right.entries()) keys.insert(k);
  for (const auto& k : keys) {
    auto a = left.at(k);
    auto b = right.at(k);
    if (a != b)
      out.push_back(key_label(k) + ": left=" + std::to_string(a) + " right=" + std::to_string(b));
  }
  return out;
}

std::vector<std::string> relative_table_violations(const HodgeTable& table, std::size_t edge_count) {
  std::vector<std::string> out;
  if (table.kind() != SpaceKind::Relative) return {"table is not a relative table"};
  check_pure_and_symmetric(table, out);
  const int two_n = 2 * table.total_dim();
  for (const auto& [k, dim] : table.entries()) {
    int column = k.m - k.w;
    if (column < 0 || column > static_cast<int>(edge_count))
      out.push_back("weight " + std::to_string(k.w) + " not reachable from a column at " + key_label(k));
    if (k.m > two_n || k.m < 0) out.push_back("degree outside [0, 2N] at " + key_label(k));
    if (edge_count > 0 && k.m == 0) out.push_back("H^0 of the pair is nonzero at " + key_label(k));
  }
  return out;
}

std::vector<std::string> open_table_violations(const HodgeTable& table, std::size_t edge_count) {
  std::vector<std::string> out;
  if (table.kind() != SpaceKind::Open) return {"table is not an open-variety table"};
  check_pure_and_symmetric(table, out);
  for (const auto& [k, dim] : table.entries())
    if (k.w < k.m || k.w > 2 * k.m) out.push_back("weight outside [m, 2m] at " + key_label(k));

  const bool nonempty = table.complex_dim() >= 1 || edge_count == 0 || table.n() == 1;
  std::size_t degree_zero = 0;
  for (const auto& [k, dim] : table.entries())
    if (k.m == 0) degree_zero += dim;
  if (nonempty) {
    if (degree_zero != 1 || table.at({0, 0, 0, 0}) != 1)
      out.push_back("H^0 is not a single (0,0,0,0):1 entry");
  } else if (!table.empty()) {
    out.push_back("empty configuration space has nonzero cohomology");
  }
  return out;
}

}  // namespace confhodge
