#include "confhodge/arrangement.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "confhodge/error.hpp"

namespace confhodge {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Root at the smaller label so roots are block minima.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

int parse_vertex(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("malformed graph spec '" + std::string(spec) + "'");
  return value;
}

}  // namespace

std::vector<std::size_t> EdgeSubset::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

DiagonalGraph::DiagonalGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.i < 1 || e.j > n || e.i >= e.j)
      throw ValidationError("edge " + std::to_string(e.i) + "-" + std::to_string(e.j) +
                            " invalid for n = " + std::to_string(n));
    if (k > 0 && edges_[k - 1] == e)
      throw ValidationError("duplicate edge " + std::to_string(e.i) + "-" + std::to_string(e.j));
  }
  if (edges_.size() > kMaxEdges) throw ValidationError("too many edges");
}

DiagonalGraph DiagonalGraph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return DiagonalGraph(n, std::move(edges));
}

DiagonalGraph DiagonalGraph::edgeless(int n) { return DiagonalGraph(n, {}); }

DiagonalGraph DiagonalGraph::parse(int n, std::string_view spec) {
  if (n < 1) throw ParseError("n must be at least 1");
  if (spec == "complete") return complete(n);
  if (spec.empty() || spec == "edgeless") return edgeless(n);

  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    auto item = spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("malformed graph spec '" + std::string(spec) + "'");
    Edge e{parse_vertex(item.substr(0, dash), spec), parse_vertex(item.substr(dash + 1), spec)};
    if (e.i < 1 || e.j > n || e.i >= e.j)
      throw ParseError("edge '" + std::string(item) + "' is not a sorted pair in 1.." + std::to_string(n));
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError("duplicate edge '" + std::string(item) + "'");
    edges.push_back(e);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DiagonalGraph(n, std::move(edges));
}

bool DiagonalGraph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

EdgeSubset DiagonalGraph::all_edges() const {
  return EdgeSubset(edges_.empty() ? 0 : (~std::uint64_t{0} >> (64 - edges_.size())));
}

std::string DiagonalGraph::to_string() const {
  if (is_complete()) return "complete";
  if (edges_.empty()) return "edgeless";
  std::string out;
  for (const auto& e : edges_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.i) + "-" + std::to_string(e.j);
  }
  return out;
}

std::size_t Partition::block_of(int v) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) return b;
  throw ValidationError("vertex " + std::to_string(v) + " not in partition");
}

Partition components(const DiagonalGraph& graph, EdgeSubset subset) {
  const auto n = static_cast<std::size_t>(graph.n());
  UnionFind uf(n);
  for (auto k : subset.members()) {
    const auto& e = graph.edge(k);
    uf.unite(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1));
  }
  // Vertices visited in increasing order meet each block at its minimum
  // first, which yields the canonical block order.
  Partition p;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    auto root = uf.find(v);
    if (slot[root] == n) {
      slot[root] = p.blocks.size();
      p.blocks.emplace_back();
    }
    p.blocks[slot[root]].push_back(static_cast<int>(v + 1));
  }
  return p;
}

MergeDescriptor merge_descriptor(const DiagonalGraph& graph, EdgeSubset subset, std::size_t edge) {
  if (subset.contains(edge)) throw ValidationError("merge_descriptor: edge already in subset");
  Partition p = components(graph, subset);
  const auto& e = graph.edge(edge);
  auto a = p.block_of(e.i);
  auto b = p.block_of(e.j);
  if (a == b) return {};
  return {false, std::min(a, b), std::max(a, b)};
}

int cech_sign(const DiagonalGraph& graph, EdgeSubset subset, std::size_t edge) {
  if (edge >= graph.edge_count()) throw ValidationError("cech_sign: edge out of range");
  if (subset.contains(edge)) throw ValidationError("cech_sign: edge already in subset");
  // l - 1 = number of members of J before e.
  auto before = static_cast<std::size_t>(std::popcount(subset.bits() & ((std::uint64_t{1} << edge) - 1)));
  return (before % 2 == 0) ? 1 : -1;
}

std::vector<Stratum> enumerate_strata(const DiagonalGraph& graph) {
  const std::size_t m = graph.edge_count();
  std::vector<Stratum> out;
  out.reserve(std::size_t{1} << m);
  for (std::size_t size = 0; size <= m; ++size) {
    // Combinations of `size` positions in lexicographic order.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t bits = 0;
      for (auto k : pick) bits |= std::uint64_t{1} << k;
      EdgeSubset s(bits);
      out.push_back({s, components(graph, s)});
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace confhodge
