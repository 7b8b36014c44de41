#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace confhodge {

// Diagonal D_{ij} = {x_i = x_j}; vertices are 1-based and i < j.
struct Edge {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of a graph's edge list, by position in that list.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t edge) const { return (bits_ >> edge) & 1U; }
  constexpr EdgeSubset with(std::size_t edge) const { return EdgeSubset(bits_ | (std::uint64_t{1} << edge)); }
  constexpr EdgeSubset without(std::size_t edge) const {
    return EdgeSubset(bits_ & ~(std::uint64_t{1} << edge));
  }
  std::vector<std::size_t> members() const;

  friend constexpr auto operator<=>(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Graph on vertices 1..n selecting which diagonals are removed. Edges are
// kept sorted lexicographically; that order fixes every sign and layout.
class DiagonalGraph {
 public:
  static constexpr std::size_t kMaxEdges = 63;

  DiagonalGraph(int n, std::vector<Edge> edges);

  static DiagonalGraph complete(int n);
  static DiagonalGraph edgeless(int n);
  // "complete", "edgeless", "" (edgeless), or "1-2,2-3". Throws ParseError.
  static DiagonalGraph parse(int n, std::string_view spec);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }
  bool is_complete() const;
  EdgeSubset all_edges() const;

  // Canonical spec string: "complete", "edgeless" or the sorted edge list.
  std::string to_string() const;

  friend bool operator==(const DiagonalGraph&, const DiagonalGraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Set partition of {1..n}: blocks sorted internally, ordered by minimum.
struct Partition {
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return blocks.size(); }
  // 0-based index of the block holding vertex v.
  std::size_t block_of(int v) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition components(const DiagonalGraph& graph, EdgeSubset subset);

// Restriction from the stratum of J to the stratum of J ∪ {e}: the identity
// when e's endpoints are already joined, otherwise the diagonal merging the
// (0-based, canonical-order) blocks u < v.
struct MergeDescriptor {
  bool identity = true;
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const MergeDescriptor&, const MergeDescriptor&) = default;
};

// Throws ValidationError when e ∈ J.
MergeDescriptor merge_descriptor(const DiagonalGraph& graph, EdgeSubset subset, std::size_t edge);

// (−1)^{l+1} where l is the 1-based position of e in the sorted J ∪ {e}.
// Throws ValidationError when e ∈ J.
int cech_sign(const DiagonalGraph& graph, EdgeSubset subset, std::size_t edge);

struct Stratum {
  EdgeSubset subset;
  Partition partition;
};

// All 2^|E| subsets ordered by cardinality, then lexicographically by their
// sorted edge positions.
std::vector<Stratum> enumerate_strata(const DiagonalGraph& graph);

}  // namespace confhodge
