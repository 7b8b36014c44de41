#pragma once

#include <random>
#include <string>
#include <vector>

#include "confhodge/algebra.hpp"
#include "confhodge/arrangement.hpp"
#include "confhodge/io.hpp"
#include "confhodge/linalg.hpp"

namespace confhodge::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CONFHODGE_FIXTURE_DIR) + "/" + name + ".json";
}

inline Algebra fixture(const std::string& name) { return load_algebra(fixture_path(name)); }

// Every graph on n labelled vertices, in edge-bitmask order of K_n.
inline std::vector<DiagonalGraph> all_graphs(int n) {
  const DiagonalGraph complete = DiagonalGraph::complete(n);
  std::vector<DiagonalGraph> out;
  const std::uint64_t count = std::uint64_t{1} << complete.edge_count();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < complete.edge_count(); ++e)
      if ((mask >> e) & 1U) edges.push_back(complete.edge(e));
    out.emplace_back(n, edges);
  }
  return out;
}

// Rank by textbook Gaussian elimination on a dense copy; shares nothing with
// the library's elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rational>> to_dense(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out[r][c] = v;
  return out;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t max_size, int bound, double density = 0.5) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<int> value(-bound, bound);
  std::bernoulli_distribution keep(density);
  RationalMatrix m(size(rng), size(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (keep(rng)) m.add(r, c, value(rng));
  return m;
}

}  // namespace confhodge::testing
