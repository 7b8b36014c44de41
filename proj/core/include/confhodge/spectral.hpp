#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "confhodge/linalg.hpp"

namespace confhodge {

// A cochain complex with a decreasing filtration given per basis element:
// F^p C^m is spanned by the basis elements of C^m whose filtration index is
// >= p. differential[m] maps C^m to C^{m+1} (rows index C^{m+1}).
struct FilteredComplex {
  std::map<int, std::vector<int>> filtration;
  std::map<int, RationalMatrix> differential;

  std::size_t dim(int m) const;
};

// Bidegree (p, m - p) of E_r^{p, m-p}.
using Bidegree = std::pair<int, int>;
using PageDims = std::map<Bidegree, std::size_t>;

struct SpectralSequenceDims {
  std::map<int, PageDims> pages;  // r >= 1
  PageDims limit;

  // True if page r has the limit's dimensions at every bidegree.
  bool degenerates_at(int r) const;
  void accumulate(const SpectralSequenceDims& other);
};

// Dimensions of E_r, r = 1 .. (filtration length + 1), and of E_inf, using
// E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}) with
// Z_r^p = {x in F^p : dx in F^{p+r}}.
SpectralSequenceDims filtration_spectral_sequence(const FilteredComplex& complex);

}  // namespace confhodge
