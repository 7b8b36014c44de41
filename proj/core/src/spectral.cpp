#include "confhodge/spectral.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <tuple>

#include "confhodge/error.hpp"

namespace confhodge {

namespace {

void drop_zeros(PageDims& page) {
  std::erase_if(page, [](const auto& kv) { return kv.second == 0; });
}

std::size_t sum_dimension(const std::vector<DenseVector>& a, const std::vector<DenseVector>& b,
                          std::size_t length) {
  std::vector<DenseVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_dimension(all, length);
}

class Pager {
 public:
  explicit Pager(const FilteredComplex& c) : c_(c) {}

  // Elements of F^{lo} C^m whose image has no component of filtration below
  // `threshold`. Bounds are clamped to the filtration values that occur, so
  // equivalent requests share one cache entry.
  const std::vector<DenseVector>& cycles(int m, int lo, int threshold) const {
    lo = clamp_to(filtration(m), lo);
    threshold = clamp_to(filtration(m + 1), threshold);
    auto [it, inserted] = cache_.try_emplace({m, lo, threshold});
    if (inserted) it->second = compute_cycles(m, lo, threshold);
    return it->second;
  }

  // dim Z(m, p, upper) / (Z(m, p + 1, upper) + d Z(m - 1, boundary_lo, p)).
  std::size_t subquotient(int m, int p, int upper, int boundary_lo) const {
    const auto key = std::make_tuple(m, clamp_to(filtration(m), p), clamp_to(filtration(m), p + 1),
                                     clamp_to(filtration(m + 1), upper), clamp_to(filtration(m - 1), boundary_lo));
    if (auto it = dims_.find(key); it != dims_.end()) return it->second;
    std::size_t dim = 0;
    const auto& z = cycles(m, p, upper);
    if (!z.empty()) {
      const auto& z_next = cycles(m, p + 1, upper);
      auto boundaries = image(m, cycles(m - 1, boundary_lo, p));
      dim = z.size() - sum_dimension(z_next, boundaries, filtration(m).size());
    }
    dims_.emplace(key, dim);
    return dim;
  }

  std::vector<DenseVector> compute_cycles(int m, int lo, int threshold) const {
    const auto& filt = filtration(m);
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < filt.size(); ++k)
      if (filt[k] >= lo) cols.push_back(k);
    if (cols.empty()) return {};

    std::vector<std::size_t> rows;
    const auto* d = differential(m);
    if (d != nullptr) {
      const auto& target = filtration(m + 1);
      for (std::size_t k = 0; k < target.size(); ++k)
        if (target[k] < threshold) rows.push_back(k);
    }

    RationalMatrix restricted(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = d->row(rows[r]);
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (auto it = row.find(cols[c]); it != row.end()) restricted.add(r, c, it->second);
    }

    std::vector<DenseVector> out;
    for (auto& k : kernel_basis(restricted)) {
      DenseVector full(filt.size());
      for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = k[c];
      out.push_back(std::move(full));
    }
    return out;
  }

  std::vector<DenseVector> image(int m, const std::vector<DenseVector>& sources) const {
    // sources live in C^{m-1}
    std::vector<DenseVector> out;
    const auto* d = differential(m - 1);
    if (d == nullptr) return out;
    for (const auto& s : sources) out.push_back(d->apply(s));
    return out;
  }

  std::size_t dim(int m) const { return filtration(m).size(); }

  const std::vector<int>& filtration(int m) const {
    static const std::vector<int> empty;
    auto it = c_.filtration.find(m);
    return it == c_.filtration.end() ? empty : it->second;
  }

  const RationalMatrix* differential(int m) const {
    auto it = c_.differential.find(m);
    if (it == c_.differential.end()) return nullptr;
    if (it->second.cols() != dim(m) || it->second.rows() != dim(m + 1))
      throw ValidationError("filtered complex: differential in degree " + std::to_string(m) +
                            " has the wrong shape");
    return &it->second;
  }

 private:
  // Smallest value v with the same set {k : values[k] >= v} as `bound`.
  static int clamp_to(const std::vector<int>& values, int bound) {
    int best = INT_MAX;
    for (int v : values)
      if (v >= bound) best = std::min(best, v);
    return best;
  }

  const FilteredComplex& c_;
  mutable std::map<std::tuple<int, int, int>, std::vector<DenseVector>> cache_;
  mutable std::map<std::tuple<int, int, int, int, int>, std::size_t> dims_;
};

}  // namespace

std::size_t FilteredComplex::dim(int m) const {
  auto it = filtration.find(m);
  return it == filtration.end() ? 0 : it->second.size();
}

bool SpectralSequenceDims::degenerates_at(int r) const {
  auto it = pages.find(r);
  if (it == pages.end()) return false;
  return it->second == limit;
}

void SpectralSequenceDims::accumulate(const SpectralSequenceDims& other) {
  for (const auto& [r, page] : other.pages) {
    auto& target = pages[r];
    for (const auto& [b, dim] : page) target[b] += dim;
  }
  for (const auto& [b, dim] : other.limit) limit[b] += dim;
}

SpectralSequenceDims filtration_spectral_sequence(const FilteredComplex& complex) {
  SpectralSequenceDims out;
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [m, filt] : complex.filtration)
    for (int p : filt) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  if (lo > hi) return out;
  const int last_page = hi - lo + 2;
  Pager pager(complex);

  for (const auto& [m, filt] : complex.filtration) {
    if (filt.empty()) continue;
    for (int p = lo; p <= hi; ++p) {
      // E_0^p, and with it every later page, vanishes without generators of filtration p.
      if (std::find(filt.begin(), filt.end(), p) == filt.end()) continue;
      for (int r = 1; r <= last_page; ++r) out.pages[r][{p, m - p}] += pager.subquotient(m, p, p + r, p - r + 1);
      out.limit[{p, m - p}] += pager.subquotient(m, p, INT_MAX, INT_MIN);
    }
  }
  for (auto& [r, page] : out.pages) drop_zeros(page);
  drop_zeros(out.limit);
  return out;
}

}  // namespace confhodge
