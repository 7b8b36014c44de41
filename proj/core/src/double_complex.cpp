#include "confhodge/double_complex.hpp"

#include <algorithm>
#include <unordered_map>

#include "confhodge/error.hpp"
#include "confhodge/parallel.hpp"
#include "confhodge/tensor.hpp"

namespace confhodge {

namespace {

std::string grading_label(const Grading& g) {
  return "(t=" + std::to_string(g.t) + ",p=" + std::to_string(g.type.p) + ",q=" +
         std::to_string(g.type.q) + ")";
}

std::size_t position_of(const std::vector<Cell>& cells, const Cell& cell) {
  auto it = std::lower_bound(cells.begin(), cells.end(), cell);
  if (it == cells.end() || *it != cell)
    throw ConsistencyError("differential leaves its grading block (is the product type-additive?)");
  return static_cast<std::size_t>(it - cells.begin());
}

void require_valid(const Algebra& algebra) {
  auto report = algebra.has_differential() ? validate_cdga(algebra) : validate_algebra(algebra);
  if (report.empty()) return;
  std::string message = "algebra '" + algebra.name() + "' is invalid: " + report.front();
  if (report.size() > 1) message += " (and " + std::to_string(report.size() - 1) + " more)";
  throw ValidationError(message);
}

}  // namespace

DoubleComplex::DoubleComplex(Algebra algebra, DiagonalGraph graph)
    : algebra_(std::move(algebra)), graph_(std::move(graph)) {}

std::vector<Grading> DoubleComplex::gradings() const {
  std::vector<Grading> out;
  out.reserve(blocks_.size());
  for (const auto& [g, b] : blocks_) out.push_back(g);
  return out;
}

const DoubleComplex::Block* DoubleComplex::block(const Grading& g) const {
  auto it = blocks_.find(g);
  return it == blocks_.end() ? nullptr : &it->second;
}

std::size_t DoubleComplex::dim(std::size_t column, const Grading& g) const {
  const Block* b = block(g);
  if (b == nullptr || column >= b->cells.size()) return 0;
  return b->cells[column].size();
}

RationalMatrix DoubleComplex::delta(std::size_t column, const Grading& g) const {
  const Block* b = block(g);
  if (b != nullptr && column < b->delta.size()) return b->delta[column];
  return RationalMatrix(dim(column + 1, g), dim(column, g));
}

RationalMatrix DoubleComplex::dprime(std::size_t column, const Grading& g) const {
  const Block* b = block(g);
  if (b != nullptr && column < b->dprime.size()) return b->dprime[column];
  return RationalMatrix(dim(column, next_grading(g)), dim(column, g));
}

RationalMatrix& DoubleComplex::mutable_delta(std::size_t column, const Grading& g) {
  return blocks_.at(g).delta.at(column);
}

RationalMatrix& DoubleComplex::mutable_dprime(std::size_t column, const Grading& g) {
  return blocks_.at(g).dprime.at(column);
}

std::size_t DoubleComplex::total_dimension() const {
  std::size_t total = 0;
  for (const auto& [g, b] : blocks_)
    for (const auto& col : b.cells) total += col.size();
  return total;
}

DoubleComplex build_double_complex(const Algebra& algebra, const DiagonalGraph& graph,
                                   const ComplexOptions& options) {
  require_valid(algebra);
  DoubleComplex dc(algebra, graph);
  dc.hodge_graded_ = !algebra.has_differential();
  dc.strata_ = enumerate_strata(graph);
  const auto& strata = dc.strata_;
  const std::size_t columns = dc.columns();
  const std::size_t edges = graph.edge_count();
  const std::size_t r = algebra.dim();

  std::unordered_map<std::uint64_t, std::size_t> stratum_index;
  for (std::size_t s = 0; s < strata.size(); ++s) stratum_index[strata[s].subset.bits()] = s;

  // Cells, appended in (stratum, word) order so each column list is sorted.
  for (std::size_t s = 0; s < strata.size(); ++s) {
    const std::size_t column = strata[s].subset.cardinality();
    TensorBasis basis(r, strata[s].partition.size());
    for (std::uint64_t w = 0; w < basis.size(); ++w) {
      Word word = basis.word(w);
      Grading g{word_degree(algebra, word), dc.hodge_graded_ ? word_type(algebra, word) : HodgeType{}};
      auto& block = dc.blocks_[g];
      if (block.cells.empty()) block.cells.resize(columns);
      block.cells[column].push_back({s, w});
    }
  }

  struct Face {
    std::size_t target = 0;
    int sign = 1;
    MergeDescriptor merge;
  };
  // faces[s][e] for e not in J_s
  std::vector<std::vector<std::optional<Face>>> faces(strata.size(), std::vector<std::optional<Face>>(edges));
  for (std::size_t s = 0; s < strata.size(); ++s) {
    for (std::size_t e = 0; e < edges; ++e) {
      const EdgeSubset subset = strata[s].subset;
      if (subset.contains(e)) continue;
      Face face{stratum_index.at(subset.with(e).bits()), cech_sign(graph, subset, e),
                merge_descriptor(graph, subset, e)};
      if (options.flip && options.flip->subset == subset && options.flip->edge == e) face.sign = -face.sign;
      faces[s][e] = face;
    }
  }

  std::vector<std::pair<const Grading, DoubleComplex::Block>*> work;
  for (auto& entry : dc.blocks_) work.push_back(&entry);

  parallel_for(work.size(), options.jobs, [&](std::size_t index) {
    const Grading& g = work[index]->first;
    auto& block = work[index]->second;
    block.delta.resize(columns);
    for (std::size_t i = 0; i < columns; ++i) {
      const auto& source = block.cells[i];
      const std::vector<Cell> none;
      const auto& target = (i + 1 < columns) ? block.cells[i + 1] : none;
      RationalMatrix m(target.size(), source.size());
      for (std::size_t k = 0; k < source.size(); ++k) {
        const auto& cell = source[k];
        const std::size_t c = strata[cell.stratum].partition.size();
        const Word word = TensorBasis(r, c).word(cell.word);
        for (std::size_t e = 0; e < edges; ++e) {
          const auto& face = faces[cell.stratum][e];
          if (!face) continue;
          if (face->merge.identity) {
            m.add(position_of(target, {face->target, cell.word}), k, face->sign);
            continue;
          }
          TensorBasis merged_basis(r, c - 1);
          for (const auto& [w, coefficient] : merge_word(algebra, word, face->merge.u, face->merge.v))
            m.add(position_of(target, {face->target, merged_basis.index(w)}), k, face->sign * coefficient);
        }
      }
      block.delta[i] = std::move(m);
    }

    if (!algebra.has_differential()) return;
    block.dprime.resize(columns);
    const DoubleComplex::Block* next = dc.block(DoubleComplex::next_grading(g));
    for (std::size_t i = 0; i < columns; ++i) {
      const auto& source = block.cells[i];
      const std::vector<Cell> none;
      const auto& target = next ? next->cells[i] : none;
      RationalMatrix m(target.size(), source.size());
      const int column_sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t k = 0; k < source.size(); ++k) {
        const auto& cell = source[k];
        TensorBasis basis(r, strata[cell.stratum].partition.size());
        for (const auto& [w, coefficient] : differentiate_word(algebra, basis.word(cell.word)))
          m.add(position_of(target, {cell.stratum, basis.index(w)}), k, column_sign * coefficient);
      }
      block.dprime[i] = std::move(m);
    }
  });
  return dc;
}

std::vector<std::string> differential_violations(const DoubleComplex& complex) {
  std::vector<std::string> out;
  const std::size_t columns = complex.columns();
  for (const auto& g : complex.gradings()) {
    for (std::size_t i = 0; i + 1 < columns; ++i)
      if (!composes_to_zero(complex.delta(i, g), complex.delta(i + 1, g)))
        out.push_back("delta^2 != 0 from column " + std::to_string(i) + " at " + grading_label(g));
    if (!complex.algebra().has_differential()) continue;
    const Grading next = DoubleComplex::next_grading(g);
    for (std::size_t i = 0; i < columns; ++i) {
      if (!composes_to_zero(complex.dprime(i, g), complex.dprime(i, next)))
        out.push_back("d'^2 != 0 in column " + std::to_string(i) + " at " + grading_label(g));
      if (i + 1 < columns) {
        RationalMatrix anti = complex.dprime(i + 1, g) * complex.delta(i, g);
        anti += complex.delta(i, next) * complex.dprime(i, g);
        if (!anti.is_zero())
          out.push_back("d' delta + delta d' != 0 from column " + std::to_string(i) + " at " +
                        grading_label(g));
      }
    }
  }
  return out;
}

HodgeTable relative_table(const DoubleComplex& complex, unsigned jobs) {
  const Algebra& algebra = complex.algebra();
  if (algebra.has_differential())
    throw ValidationError("relative_cohomology needs d_B = 0; use total_cohomology for a cdga");
  const auto gradings = complex.gradings();
  const std::size_t columns = complex.columns();
  std::vector<std::vector<std::pair<HodgeKey, std::size_t>>> pieces(gradings.size());

  parallel_for(gradings.size(), jobs, [&](std::size_t index) {
    const Grading& g = gradings[index];
    for (std::size_t i = 0; i < columns; ++i) {
      RationalMatrix d_in = i == 0 ? RationalMatrix(complex.dim(0, g), 0) : complex.delta(i - 1, g);
      std::size_t h = cohomology_dim(d_in, complex.delta(i, g));
      if (h > 0) pieces[index].push_back({{static_cast<int>(i) + g.t, g.t, g.type.p, g.type.q}, h});
    }
  });

  HodgeTable table(SpaceKind::Relative, complex.graph().n(), algebra.complex_dim(),
                   complex.graph().to_string());
  for (const auto& piece : pieces)
    for (const auto& [key, dim] : piece) table.add(key, dim);
  return table;
}

HodgeTable relative_cohomology(const Algebra& algebra, const DiagonalGraph& graph, unsigned jobs) {
  if (algebra.has_differential())
    throw ValidationError("relative_cohomology needs d_B = 0; use total_cohomology for a cdga");
  return relative_table(build_double_complex(algebra, graph, {jobs, std::nullopt}), jobs);
}

SpectralSequenceDims relative_weight_spectral_sequence(const DoubleComplex& complex, unsigned jobs) {
  if (complex.algebra().has_differential())
    throw ValidationError("block-wise weight spectral sequence needs d_B = 0");
  const auto gradings = complex.gradings();
  std::vector<SpectralSequenceDims> parts(gradings.size());
  parallel_for(gradings.size(), jobs, [&](std::size_t index) {
    const Grading& g = gradings[index];
    FilteredComplex fc;
    for (std::size_t i = 0; i < complex.columns(); ++i) {
      const int m = static_cast<int>(i) + g.t;
      if (complex.dim(i, g) > 0) fc.filtration[m] = std::vector<int>(complex.dim(i, g), static_cast<int>(i));
      fc.differential[m] = complex.delta(i, g);
    }
    parts[index] = filtration_spectral_sequence(fc);
  });
  SpectralSequenceDims total;
  for (const auto& part : parts) total.accumulate(part);
  return total;
}

FilteredComplex total_complex(const DoubleComplex& complex) {
  struct Slot {
    std::size_t column;
    Grading grading;
  };
  std::map<int, std::vector<Slot>> by_degree;
  for (std::size_t i = 0; i < complex.columns(); ++i)
    for (const auto& g : complex.gradings())
      if (complex.dim(i, g) > 0) by_degree[static_cast<int>(i) + g.t].push_back({i, g});

  // offset of (column, grading) inside its total degree
  std::map<std::pair<std::size_t, Grading>, std::size_t> offset;
  FilteredComplex fc;
  for (const auto& [m, slots] : by_degree) {
    auto& filt = fc.filtration[m];
    for (const auto& s : slots) {
      offset[{s.column, s.grading}] = filt.size();
      filt.insert(filt.end(), complex.dim(s.column, s.grading), static_cast<int>(s.column));
    }
  }

  auto place = [](RationalMatrix& into, const RationalMatrix& part, std::size_t row0, std::size_t col0) {
    for (std::size_t r = 0; r < part.rows(); ++r)
      for (const auto& [c, v] : part.row(r)) into.add(row0 + r, col0 + c, v);
  };

  for (const auto& [m, slots] : by_degree) {
    RationalMatrix d(fc.dim(m + 1), fc.dim(m));
    for (const auto& s : slots) {
      const std::size_t col0 = offset.at({s.column, s.grading});
      RationalMatrix horizontal = complex.delta(s.column, s.grading);
      if (!horizontal.is_zero()) place(d, horizontal, offset.at({s.column + 1, s.grading}), col0);
      RationalMatrix vertical = complex.dprime(s.column, s.grading);
      if (!vertical.is_zero())
        place(d, vertical, offset.at({s.column, DoubleComplex::next_grading(s.grading)}), col0);
    }
    fc.differential[m] = std::move(d);
  }
  return fc;
}

TotalCohomology total_cohomology(const DoubleComplex& complex) {
  FilteredComplex fc = total_complex(complex);
  TotalCohomology out;
  for (const auto& [m, filt] : fc.filtration) {
    auto in = fc.differential.find(m - 1);
    RationalMatrix d_in = in != fc.differential.end() ? in->second : RationalMatrix(filt.size(), 0);
    std::size_t h = cohomology_dim(d_in, fc.differential.at(m));
    if (h > 0) out.betti[m] = h;
  }
  out.weight_spectral_sequence = filtration_spectral_sequence(fc);
  return out;
}

TotalCohomology total_cohomology(const Algebra& algebra, const DiagonalGraph& graph, unsigned jobs) {
  return total_cohomology(build_double_complex(algebra, graph, {jobs, std::nullopt}));
}

}  // namespace confhodge
