#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confhodge/algebra.hpp"
#include "confhodge/arrangement.hpp"
#include "confhodge/hodge_table.hpp"
#include "confhodge/linalg.hpp"
#include "confhodge/spectral.hpp"

namespace confhodge {

// Inner degree t and Hodge type of an entry of A^{i,t}. Algebras with a
// differential carry no Hodge grading; their entries all have type (0,0).
struct Grading {
  int t = 0;
  HodgeType type;

  friend auto operator<=>(const Grading&, const Grading&) = default;
};

// Basis element of a column: a stratum (by index into strata()) and a word of
// B^{⊗c} in that stratum's tensor basis.
struct Cell {
  std::size_t stratum = 0;
  std::uint64_t word = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Negates one Čech component J -> J ∪ {e}. Only used to check that the
// differential checks detect sign errors.
struct FlippedComponent {
  EdgeSubset subset;
  std::size_t edge = 0;
};

struct ComplexOptions {
  unsigned jobs = 1;
  std::optional<FlippedComponent> flip;
};

// A^{*,*}(B) for the diagonal arrangement of a graph: column i is the sum of
// B^{⊗c(J)} over edge subsets J with |J| = i, δ restricts along the diagonals
// with Čech signs, and d' acts on column i as (−1)^i d_B.
class DoubleComplex {
 public:
  struct Block {
    std::vector<std::vector<Cell>> cells;    // per column
    std::vector<RationalMatrix> delta;       // column i -> i + 1, same grading
    std::vector<RationalMatrix> dprime;      // column i, grading -> next_grading
  };

  const Algebra& algebra() const { return algebra_; }
  const DiagonalGraph& graph() const { return graph_; }
  bool hodge_graded() const { return hodge_graded_; }
  std::size_t columns() const { return graph_.edge_count() + 1; }
  const std::vector<Stratum>& strata() const { return strata_; }

  std::vector<Grading> gradings() const;
  const Block* block(const Grading& g) const;
  std::size_t dim(std::size_t column, const Grading& g) const;

  // d' maps grading g to this grading (t + 1, same type).
  static Grading next_grading(const Grading& g) { return {g.t + 1, g.type}; }

  // Component maps. Missing blocks yield correctly shaped zero matrices.
  RationalMatrix delta(std::size_t column, const Grading& g) const;
  RationalMatrix dprime(std::size_t column, const Grading& g) const;
  RationalMatrix& mutable_delta(std::size_t column, const Grading& g);
  RationalMatrix& mutable_dprime(std::size_t column, const Grading& g);

  std::size_t total_dimension() const;

 private:
  friend DoubleComplex build_double_complex(const Algebra&, const DiagonalGraph&, const ComplexOptions&);
  DoubleComplex(Algebra algebra, DiagonalGraph graph);

  Algebra algebra_;
  DiagonalGraph graph_;
  bool hodge_graded_ = true;
  std::vector<Stratum> strata_;
  std::map<Grading, Block> blocks_;
};

// Throws ValidationError if the algebra fails validate_algebra (no
// differential) or validate_cdga (with differential).
DoubleComplex build_double_complex(const Algebra& algebra, const DiagonalGraph& graph,
                                   const ComplexOptions& options = {});

// One message per failing identity: δ∘δ = 0, d'∘d' = 0, d'δ + δd' = 0.
std::vector<std::string> differential_violations(const DoubleComplex& complex);

// Graded pieces of H*(X^n, D_G) for B = H*(X) (zero differential). A class in
// column i of inner degree t has degree m = i + t and weight w = t.
HodgeTable relative_table(const DoubleComplex& complex, unsigned jobs = 1);
HodgeTable relative_cohomology(const Algebra& algebra, const DiagonalGraph& graph, unsigned jobs = 1);

// Spectral sequence of the column (weight) filtration, computed block by
// block for zero differential. Bidegree is (column, inner degree).
SpectralSequenceDims relative_weight_spectral_sequence(const DoubleComplex& complex, unsigned jobs = 1);

// Total complex s[A^{*,*}] filtered by column index.
FilteredComplex total_complex(const DoubleComplex& complex);

struct TotalCohomology {
  std::map<int, std::size_t> betti;  // zero entries omitted
  SpectralSequenceDims weight_spectral_sequence;
};

// Cohomology of the total complex for an arbitrary cdga B. Throws
// ConsistencyError if (d' + δ)^2 != 0.
TotalCohomology total_cohomology(const Algebra& algebra, const DiagonalGraph& graph, unsigned jobs = 1);
TotalCohomology total_cohomology(const DoubleComplex& complex);

}  // namespace confhodge
