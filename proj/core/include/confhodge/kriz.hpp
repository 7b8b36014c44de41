#pragma once

#include <array>
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
#include "confhodge/tensor.hpp"

namespace confhodge {

// x ⊗ G_S: a word of H*(X)^{⊗n} times the ordered product of the generators
// G_e, e ∈ S, in edge order. The G_e have degree 2d-1, weight 2d and type (d,d).
struct GMonomial {
  EdgeSubset edges;
  std::uint64_t word = 0;

  friend auto operator<=>(const GMonomial&, const GMonomial&) = default;
};

using MonomialCombination = std::map<GMonomial, Rational>;

struct KrizOptions {
  // Replaces the diagonal class computed by diagonal_class().
  std::optional<TensorCombination> diagonal;
  // Coefficients of G_ij G_jk, G_jk G_ki and G_ki G_ij in the three-term relation.
  std::array<int, 3> arnold_signs{1, 1, 1};
  unsigned jobs = 1;
};

// E_2 page of the Leray spectral sequence of F(X, n) ⊂ X^n, presented as the
// span of all monomials modulo the homogeneous relation subspace generated by
// the locality relations (p_i^* a - p_j^* a) G_ij and the three-term relations.
class E2Page {
 public:
  struct Block {
    std::vector<GMonomial> monomials;       // sorted
    EchelonSpace relations;                 // coordinates index `monomials`
    std::vector<std::size_t> quotient;      // monomial positions forming a basis of the quotient
  };

  const Algebra& algebra() const { return algebra_; }
  int n() const { return graph_.n(); }
  const DiagonalGraph& graph() const { return graph_; }
  const TensorCombination& diagonal() const { return diagonal_; }

  HodgeKey key_of(const GMonomial& monomial) const;
  std::vector<HodgeKey> keys() const;
  const Block* block(const HodgeKey& key) const;
  std::size_t dim(const HodgeKey& key) const;

  MonomialCombination multiply(const GMonomial& a, const GMonomial& b) const;
  // d(x G_S) = (−1)^{|x|} Σ_l (−1)^{l-1} (x · Δ_{e_l}) G_{S \ e_l}
  MonomialCombination differentiate(const GMonomial& monomial) const;
  // Relation generators, before multiplying by monomials.
  const std::vector<MonomialCombination>& generators() const { return generators_; }

  // Position of a monomial inside its block, or nullopt if no such block.
  std::optional<std::size_t> position(const HodgeKey& key, const GMonomial& monomial) const;

 private:
  friend E2Page build_e2(const Algebra&, const DiagonalGraph&, const KrizOptions&);
  E2Page(Algebra algebra, DiagonalGraph graph);

  Algebra algebra_;
  DiagonalGraph graph_;
  TensorBasis words_;
  TensorCombination diagonal_;
  std::vector<MonomialCombination> delta_on_edge_;  // Δ placed on factors (i, j), per edge
  std::vector<MonomialCombination> generators_;
  std::map<HodgeKey, Block> blocks_;
};

// Throws ScopeError unless the graph is complete and d >= 1, and
// ValidationError if the algebra is invalid.
E2Page build_e2(const Algebra& algebra, const DiagonalGraph& graph, const KrizOptions& options = {});

// d_2 on the quotient basis, from block `key` to (m+1, w, p, q). Throws
// ConsistencyError if d_2 does not preserve the relation subspace there.
RationalMatrix d2_matrix(const E2Page& page, const HodgeKey& key);

// Blocks where d(relations) ⊄ relations.
std::vector<std::string> well_definedness_violations(const E2Page& page, unsigned jobs = 1);
// Blocks where d_2 ∘ d_2 != 0.
std::vector<std::string> d2_square_violations(const E2Page& page, unsigned jobs = 1);

// Cohomology of (E_2, d_2) as an open-variety table.
HodgeTable e3_table(const E2Page& page, unsigned jobs = 1);
HodgeTable e3_table(const Algebra& algebra, int n, unsigned jobs = 1);

}  // namespace confhodge
