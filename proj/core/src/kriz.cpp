#include "confhodge/kriz.hpp"

#include <algorithm>
#include <bit>

#include "confhodge/error.hpp"
#include "confhodge/parallel.hpp"

namespace confhodge {

namespace {

std::string key_label(const HodgeKey& k) {
  return "(" + std::to_string(k.m) + "," + std::to_string(k.w) + "," + std::to_string(k.p) + "," +
         std::to_string(k.q) + ")";
}

HodgeKey shifted(const HodgeKey& k, int dm) { return {k.m + dm, k.w, k.p, k.q}; }

void add_monomial(MonomialCombination& c, const GMonomial& m, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = c.try_emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) c.erase(it);
  }
}

// Sign of G_S G_T rewritten as G_{S∪T} in edge order: one transposition of
// odd generators per pair (s, t) with t < s.
int generator_sign(EdgeSubset s, EdgeSubset t) {
  std::size_t inversions = 0;
  for (auto e : t.members())
    inversions += static_cast<std::size_t>(std::popcount(s.bits() >> (e + 1)));
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

E2Page::E2Page(Algebra algebra, DiagonalGraph graph)
    : algebra_(std::move(algebra)),
      graph_(std::move(graph)),
      words_(algebra_.dim(), static_cast<std::size_t>(graph_.n())) {}

HodgeKey E2Page::key_of(const GMonomial& monomial) const {
  const Word w = words_.word(monomial.word);
  const int d = algebra_.complex_dim();
  const int g = static_cast<int>(monomial.edges.cardinality());
  const int degree = word_degree(algebra_, w);
  const HodgeType t = word_type(algebra_, w);
  return {degree + (2 * d - 1) * g, degree + 2 * d * g, t.p + d * g, t.q + d * g};
}

std::vector<HodgeKey> E2Page::keys() const {
  std::vector<HodgeKey> out;
  for (const auto& [k, b] : blocks_) out.push_back(k);
  return out;
}

const E2Page::Block* E2Page::block(const HodgeKey& key) const {
  auto it = blocks_.find(key);
  return it == blocks_.end() ? nullptr : &it->second;
}

std::size_t E2Page::dim(const HodgeKey& key) const {
  const Block* b = block(key);
  return b == nullptr ? 0 : b->quotient.size();
}

std::optional<std::size_t> E2Page::position(const HodgeKey& key, const GMonomial& monomial) const {
  const Block* b = block(key);
  if (b == nullptr) return std::nullopt;
  auto it = std::lower_bound(b->monomials.begin(), b->monomials.end(), monomial);
  if (it == b->monomials.end() || *it != monomial) return std::nullopt;
  return static_cast<std::size_t>(it - b->monomials.begin());
}

MonomialCombination E2Page::multiply(const GMonomial& a, const GMonomial& b) const {
  MonomialCombination out;
  if ((a.edges.bits() & b.edges.bits()) != 0) return out;
  const Word y = words_.word(b.word);
  // Moving y past G_S costs (−1)^{|S|·|y|} since every G has odd degree.
  long exponent = static_cast<long>(a.edges.cardinality()) * word_degree(algebra_, y);
  int sign = (exponent % 2 == 0 ? 1 : -1) * generator_sign(a.edges, b.edges);
  const EdgeSubset edges(a.edges.bits() | b.edges.bits());
  for (const auto& [w, c] : multiply_words(algebra_, words_.word(a.word), y))
    add_monomial(out, {edges, words_.index(w)}, sign * c);
  return out;
}

MonomialCombination E2Page::differentiate(const GMonomial& monomial) const {
  MonomialCombination out;
  const Word x = words_.word(monomial.word);
  const int outer = word_degree(algebra_, x) % 2 == 0 ? 1 : -1;
  const GMonomial word_only{EdgeSubset{}, monomial.word};
  int l = 0;
  for (auto e : monomial.edges.members()) {
    const int sign = outer * (l % 2 == 0 ? 1 : -1);
    ++l;
    const EdgeSubset rest = monomial.edges.without(e);
    for (const auto& [delta_term, c] : delta_on_edge_[e]) {
      for (const auto& [product, pc] : multiply(word_only, delta_term))
        add_monomial(out, {rest, product.word}, sign * c * pc);
    }
  }
  return out;
}

E2Page build_e2(const Algebra& algebra, const DiagonalGraph& graph, const KrizOptions& options) {
  if (!graph.is_complete())
    throw ScopeError("the E2 model is only available for the complete graph (got '" + graph.to_string() + "')");
  if (algebra.complex_dim() < 1) throw ScopeError("the E2 model needs complex_dim >= 1");
  if (auto report = validate_algebra(algebra); !report.empty())
    throw ValidationError("algebra '" + algebra.name() + "' is invalid: " + report.front());

  E2Page page(algebra, graph);
  page.diagonal_ = options.diagonal ? *options.diagonal : diagonal_class(algebra);
  const auto n = static_cast<std::size_t>(graph.n());
  const std::size_t edges = graph.edge_count();
  const auto unit = static_cast<std::uint32_t>(algebra.unit());
  const Word unit_word(n, unit);

  for (std::size_t e = 0; e < edges; ++e) {
    const auto& edge = graph.edge(e);
    MonomialCombination placed;
    for (const auto& [w, c] : page.diagonal_) {
      if (w.size() != 2) throw ValidationError("diagonal class must live in B⊗B");
      Word full = unit_word;
      full[static_cast<std::size_t>(edge.i - 1)] = w[0];
      full[static_cast<std::size_t>(edge.j - 1)] = w[1];
      add_monomial(placed, {EdgeSubset{}, page.words_.index(full)}, c);
    }
    page.delta_on_edge_.push_back(std::move(placed));
  }

  // Locality: (a at i − a at j)·G_ij for every non-unit basis class a.
  for (std::size_t e = 0; e < edges; ++e) {
    const auto& edge = graph.edge(e);
    for (std::uint32_t a = 0; a < algebra.dim(); ++a) {
      if (a == unit) continue;
      Word at_i = unit_word, at_j = unit_word;
      at_i[static_cast<std::size_t>(edge.i - 1)] = a;
      at_j[static_cast<std::size_t>(edge.j - 1)] = a;
      MonomialCombination g;
      add_monomial(g, {EdgeSubset{}.with(e), page.words_.index(at_i)}, 1);
      add_monomial(g, {EdgeSubset{}.with(e), page.words_.index(at_j)}, -1);
      page.generators_.push_back(std::move(g));
    }
  }

  // Three-term relation G_ij G_jk + G_jk G_ki + G_ki G_ij with G_ki = G_ik,
  // each product rewritten in edge order.
  auto edge_index = [&](int i, int j) {
    const auto& list = graph.edges();
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), Edge{i, j}) - list.begin());
  };
  const std::uint64_t unit_index = page.words_.index(unit_word);
  for (int i = 1; i <= graph.n(); ++i)
    for (int j = i + 1; j <= graph.n(); ++j)
      for (int k = j + 1; k <= graph.n(); ++k) {
        const std::size_t ij = edge_index(i, j), jk = edge_index(j, k), ik = edge_index(i, k);
        auto ordered = [&](std::size_t first, std::size_t second) {
          return GMonomial{EdgeSubset{}.with(first).with(second), unit_index};
        };
        auto order_sign = [](std::size_t first, std::size_t second) { return first < second ? 1 : -1; };
        MonomialCombination g;
        add_monomial(g, ordered(ij, jk), options.arnold_signs[0] * order_sign(ij, jk));
        add_monomial(g, ordered(jk, ik), options.arnold_signs[1] * order_sign(jk, ik));
        add_monomial(g, ordered(ik, ij), options.arnold_signs[2] * order_sign(ik, ij));
        page.generators_.push_back(std::move(g));
      }

  // Monomials, grouped by grading.
  const std::uint64_t subsets = std::uint64_t{1} << edges;
  for (std::uint64_t s = 0; s < subsets; ++s)
    for (std::uint64_t w = 0; w < page.words_.size(); ++w) {
      GMonomial m{EdgeSubset(s), w};
      page.blocks_[page.key_of(m)].monomials.push_back(m);
    }
  for (auto& [key, block] : page.blocks_) {
    std::sort(block.monomials.begin(), block.monomials.end());
    block.relations = EchelonSpace(block.monomials.size());
  }

  // Relation subspace: every monomial times every generator.
  std::map<HodgeKey, std::vector<SparseVector>> spanning;
  std::vector<GMonomial> all;
  for (const auto& [key, block] : page.blocks_) all.insert(all.end(), block.monomials.begin(), block.monomials.end());
  for (const auto& generator : page.generators_) {
    const EdgeSubset support(generator.begin()->first.edges);
    for (const auto& m : all) {
      if ((m.edges.bits() & support.bits()) != 0) continue;
      MonomialCombination product;
      for (const auto& [term, c] : generator)
        for (const auto& [t, pc] : page.multiply(m, term)) add_monomial(product, t, c * pc);
      if (product.empty()) continue;
      const HodgeKey key = page.key_of(product.begin()->first);
      SparseVector v;
      for (const auto& [t, c] : product) {
        auto pos = page.position(key, t);
        if (!pos || page.key_of(t) != key) throw ConsistencyError("relation is not homogeneous");
        v.emplace(*pos, c);
      }
      spanning[key].push_back(std::move(v));
    }
  }

  std::vector<std::pair<const HodgeKey, E2Page::Block>*> work;
  for (auto& entry : page.blocks_) work.push_back(&entry);
  parallel_for(work.size(), options.jobs, [&](std::size_t index) {
    auto& [key, block] = *work[index];
    if (auto it = spanning.find(key); it != spanning.end())
      for (const auto& v : it->second) block.relations.insert(v);
    block.quotient = block.relations.non_pivots();
  });
  return page;
}

namespace {

// d of a vector in block `key`, as coordinates of block key + (1,0,0,0).
SparseVector differentiate_vector(const E2Page& page, const HodgeKey& key, const SparseVector& v) {
  const auto* source = page.block(key);
  const HodgeKey target = shifted(key, 1);
  SparseVector out;
  for (const auto& [pos, c] : v) {
    for (const auto& [t, tc] : page.differentiate(source->monomials[pos])) {
      auto where = page.position(target, t);
      if (!where) throw ConsistencyError("d_2 leaves the grading of " + key_label(key));
      axpy(out, c * tc, SparseVector{{*where, Rational(1)}});
    }
  }
  return out;
}

bool relations_preserved(const E2Page& page, const HodgeKey& key) {
  const auto* source = page.block(key);
  const auto* target = page.block(shifted(key, 1));
  for (const auto& row : source->relations.basis()) {
    SparseVector image = differentiate_vector(page, key, row);
    if (image.empty()) continue;
    if (target == nullptr || !target->relations.contains(image)) return false;
  }
  return true;
}

}  // namespace

RationalMatrix d2_matrix(const E2Page& page, const HodgeKey& key) {
  const HodgeKey target_key = shifted(key, 1);
  const auto* source = page.block(key);
  const auto* target = page.block(target_key);
  RationalMatrix m(page.dim(target_key), page.dim(key));
  if (source == nullptr) return m;
  if (!relations_preserved(page, key))
    throw ConsistencyError("d_2 does not preserve the relation subspace at " + key_label(key));

  std::map<std::size_t, std::size_t> quotient_index;
  if (target != nullptr)
    for (std::size_t k = 0; k < target->quotient.size(); ++k) quotient_index[target->quotient[k]] = k;

  for (std::size_t col = 0; col < source->quotient.size(); ++col) {
    SparseVector image = differentiate_vector(page, key, SparseVector{{source->quotient[col], Rational(1)}});
    if (image.empty()) continue;
    if (target == nullptr) throw ConsistencyError("d_2 has no target block at " + key_label(key));
    for (const auto& [pos, c] : target->relations.reduce(image)) m.add(quotient_index.at(pos), col, c);
  }
  return m;
}

std::vector<std::string> well_definedness_violations(const E2Page& page, unsigned jobs) {
  const auto keys = page.keys();
  std::vector<int> ok(keys.size(), 1);
  parallel_for(keys.size(), jobs, [&](std::size_t i) { ok[i] = relations_preserved(page, keys[i]) ? 1 : 0; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!ok[i]) out.push_back("d_2(relations) not contained in relations at " + key_label(keys[i]));
  return out;
}

namespace {

std::map<HodgeKey, RationalMatrix> all_d2(const E2Page& page, unsigned jobs) {
  const auto keys = page.keys();
  std::vector<RationalMatrix> mats(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) { mats[i] = d2_matrix(page, keys[i]); });
  std::map<HodgeKey, RationalMatrix> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], std::move(mats[i]));
  return out;
}

RationalMatrix lookup(const std::map<HodgeKey, RationalMatrix>& d2, const E2Page& page, const HodgeKey& key) {
  auto it = d2.find(key);
  if (it != d2.end()) return it->second;
  return RationalMatrix(page.dim(shifted(key, 1)), page.dim(key));
}

}  // namespace

std::vector<std::string> d2_square_violations(const E2Page& page, unsigned jobs) {
  auto d2 = all_d2(page, jobs);
  std::vector<std::string> out;
  for (const auto& [key, m] : d2)
    if (!composes_to_zero(m, lookup(d2, page, shifted(key, 1))))
      out.push_back("d_2^2 != 0 from " + key_label(key));
  return out;
}

HodgeTable e3_table(const E2Page& page, unsigned jobs) {
  auto d2 = all_d2(page, jobs);
  HodgeTable table(SpaceKind::Open, page.n(), page.algebra().complex_dim(), page.graph().to_string());
  for (const auto& key : page.keys()) {
    if (page.dim(key) == 0) continue;
    table.add(key, cohomology_dim(lookup(d2, page, shifted(key, -1)), lookup(d2, page, key)));
  }
  return table;
}

HodgeTable e3_table(const Algebra& algebra, int n, unsigned jobs) {
  KrizOptions options;
  options.jobs = jobs;
  return e3_table(build_e2(algebra, DiagonalGraph::complete(n), options), jobs);
}

}  // namespace confhodge
