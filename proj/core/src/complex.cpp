#include "conlap/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace conlap {
namespace {

using IdSet = std::vector<std::uint32_t>;

bool canonical_less(const IdSet& a, const IdSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

constexpr std::size_t kMaxGeneratingSetSize = 24;

// Maps arbitrary label sets onto a canonical complex. When `close` is set,
// every nonempty subset of every input set is added; otherwise closure is
// validated.
SimplicialComplex build_from_label_sets(const std::vector<std::vector<Label>>& sets, bool close) {
  std::vector<Label> labels;
  for (const auto& s : sets) labels.insert(labels.end(), s.begin(), s.end());
  std::sort(labels.begin(), labels.end(), LabelLess{});
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::unordered_map<Label, std::uint32_t> rank;
  for (std::size_t i = 0; i < labels.size(); ++i) rank.emplace(labels[i], static_cast<std::uint32_t>(i));

  std::vector<IdSet> ids;
  ids.reserve(sets.size());
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("empty set in simplicial complex input");
    IdSet id;
    id.reserve(s.size());
    for (const auto& l : s) id.push_back(rank.at(l));
    std::sort(id.begin(), id.end());
    if (std::adjacent_find(id.begin(), id.end()) != id.end()) {
      throw std::invalid_argument("repeated vertex in simplicial complex input");
    }
    ids.push_back(std::move(id));
  }

  if (close) {
    std::set<IdSet, decltype(&canonical_less)> closed(&canonical_less);
    for (const auto& id : ids) {
      if (id.size() > kMaxGeneratingSetSize) {
        throw std::invalid_argument("generating set with " + std::to_string(id.size()) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(kMaxGeneratingSetSize));
      }
      const std::uint32_t full = (std::uint32_t{1} << id.size()) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        IdSet sub;
        for (std::size_t b = 0; b < id.size(); ++b) {
          if ((mask >> b) & 1U) sub.push_back(id[b]);
        }
        closed.insert(std::move(sub));
      }
    }
    ids.assign(closed.begin(), closed.end());
  } else {
    std::sort(ids.begin(), ids.end(), canonical_less);
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const auto& id : ids) {
      if (id.size() < 2) continue;
      for (std::size_t drop = 0; drop < id.size(); ++drop) {
        IdSet sub;
        sub.reserve(id.size() - 1);
        for (std::size_t b = 0; b < id.size(); ++b) {
          if (b != drop) sub.push_back(id[b]);
        }
        if (!std::binary_search(ids.begin(), ids.end(), sub, canonical_less)) {
          std::string text = "(";
          for (std::size_t b = 0; b < id.size(); ++b) text += (b ? "," : "") + labels[id[b]];
          throw std::invalid_argument("set of simplices is not closed under subsets: a face of " +
                                      text + ") is missing");
        }
      }
    }
  }
  return SimplicialComplex::from_canonical_ids(std::move(labels), ids);
}

std::vector<std::vector<Label>> label_sets(const SimplicialComplex& c) {
  std::vector<std::vector<Label>> out;
  out.reserve(c.size());
  for (const auto& x : c.simplices()) out.push_back(x.vertices());
  return out;
}

std::vector<Label> tagged(const Simplex& x, std::string_view tag) {
  std::vector<Label> out;
  out.reserve(x.size());
  for (const auto& l : x.vertices()) out.push_back(tag_label(tag, l));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end(), LabelLess{});
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("repeated vertex in simplex " + to_string());
  }
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end(), LabelLess{});
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (label_less(*a, *b)) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

std::string Simplex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += vertices_[i];
  }
  out += ')';
  return out;
}

bool operator<(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                      b.vertices_.end(), LabelLess{});
}

// ---------------------------------------------------------------------------
// FVector

std::int64_t FVector::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

std::int64_t FVector::even() const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < counts.size(); k += 2) s += counts[k];
  return s;
}

std::int64_t FVector::odd() const {
  std::int64_t s = 0;
  for (std::size_t k = 1; k < counts.size(); k += 2) s += counts[k];
  return s;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::vector<std::vector<Label>> sets;
  sets.reserve(simplices.size());
  for (auto& x : simplices) sets.push_back(x.vertices());
  return build_from_label_sets(sets, false);
}

SimplicialComplex SimplicialComplex::from_canonical_ids(
    std::vector<Label> vertices, const std::vector<std::vector<std::uint32_t>>& sets) {
  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  c.simplices_.reserve(sets.size());
  c.vsets_.reserve(sets.size());
  for (const auto& id : sets) {
    std::vector<Label> labels;
    labels.reserve(id.size());
    Bitset bits(c.vertices_.size());
    for (auto v : id) {
      labels.push_back(c.vertices_.at(v));
      bits.set(v);
    }
    c.simplices_.push_back(Simplex(Simplex::Trusted{}, std::move(labels)));
    c.vsets_.push_back(std::move(bits));
  }
  return c;
}

int SimplicialComplex::dimension() const noexcept {
  return simplices_.empty() ? -1 : simplices_.back().dimension();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& x) const {
  const auto it = std::lower_bound(simplices_.begin(), simplices_.end(), x);
  if (it == simplices_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

std::size_t SimplicialComplex::require_index(const Simplex& x) const {
  const auto i = index_of(x);
  if (!i) throw std::invalid_argument("simplex " + x.to_string() + " is not a member of the complex");
  return *i;
}

bool SimplicialComplex::is_facet(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j) {
    if (j != i && simplices_[j].size() > simplices_[i].size() && is_face_of(i, j)) return false;
  }
  return true;
}

std::vector<std::size_t> SimplicialComplex::facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_facet(i)) out.push_back(i);
  }
  return out;
}

SimplicialComplex SimplicialComplex::without_facet(std::size_t i) const {
  if (i >= size() || !is_facet(i)) {
    throw std::invalid_argument("only a facet can be removed from a complex");
  }
  auto sets = label_sets(*this);
  sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(i));
  return build_from_label_sets(sets, false);
}

SimplicialComplex SimplicialComplex::relabeled(const std::function<Label(const Label&)>& fn) const {
  std::vector<std::vector<Label>> sets;
  sets.reserve(size());
  for (const auto& x : simplices_) {
    std::vector<Label> mapped;
    mapped.reserve(x.size());
    for (const auto& l : x.vertices()) mapped.push_back(fn(l));
    sets.push_back(std::move(mapped));
  }
  auto out = build_from_label_sets(sets, false);
  if (out.size() != size()) throw std::invalid_argument("relabeling is not injective");
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (i) out += ',';
    out += simplices_[i].to_string();
  }
  out += '}';
  return out;
}

std::int64_t set_euler_characteristic(std::span<const Simplex> sets) {
  std::int64_t euler_char = 0;
  for (const auto& x : sets) euler_char += x.parity_sign();
  return euler_char;
}

// ---------------------------------------------------------------------------
// Constructors

SimplicialComplex generate_complex(const std::vector<std::vector<Label>>& sets) {
  return build_from_label_sets(sets, true);
}

SimplicialComplex generate_complex(const std::vector<Simplex>& sets) {
  std::vector<std::vector<Label>> raw;
  raw.reserve(sets.size());
  for (const auto& x : sets) raw.push_back(x.vertices());
  return build_from_label_sets(raw, true);
}

SimplicialComplex whitney_complex(const Graph& g) {
  std::vector<Label> labels = g.labels();
  std::sort(labels.begin(), labels.end(), LabelLess{});
  std::vector<std::uint32_t> rank(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto it = std::lower_bound(labels.begin(), labels.end(), g.label(i), LabelLess{});
    rank[i] = static_cast<std::uint32_t>(it - labels.begin());
  }
  std::vector<IdSet> sets;
  for_each_clique(g, [&](std::span<const std::size_t> clique) {
    IdSet id;
    id.reserve(clique.size());
    for (auto v : clique) id.push_back(rank[v]);
    std::sort(id.begin(), id.end());
    sets.push_back(std::move(id));
  });
  std::sort(sets.begin(), sets.end(), canonical_less);
  return SimplicialComplex::from_canonical_ids(std::move(labels), sets);
}

SimplicialComplex k_skeleton(const SimplicialComplex& c, int k) {
  if (k < 0) throw std::invalid_argument("skeleton dimension must be nonnegative");
  std::vector<std::vector<Label>> sets;
  for (const auto& x : c.simplices()) {
    if (x.dimension() <= k) sets.push_back(x.vertices());
  }
  return build_from_label_sets(sets, false);
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v];
  return v;
}

void extend_forests(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                    std::size_t next, std::vector<std::size_t> parent, IdSet& chosen,
                    const std::vector<std::uint32_t>& edge_rank, std::vector<IdSet>& out) {
  for (std::size_t e = next; e < edges.size(); ++e) {
    const auto ra = find_root(parent, edges[e].first);
    const auto rb = find_root(parent, edges[e].second);
    if (ra == rb) continue;
    auto merged = parent;
    merged[ra] = rb;
    chosen.push_back(edge_rank[e]);
    IdSet sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    extend_forests(edges, e + 1, std::move(merged), chosen, edge_rank, out);
    chosen.pop_back();
  }
}

}  // namespace

SimplicialComplex graphic_matroid(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Label> labels;
  labels.reserve(edges.size());
  for (auto [a, b] : edges) {
    const Label& la = g.label(a);
    const Label& lb = g.label(b);
    labels.push_back(label_less(la, lb) ? la + "-" + lb : lb + "-" + la);
  }
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end(), LabelLess{});
  std::vector<std::uint32_t> edge_rank(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_rank[e] = static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), labels[e], LabelLess{}) - sorted.begin());
  }
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<IdSet> forests;
  IdSet chosen;
  extend_forests(edges, 0, parent, chosen, edge_rank, forests);
  std::sort(forests.begin(), forests.end(), canonical_less);
  return SimplicialComplex::from_canonical_ids(std::move(sorted), forests);
}

SimplicialComplex independence_complex(const Graph& g) { return whitney_complex(g.complement()); }

SimplicialComplex complete_complex_on(const Simplex& x) { return generate_complex({x.vertices()}); }

SimplicialComplex zykov_join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::vector<Label>> sets;
  sets.reserve(a.size() + b.size() + a.size() * b.size());
  for (const auto& x : a.simplices()) sets.push_back(tagged(x, "L"));
  for (const auto& y : b.simplices()) sets.push_back(tagged(y, "R"));
  for (const auto& x : a.simplices()) {
    const auto left = tagged(x, "L");
    for (const auto& y : b.simplices()) {
      auto both = left;
      const auto right = tagged(y, "R");
      both.insert(both.end(), right.begin(), right.end());
      sets.push_back(std::move(both));
    }
  }
  return build_from_label_sets(sets, false);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::vector<Label>> sets;
  sets.reserve(a.size() + b.size());
  for (const auto& x : a.simplices()) sets.push_back(tagged(x, "L"));
  for (const auto& y : b.simplices()) sets.push_back(tagged(y, "R"));
  return build_from_label_sets(sets, false);
}

// ---------------------------------------------------------------------------
// Functionals

FVector f_vector(const SimplicialComplex& c) {
  FVector f;
  for (const auto& x : c.simplices()) {
    const auto k = static_cast<std::size_t>(x.dimension());
    if (f.counts.size() <= k) f.counts.resize(k + 1, 0);
    ++f.counts[k];
  }
  return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& c) {
  return set_euler_characteristic(c.simplices());
}

int fermi_characteristic(const SimplicialComplex& c) {
  int fermi_char = 1;
  for (const auto& x : c.simplices()) fermi_char *= x.parity_sign();
  return fermi_char;
}

IntPolynomial f_function(const FVector& f) {
  std::vector<mpz_class> coeffs(f.counts.size() + 1, 0);
  coeffs[0] = 1;
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    coeffs[k + 1] = mpz_class(static_cast<long>(f.counts[k]));
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial f_function(const SimplicialComplex& c) { return f_function(f_vector(c)); }

std::int64_t genus(const SimplicialComplex& c) { return 1 - euler_characteristic(c); }

}  // namespace conlap
