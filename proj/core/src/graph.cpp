#include "conlap/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace conlap {

Graph::Graph(std::vector<Label> vertices) {
  for (auto& v : vertices) add_vertex(std::move(v));
}

std::size_t Graph::add_vertex(Label label) {
  if (index_.contains(label)) {
    throw std::invalid_argument("duplicate graph vertex '" + label + "'");
  }
  const std::size_t idx = labels_.size();
  index_.emplace(label, idx);
  labels_.push_back(std::move(label));
  for (auto& row : rows_) row.resize(labels_.size());
  rows_.emplace_back(labels_.size());
  return idx;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw std::out_of_range("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("loop at vertex '" + labels_[a] + "'");
  if (rows_[a].test(b)) return;
  rows_[a].set(b);
  rows_[b].set(a);
  ++edge_count_;
}

void Graph::add_edge(std::string_view a, std::string_view b) {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia || !ib) {
    throw std::invalid_argument("edge endpoint is not a vertex: " + std::string(ia ? b : a));
  }
  add_edge(*ia, *ib);
}

std::optional<std::size_t> Graph::index_of(std::string_view label) const {
  const auto it = index_.find(Label(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  rows_.at(i).for_each([&](std::size_t j) { out.push_back(j); });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < size(); ++i) {
    rows_[i].for_each([&](std::size_t j) {
      if (i < j) out.emplace_back(i, j);
    });
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph out;
  for (auto v : vertices) out.add_vertex(labels_.at(v));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) out.add_edge(a, b);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(labels_);
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (!adjacent(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

Bitset Graph::all_vertices() const {
  Bitset all(size());
  for (std::size_t i = 0; i < size(); ++i) all.set(i);
  return all;
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto j = b.index_of(a.label(i));
    if (!j) return false;
    to_b[i] = *j;
  }
  for (auto [i, j] : a.edges()) {
    if (!b.adjacent(to_b[i], to_b[j])) return false;
  }
  return true;
}

namespace {

void extend_cliques(const Graph& g, std::vector<std::size_t>& clique, const Bitset& candidates,
                    const std::function<void(std::span<const std::size_t>)>& visit) {
  candidates.for_each([&](std::size_t v) {
    clique.push_back(v);
    visit(clique);
    Bitset next = candidates & g.neighborhood(v);
    next.clear_through(v);
    if (next.any()) extend_cliques(g, clique, next, visit);
    clique.pop_back();
  });
}

void count_cliques(const Graph& g, std::size_t depth, const Bitset& candidates,
                   std::vector<std::int64_t>& counts) {
  candidates.for_each([&](std::size_t v) {
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    ++counts[depth];
    Bitset next = candidates & g.neighborhood(v);
    next.clear_through(v);
    if (next.any()) count_cliques(g, depth + 1, next, counts);
  });
}

}  // namespace

void for_each_clique(const Graph& g, const Bitset& within,
                     const std::function<void(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> clique;
  extend_cliques(g, clique, within, visit);
}

void for_each_clique(const Graph& g,
                     const std::function<void(std::span<const std::size_t>)>& visit) {
  for_each_clique(g, g.all_vertices(), visit);
}

std::vector<std::int64_t> clique_counts(const Graph& g, const Bitset& within) {
  std::vector<std::int64_t> counts;
  count_cliques(g, 0, within, counts);
  return counts;
}

std::vector<std::int64_t> clique_counts(const Graph& g) {
  return clique_counts(g, g.all_vertices());
}

std::int64_t whitney_euler_characteristic(const Graph& g, const Bitset& within) {
  const auto counts = clique_counts(g, within);
  std::int64_t euler_char = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) euler_char += (k % 2 == 0) ? counts[k] : -counts[k];
  return euler_char;
}

std::int64_t whitney_euler_characteristic(const Graph& g) {
  return whitney_euler_characteristic(g, g.all_vertices());
}

Graph graph_disjoint_union(const Graph& a, const Graph& b) {
  Graph out;
  for (const auto& l : a.labels()) out.add_vertex(tag_label("L", l));
  for (const auto& l : b.labels()) out.add_vertex(tag_label("R", l));
  for (auto [i, j] : a.edges()) out.add_edge(i, j);
  for (auto [i, j] : b.edges()) out.add_edge(a.size() + i, a.size() + j);
  return out;
}

Graph graph_join(const Graph& a, const Graph& b) {
  Graph out = graph_disjoint_union(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out.add_edge(i, a.size() + j);
  }
  return out;
}

}  // namespace conlap
