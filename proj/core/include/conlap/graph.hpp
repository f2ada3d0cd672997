#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conlap/bitset.hpp"
#include "conlap/label.hpp"

namespace conlap {

// Finite simple graph on labeled vertices. Vertices keep insertion order;
// adjacency is stored as one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Label> vertices);

  std::size_t add_vertex(Label label);
  // Adds the edge {a, b}; adding an existing edge is a no-op. Loops throw.
  void add_edge(std::size_t a, std::size_t b);
  void add_edge(std::string_view a, std::string_view b);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] bool empty() const noexcept { return labels_.empty(); }
  [[nodiscard]] const std::vector<Label>& labels() const noexcept { return labels_; }
  [[nodiscard]] const Label& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;

  [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const { return rows_.at(a).test(b); }
  [[nodiscard]] const Bitset& neighborhood(std::size_t i) const { return rows_.at(i); }
  [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t i) const;
  [[nodiscard]] std::size_t degree(std::size_t i) const { return rows_.at(i).count(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  // Edges as index pairs (i < j), sorted.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Subgraph induced on the given vertex indices, in the given order.
  [[nodiscard]] Graph induced(std::span<const std::size_t> vertices) const;
  [[nodiscard]] Graph complement() const;

  // Bitset of width size() with every vertex set.
  [[nodiscard]] Bitset all_vertices() const;

 private:
  std::vector<Label> labels_;
  std::vector<Bitset> rows_;
  std::unordered_map<Label, std::size_t> index_;
  std::size_t edge_count_ = 0;
};

// Same labels and same edges between equal labels, ignoring vertex order.
[[nodiscard]] bool same_labeled_graph(const Graph& a, const Graph& b);

// Visits every nonempty clique (vertex indices ascending) of the subgraph
// induced on `within`.
void for_each_clique(const Graph& g, const Bitset& within,
                     const std::function<void(std::span<const std::size_t>)>& visit);
void for_each_clique(const Graph& g,
                     const std::function<void(std::span<const std::size_t>)>& visit);

// counts[k] = number of (k+1)-cliques of the subgraph induced on `within`,
// i.e. the f-vector of its Whitney complex.
[[nodiscard]] std::vector<std::int64_t> clique_counts(const Graph& g, const Bitset& within);
[[nodiscard]] std::vector<std::int64_t> clique_counts(const Graph& g);

// Euler characteristic of the Whitney complex, without materializing it.
[[nodiscard]] std::int64_t whitney_euler_characteristic(const Graph& g, const Bitset& within);
[[nodiscard]] std::int64_t whitney_euler_characteristic(const Graph& g);

// Zykov join of graphs: disjoint union plus every cross edge. Labels are
// tagged "L:" and "R:".
[[nodiscard]] Graph graph_join(const Graph& a, const Graph& b);
[[nodiscard]] Graph graph_disjoint_union(const Graph& a, const Graph& b);

}  // namespace conlap
