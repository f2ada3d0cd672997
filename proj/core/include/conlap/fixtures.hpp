#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"

namespace conlap {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Kite: edges (1,4), (1,2), (1,3), (2,3), (3,4).
[[nodiscard]] Graph kite_graph();
// Generated by (1,3,6), (1,4,5), (2,5).
[[nodiscard]] SimplicialComplex three_facet_complex();

// Hand-picked complexes, all nonempty.
[[nodiscard]] std::vector<NamedComplex> named_complexes();
[[nodiscard]] std::vector<NamedGraph> named_graphs();

inline constexpr std::size_t kDefaultRandomPool = 54;
// Erdos-Renyi graphs on 3..8 vertices with p cycling through 0.3, 0.5, 0.7.
[[nodiscard]] std::vector<NamedGraph> random_graph_pool(std::uint64_t seed,
                                                        std::size_t count = kDefaultRandomPool);
// Whitney complexes of random_graph_pool.
[[nodiscard]] std::vector<NamedComplex> random_complex_pool(std::uint64_t seed,
                                                            std::size_t count = kDefaultRandomPool);

}  // namespace conlap
