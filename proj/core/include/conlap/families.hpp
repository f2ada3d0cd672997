#pragma once

#include <cstdint>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"

namespace conlap {

// Graph families. Vertices are labeled 1..n unless noted.

[[nodiscard]] Graph empty_graph(int n);
[[nodiscard]] Graph path_graph(int n);
// n >= 3
[[nodiscard]] Graph cycle_graph(int n);
[[nodiscard]] Graph complete_graph(int n);
// Hub "0" joined to the rim cycle 1..n; n >= 3.
[[nodiscard]] Graph wheel_graph(int n);
// Two triangles (1,2,3) and (2,3,4) sharing an edge.
[[nodiscard]] Graph diamond_graph();
// K_{2,2,2}: antipodal pairs (1,2), (3,4), (5,6) are the only non-edges.
[[nodiscard]] Graph octahedron_graph();
// Erdos-Renyi G(n, p). Each pair i<j (lexicographic) draws one 53-bit
// uniform from a 64-bit Mersenne twister seeded with `seed`.
[[nodiscard]] Graph random_graph(int n, double p, std::uint64_t seed);

// Complex families.

// The full n-dimensional simplex on vertices 1..n+1.
[[nodiscard]] SimplicialComplex simplex_complex(int n);
// Complete complex on n vertices.
[[nodiscard]] SimplicialComplex complete_complex(int n);
// Circle complex generated by the edges (1,2), ..., (n-1,n), (n,1); n >= 3.
[[nodiscard]] SimplicialComplex cycle_complex(int n);
[[nodiscard]] SimplicialComplex path_complex(int n);
[[nodiscard]] SimplicialComplex diamond_complex();
[[nodiscard]] SimplicialComplex wheel_complex(int n);
[[nodiscard]] SimplicialComplex octahedron_complex();
[[nodiscard]] SimplicialComplex random_whitney_complex(int n, double p, std::uint64_t seed);

}  // namespace conlap
