#include "conlap/families.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace conlap {
namespace {

Graph numbered_vertices(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  return g;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph empty_graph(int n) { return numbered_vertices(n); }

Graph path_graph(int n) {
  Graph g = numbered_vertices(n);
  for (int i = 1; i < n; ++i) g.add_edge(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(static_cast<std::size_t>(n - 1), 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g = numbered_vertices(n);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) g.add_edge(a, b);
  }
  return g;
}

Graph wheel_graph(int n) {
  require(n >= 3, "a wheel needs at least 3 rim vertices");
  Graph g;
  g.add_vertex("0");
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == static_cast<std::size_t>(n) ? 1 : i + 1);
  }
  return g;
}

Graph diamond_graph() {
  Graph g = numbered_vertices(4);
  g.add_edge("1", "2");
  g.add_edge("1", "3");
  g.add_edge("2", "3");
  g.add_edge("2", "4");
  g.add_edge("3", "4");
  return g;
}

Graph octahedron_graph() {
  Graph g = complete_graph(6);
  Graph out = numbered_vertices(6);
  for (auto [a, b] : g.edges()) {
    if (a / 2 != b / 2) out.add_edge(a, b);
  }
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  Graph g = numbered_vertices(n);
  std::mt19937_64 engine(seed);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < p) g.add_edge(a, b);
    }
  }
  return g;
}

SimplicialComplex simplex_complex(int n) {
  require(n >= 0, "simplex dimension must be nonnegative");
  return whitney_complex(complete_graph(n + 1));
}

SimplicialComplex complete_complex(int n) { return whitney_complex(complete_graph(n)); }

SimplicialComplex cycle_complex(int n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  std::vector<std::vector<Label>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({std::to_string(i), std::to_string(i == n ? 1 : i + 1)});
  return generate_complex(edges);
}

SimplicialComplex path_complex(int n) { return whitney_complex(path_graph(n)); }

SimplicialComplex diamond_complex() { return generate_complex({{"1", "2", "3"}, {"2", "3", "4"}}); }

SimplicialComplex wheel_complex(int n) { return whitney_complex(wheel_graph(n)); }

SimplicialComplex octahedron_complex() { return whitney_complex(octahedron_graph()); }

SimplicialComplex random_whitney_complex(int n, double p, std::uint64_t seed) {
  return whitney_complex(random_graph(n, p, seed));
}

}  // namespace conlap
