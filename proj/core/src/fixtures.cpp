#include "conlap/fixtures.hpp"

#include <array>
#include <sstream>

#include "conlap/families.hpp"

namespace conlap {

Graph kite_graph() {
  Graph g({"1", "2", "3", "4"});
  g.add_edge("1", "4");
  g.add_edge("1", "2");
  g.add_edge("1", "3");
  g.add_edge("2", "3");
  g.add_edge("3", "4");
  return g;
}

SimplicialComplex three_facet_complex() {
  return generate_complex({{"1", "3", "6"}, {"1", "4", "5"}, {"2", "5"}});
}

std::vector<NamedComplex> named_complexes() {
  return {
      {"point", simplex_complex(0)},
      {"edge", simplex_complex(1)},
      {"two points", generate_complex({{"1"}, {"2"}})},
      {"triangle", simplex_complex(2)},
      {"tetrahedron", simplex_complex(3)},
      {"C3", cycle_complex(3)},
      {"C4", cycle_complex(4)},
      {"C5", cycle_complex(5)},
      {"path P3", path_complex(3)},
      {"diamond", diamond_complex()},
      {"wheel W4", wheel_complex(4)},
      {"octahedron", octahedron_complex()},
      {"kite matroid", graphic_matroid(kite_graph())},
      {"three facets", three_facet_complex()},
      {"edge + triangle", disjoint_union(simplex_complex(1), simplex_complex(2))},
      {"C4 join point", zykov_join(cycle_complex(4), simplex_complex(0))},
  };
}

std::vector<NamedGraph> named_graphs() {
  return {
      {"K1", complete_graph(1)},
      {"K2", complete_graph(2)},
      {"K3", complete_graph(3)},
      {"K4", complete_graph(4)},
      {"P4", path_graph(4)},
      {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)},
      {"C6", cycle_graph(6)},
      {"diamond", diamond_graph()},
      {"kite", kite_graph()},
      {"W4", wheel_graph(4)},
      {"W5", wheel_graph(5)},
      {"octahedron", octahedron_graph()},
      {"three isolated", empty_graph(3)},
  };
}

std::vector<NamedGraph> random_graph_pool(std::uint64_t seed, std::size_t count) {
  static constexpr std::array<double, 3> kDensity = {0.3, 0.5, 0.7};
  std::vector<NamedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 3 + static_cast<int>(i % 6);
    const double p = kDensity[(i / 6) % 3];
    const std::uint64_t s = seed * 1000003ULL + i;
    std::ostringstream name;
    name << "random(n=" << n << ",p=" << p << ",seed=" << s << ")";
    out.push_back({name.str(), random_graph(n, p, s)});
  }
  return out;
}

std::vector<NamedComplex> random_complex_pool(std::uint64_t seed, std::size_t count) {
  std::vector<NamedComplex> out;
  for (auto& g : random_graph_pool(seed, count)) {
    out.push_back({std::move(g.name), whitney_complex(g.graph)});
  }
  return out;
}

}  // namespace conlap
