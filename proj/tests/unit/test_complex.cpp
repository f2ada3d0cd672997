#include <gtest/gtest.h>

#include "conlap/complex.hpp"
#include "conlap/families.hpp"
#include "conlap/fixtures.hpp"
#include "conlap/label.hpp"
#include "support.hpp"

using namespace conlap;
using support::gen;

namespace {

std::vector<std::string> strings(const SimplicialComplex& c) {
  std::vector<std::string> out;
  for (const auto& x : c.simplices()) out.push_back(x.to_string());
  return out;
}

void expect_closed(const SimplicialComplex& c) {
  for (const auto& x : c.simplices()) {
    const auto& v = x.vertices();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << v.size()); ++mask) {
      std::vector<Label> sub;
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (mask >> b & 1U) sub.push_back(v[b]);
      }
      EXPECT_TRUE(c.contains(Simplex(sub))) << x.to_string();
    }
  }
}

}  // namespace

TEST(Label, IntegersBeforeStringsAndNumericOrder) {
  EXPECT_TRUE(label_less("2", "10"));
  EXPECT_FALSE(label_less("10", "2"));
  EXPECT_TRUE(label_less("9", "a"));
  EXPECT_TRUE(label_less("a", "b"));
  EXPECT_TRUE(label_less("-3", "1"));
  EXPECT_FALSE(label_less("x", "x"));
  EXPECT_EQ(strip_tag(tag_label("L", "7")), "7");
}

TEST(Simplex, SortsAndRejectsBadInput) {
  const Simplex x({"3", "1", "2"});
  EXPECT_EQ(x.to_string(), "(1,2,3)");
  EXPECT_EQ(x.dimension(), 2);
  EXPECT_EQ(x.parity_sign(), 1);
  EXPECT_EQ(Simplex({"4", "5"}).parity_sign(), -1);
  EXPECT_THROW(Simplex(std::vector<Label>{}), std::invalid_argument);
  EXPECT_THROW(Simplex({"1", "1"}), std::invalid_argument);
}

TEST(Simplex, CanonicalOrderIsCardinalityThenLexicographic) {
  EXPECT_LT(Simplex({"9"}), Simplex({"1", "2"}));
  EXPECT_LT(Simplex({"1", "3"}), Simplex({"2", "3"}));
  EXPECT_LT(Simplex({"2"}), Simplex({"10"}));
}

TEST(GenerateComplex, TwoTriangles) {
  const auto c = gen({{"1", "2", "3"}, {"2", "3", "4"}});
  EXPECT_EQ(c.size(), 11U);
  EXPECT_EQ(f_vector(c).counts, (std::vector<std::int64_t>{4, 5, 2}));
  EXPECT_EQ(euler_characteristic(c), 1);
  EXPECT_EQ(fermi_characteristic(c), -1);
  EXPECT_EQ(strings(c), (std::vector<std::string>{"(1)", "(2)", "(3)", "(4)", "(1,2)", "(1,3)", "(2,3)",
                                                  "(2,4)", "(3,4)", "(1,2,3)", "(2,3,4)"}));
  expect_closed(c);
}

TEST(GenerateComplex, TriangleBoundaryAndSingleton) {
  const auto c3 = gen({{"1", "2"}, {"2", "3"}, {"3", "1"}});
  EXPECT_EQ(f_vector(c3).counts, (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(euler_characteristic(c3), 0);
  EXPECT_EQ(fermi_characteristic(c3), -1);
  EXPECT_EQ(strings(c3), (std::vector<std::string>{"(1)", "(2)", "(3)", "(1,2)", "(1,3)", "(2,3)"}));
  const auto pt = gen({{"7"}});
  EXPECT_EQ(f_vector(pt).counts, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(fermi_characteristic(pt), 1);
}

TEST(GenerateComplex, RejectsEmptyMember) {
  EXPECT_THROW(gen({{"1"}, {}}), std::invalid_argument);
}

TEST(GenerateComplex, MatchesSubsetOracle) {
  const std::vector<oracle::Set> facets = {{1, 3, 6}, {1, 4, 5}, {2, 5}, {4, 5, 6, 7}};
  std::vector<std::vector<std::string>> labels;
  for (const auto& f : facets) {
    std::vector<std::string> l;
    for (int v : f) l.push_back(std::to_string(v));
    labels.push_back(l);
  }
  const auto c = gen(labels);
  const auto expected = oracle::canonical(oracle::closure(facets));
  EXPECT_EQ(support::sets(c), expected);
  EXPECT_EQ(f_vector(c).counts, oracle::f_vector(oracle::closure(facets)));
}

TEST(FromSimplices, RejectsNonClosedInput) {
  EXPECT_THROW(SimplicialComplex::from_simplices({Simplex({"1", "2"}), Simplex({"1"})}), std::invalid_argument);
  EXPECT_NO_THROW(SimplicialComplex::from_simplices({Simplex({"1", "2"}), Simplex({"1"}), Simplex({"2"})}));
}

TEST(Whitney, Examples) {
  EXPECT_EQ(f_vector(whitney_complex(diamond_graph())).counts, (std::vector<std::int64_t>{4, 5, 2}));
  EXPECT_EQ(whitney_complex(diamond_graph()), diamond_complex());
  EXPECT_EQ(f_vector(whitney_complex(complete_graph(3))).counts, (std::vector<std::int64_t>{3, 3, 1}));
  EXPECT_EQ(f_vector(whitney_complex(empty_graph(5))).counts, (std::vector<std::int64_t>{5}));
  EXPECT_TRUE(whitney_complex(Graph{}).empty());
}

TEST(Whitney, MatchesCliqueOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(7, 0.5, seed);
    oracle::Adjacency adj(7, std::vector<bool>(7, false));
    for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = true;
    // graph vertices are labeled 1..n at indices 0..n-1
    oracle::Family shifted;
    for (auto s : oracle::cliques(adj)) {
      for (auto& v : s) ++v;
      shifted.insert(s);
    }
    EXPECT_EQ(support::sets(whitney_complex(g)), oracle::canonical(shifted)) << seed;
  }
}

TEST(Skeleton, Examples) {
  const auto k3 = whitney_complex(complete_graph(3));
  EXPECT_EQ(k_skeleton(k3, 1), cycle_complex(3));
  EXPECT_EQ(f_vector(k_skeleton(diamond_complex(), 0)).counts, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(k_skeleton(diamond_complex(), 5), diamond_complex());
  EXPECT_THROW((void)k_skeleton(k3, -1), std::invalid_argument);
}

TEST(Matroid, KiteFVector) {
  const auto m = graphic_matroid(kite_graph());
  EXPECT_EQ(f_vector(m).counts, (std::vector<std::int64_t>{5, 10, 8}));
  EXPECT_EQ(euler_characteristic(m), 3);
  EXPECT_EQ(m.size(), 23U);
}

TEST(Matroid, SmallCases) {
  Graph edge({"1", "2"});
  edge.add_edge("1", "2");
  EXPECT_EQ(f_vector(graphic_matroid(edge)).counts, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(f_vector(graphic_matroid(complete_graph(3))).counts, (std::vector<std::int64_t>{3, 3}));
}

TEST(Matroid, MatchesForestOracle) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = random_graph(6, 0.5, seed);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    const auto forests = oracle::forests(6, edges);
    const auto m = graphic_matroid(g);
    EXPECT_EQ(m.size(), forests.size()) << seed;
    std::vector<std::int64_t> counts;
    for (const auto& f : forests) {
      if (counts.size() < f.size()) counts.resize(f.size(), 0);
      ++counts[f.size() - 1];
    }
    EXPECT_EQ(f_vector(m).counts, counts) << seed;
  }
}

TEST(Independence, Examples) {
  EXPECT_EQ(f_vector(independence_complex(empty_graph(3))).counts, (std::vector<std::int64_t>{3, 3, 1}));
  EXPECT_EQ(f_vector(independence_complex(complete_graph(3))).counts, (std::vector<std::int64_t>{3}));
  Graph path({"a", "b", "c"});
  path.add_edge("a", "b");
  path.add_edge("b", "c");
  const auto c = independence_complex(path);
  EXPECT_EQ(strings(c), (std::vector<std::string>{"(a)", "(b)", "(c)", "(a,c)"}));
}

TEST(Functionals, EmptyComplex) {
  const SimplicialComplex e;
  EXPECT_TRUE(f_vector(e).counts.empty());
  EXPECT_EQ(euler_characteristic(e), 0);
  EXPECT_EQ(fermi_characteristic(e), 1);
  EXPECT_EQ(genus(e), 1);
  EXPECT_EQ(f_function(e), IntPolynomial{1});
  EXPECT_EQ(e.dimension(), -1);
}

TEST(Functionals, FFunction) {
  const auto f = f_function(diamond_complex());
  EXPECT_EQ(f, (IntPolynomial{1, 4, 5, 2}));
  EXPECT_EQ(f.to_string(), "1 + 4t + 5t^2 + 2t^3");
  EXPECT_EQ(f.evaluate(-1), 0);
  EXPECT_EQ(1 - f.evaluate(-1), euler_characteristic(diamond_complex()));
}

TEST(Functionals, Genus) {
  EXPECT_EQ(genus(complete_complex(4)), 0);
  EXPECT_EQ(genus(cycle_complex(3)), 1);
}

TEST(Functionals, FermiIsParityOfOddCount) {
  for (const auto& nc : named_complexes()) {
    const auto fv = f_vector(nc.complex);
    EXPECT_EQ(fermi_characteristic(nc.complex), fv.odd() % 2 == 0 ? 1 : -1) << nc.name;
    EXPECT_EQ(euler_characteristic(nc.complex), fv.even() - fv.odd()) << nc.name;
  }
}

TEST(Join, Examples) {
  const auto p2 = gen({{"1"}, {"2"}});
  const auto c4 = zykov_join(p2, p2);
  EXPECT_EQ(f_vector(c4).counts, (std::vector<std::int64_t>{4, 4}));
  const auto oct = zykov_join(p2, cycle_complex(4));
  EXPECT_EQ(f_vector(oct).counts, (std::vector<std::int64_t>{6, 12, 8}));
  const auto j = zykov_join(diamond_complex(), SimplicialComplex{});
  EXPECT_EQ(j.relabeled([](const Label& l) { return strip_tag(l); }), diamond_complex());
}

TEST(Join, GenusAndFFunctionMultiply) {
  const auto pool = named_complexes();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t k = i; k < 8; ++k) {
      const auto& a = pool[i].complex;
      const auto& b = pool[k].complex;
      const auto j = zykov_join(a, b);
      EXPECT_EQ(genus(j), genus(a) * genus(b)) << pool[i].name << " + " << pool[k].name;
      EXPECT_EQ(f_function(j), f_function(a) * f_function(b));
      expect_closed(j);
    }
  }
}

TEST(Union, Additivity) {
  const auto d = diamond_complex();
  const auto c3 = cycle_complex(3);
  const auto u = disjoint_union(d, c3);
  EXPECT_EQ(euler_characteristic(u), 1);
  EXPECT_EQ(fermi_characteristic(u), fermi_characteristic(d) * fermi_characteristic(c3));
  EXPECT_EQ(u.size(), d.size() + c3.size());
  const auto two = disjoint_union(gen({{"1"}}), gen({{"1"}}));
  EXPECT_EQ(f_vector(two).counts, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(euler_characteristic(two), 2);
  EXPECT_EQ(disjoint_union(d, SimplicialComplex{}).relabeled([](const Label& l) { return strip_tag(l); }), d);
}

TEST(Families, Sizes) {
  EXPECT_EQ(f_vector(simplex_complex(1)).counts, (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(f_vector(octahedron_complex()).counts, (std::vector<std::int64_t>{6, 12, 8}));
  EXPECT_EQ(f_vector(wheel_complex(4)).counts, (std::vector<std::int64_t>{5, 8, 4}));
  EXPECT_EQ(f_vector(complete_complex(4)).counts, (std::vector<std::int64_t>{4, 6, 4, 1}));
  EXPECT_THROW((void)cycle_complex(2), std::invalid_argument);
  EXPECT_EQ(random_graph(8, 0.5, 3).edges(), random_graph(8, 0.5, 3).edges());
}

TEST(Graph, BasicsAndErrors) {
  Graph g({"a", "b", "c"});
  g.add_edge("a", "b");
  g.add_edge("a", "b");
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_THROW(g.add_edge("a", "a"), std::invalid_argument);
  EXPECT_THROW(g.add_vertex("a"), std::invalid_argument);
  EXPECT_EQ(g.degree(0), 1U);
  EXPECT_EQ(g.complement().edge_count(), 2U);
  EXPECT_EQ(whitney_euler_characteristic(g), 2);
}
