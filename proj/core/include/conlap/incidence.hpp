#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conlap/bitset.hpp"
#include "conlap/complex.hpp"
#include "conlap/graph.hpp"
#include "conlap/linalg.hpp"

namespace conlap {

// Rational-valued function on the simplices of a complex, indexed in the
// complex's canonical order.
class SimplexFunction {
 public:
  explicit SimplexFunction(std::vector<mpq_class> values) : values_(std::move(values)) {}

  // f(x) = dim(x)
  [[nodiscard]] static SimplexFunction dimension(const SimplicialComplex& c);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const mpq_class& operator()(std::size_t i) const { return values_.at(i); }
  [[nodiscard]] const std::vector<mpq_class>& values() const noexcept { return values_; }
  [[nodiscard]] SimplexFunction negated() const;

  // No two simplices related by proper containment share a value.
  [[nodiscard]] bool is_locally_injective(const SimplicialComplex& c) const;

 private:
  std::vector<mpq_class> values_;
};

// Containment graph G1: vertices are the simplices (canonical order, labeled
// by Simplex::to_string), edges join x and y when one properly contains the other.
[[nodiscard]] Graph barycentric_graph(const SimplicialComplex& c);
[[nodiscard]] SimplicialComplex barycentric_refinement(const SimplicialComplex& c);

// (d+1)x(d+1) matrix with entry (i, j) = i! S(j, i) for cardinalities
// i, j = 1..d+1 (Stirling numbers of the second kind). Maps the f-vector of
// a complex of dimension <= d to the f-vector of its refinement.
[[nodiscard]] IntMatrix stirling_refinement_operator(int d);
// stirling_refinement_operator(d) applied to f, with d = dim of f.
[[nodiscard]] FVector refine_f_vector(const FVector& f);

// G': vertices are the simplices, edges join distinct intersecting simplices.
[[nodiscard]] Graph connection_graph(const SimplicialComplex& c);
// L = 1 + A(G'), in canonical simplex order.
[[nodiscard]] IntMatrix connection_matrix(const SimplicialComplex& c);
// A(G'), the adjacency matrix of the connection graph.
[[nodiscard]] IntMatrix connection_adjacency(const SimplicialComplex& c);

// Precomputed containment relation of one complex, for repeated sphere
// queries. Indices refer to the complex's canonical order. The complex
// must outlive the index.
class IncidenceIndex {
 public:
  explicit IncidenceIndex(const SimplicialComplex& c);

  [[nodiscard]] const SimplicialComplex& complex() const noexcept { return *complex_; }
  [[nodiscard]] const Graph& barycentric() const noexcept { return refined_; }

  // Members of S(x): simplices properly contained in or properly containing x.
  [[nodiscard]] Bitset sphere(std::size_t x) const;
  // Members of S(x) below x (the boundary of x).
  [[nodiscard]] Bitset lower_sphere(std::size_t x) const;
  // Members of S(x) above x.
  [[nodiscard]] Bitset upper_sphere(std::size_t x) const;

  // Euler characteristic of the Whitney complex of G1 restricted to `members`.
  [[nodiscard]] std::int64_t euler_characteristic(const Bitset& members) const;

 private:
  const SimplicialComplex* complex_;
  Graph refined_;
};

// Whitney complex of the G1-subgraph induced on the given members.
[[nodiscard]] SimplicialComplex sphere_complex(const IncidenceIndex& index, const Bitset& members);

// S(x) as a complex; labels are the member simplices' strings. Throws
// std::invalid_argument when x is not in c.
[[nodiscard]] SimplicialComplex unit_sphere(const SimplicialComplex& c, const Simplex& x);
// S_f^-(x): members y of S(x) with f(y) < f(x). Throws std::invalid_argument
// when f is not locally injective.
[[nodiscard]] SimplicialComplex stable_sphere(const SimplicialComplex& c, const Simplex& x,
                                              const SimplexFunction& f);
// S_f^+(x): members y of S(x) with f(y) > f(x).
[[nodiscard]] SimplicialComplex unstable_sphere(const SimplicialComplex& c, const Simplex& x,
                                                const SimplexFunction& f);

// W+(x) = {y in c : x subset of y}, including x. Not a complex in general.
[[nodiscard]] std::vector<Simplex> star(const SimplicialComplex& c, const Simplex& x);
// W-(x) = {y : y subset of x}, the complete complex on x.
[[nodiscard]] SimplicialComplex core(const SimplicialComplex& c, const Simplex& x);

// Degree of x in the connection graph.
[[nodiscard]] std::size_t connection_ball_degree(const SimplicialComplex& c, const Simplex& x);

}  // namespace conlap
