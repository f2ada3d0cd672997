#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"
#include "conlap/incidence.hpp"
#include "conlap/polynomial.hpp"

namespace conlap {

// Function on graph vertices, indexed like Graph::labels().
using VertexFunction = std::vector<mpq_class>;

[[nodiscard]] bool is_locally_injective(const Graph& g, const VertexFunction& f);

// A uniformly random injective function (a shuffled 0..n-1), deterministic in seed.
[[nodiscard]] VertexFunction random_injective_function(std::size_t n, std::uint64_t seed);

// i_f(v) = 1 - euler(S_f^-(v)), with S_f^-(v) the neighbors of v where f is smaller.
// Throws std::invalid_argument when f is not locally injective.
[[nodiscard]] std::int64_t ph_index(const Graph& g, const VertexFunction& f, std::size_t v);
[[nodiscard]] std::vector<std::int64_t> ph_indices(const Graph& g, const VertexFunction& f);
[[nodiscard]] std::int64_t ph_sum(const Graph& g, const VertexFunction& f);

// 1 - V_0/2 + V_1/3 - V_2/4 + ..., V_k counting k-simplices of the unit sphere.
[[nodiscard]] mpq_class levitt_curvature(const Graph& g, std::size_t v);
[[nodiscard]] std::vector<mpq_class> levitt_curvatures(const Graph& g);

// k(x) = sign(x) (1 - euler(S(x)))
[[nodiscard]] std::int64_t sphere_curvature(const SimplicialComplex& c, const Simplex& x);
[[nodiscard]] std::int64_t sphere_curvature(const IncidenceIndex& index, std::size_t x);

inline constexpr std::size_t kExhaustiveOrderLimit = 8;

// Average of i_f(v) over vertex orders. Graphs with at most
// kExhaustiveOrderLimit vertices are averaged over all n! orders exactly and
// `trials` is ignored; larger graphs use `trials` seeded uniform orders.
[[nodiscard]] std::vector<mpq_class> index_expectation(const Graph& g, std::size_t trials,
                                                       std::uint64_t seed);

struct DualIndex {
  std::int64_t stable = 0;    // i_f = 1 - euler(S^-)
  std::int64_t unstable = 0;  // i_{-f} = 1 - euler(S^+)
  std::int64_t full = 0;      // i = 1 - euler(S)
  [[nodiscard]] bool holds() const noexcept { return stable * unstable == full; }
};

// The three indices at x for f = dim, each from its own sphere. Throws
// std::invalid_argument for any other f.
[[nodiscard]] DualIndex dual_index_check(const SimplicialComplex& c, const SimplexFunction& f,
                                         const Simplex& x);

struct BuildStep {
  Simplex simplex;
  std::int64_t factor;    // 1 - euler(boundary of the added simplex)
  mpz_class determinant;  // det of the connection matrix after the step
  bool holds;             // determinant = previous determinant * factor
};

// Adds the simplices of c one at a time in canonical order and records the
// determinant of each intermediate connection matrix. Determinants come
// from Schur complements of the growing matrix (falling back to direct
// elimination if a complement is not +-1).
[[nodiscard]] std::vector<BuildStep> multiplicative_ph_trace(const SimplicialComplex& c);

// Both sides of f_G(t) = 1 + t sum_v f_{S^-(v)}(t) for the Whitney complex of g.
[[nodiscard]] std::pair<IntPolynomial, IntPolynomial> parametrized_ph_sides(const Graph& g,
                                                                           const VertexFunction& f);
[[nodiscard]] bool parametrized_ph_check(const Graph& g, const VertexFunction& f);

}  // namespace conlap
