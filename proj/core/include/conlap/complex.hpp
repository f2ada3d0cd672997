#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conlap/bitset.hpp"
#include "conlap/graph.hpp"
#include "conlap/label.hpp"
#include "conlap/polynomial.hpp"

namespace conlap {

// Nonempty finite set of vertex labels, kept sorted by label_less.
class Simplex {
 public:
  // Sorts the labels. Throws std::invalid_argument on an empty or repeated label set.
  explicit Simplex(std::vector<Label> vertices);

  [[nodiscard]] const std::vector<Label>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  // (-1)^dim
  [[nodiscard]] int parity_sign() const noexcept { return (vertices_.size() % 2 == 1) ? 1 : -1; }

  [[nodiscard]] bool is_subset_of(const Simplex& other) const;
  [[nodiscard]] bool intersects(const Simplex& other) const;

  // "(1,2,3)"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  // Canonical order: cardinality first, then lexicographic by label_less.
  friend bool operator<(const Simplex& a, const Simplex& b);

 private:
  friend class SimplicialComplex;
  struct Trusted {};
  Simplex(Trusted, std::vector<Label> sorted_vertices) : vertices_(std::move(sorted_vertices)) {}

  std::vector<Label> vertices_;
};

// Counts of simplices per dimension: counts[k] = f_k.
struct FVector {
  std::vector<std::int64_t> counts;

  [[nodiscard]] std::int64_t total() const;
  // Number of even-dimensional simplices.
  [[nodiscard]] std::int64_t even() const;
  // Number of odd-dimensional simplices.
  [[nodiscard]] std::int64_t odd() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

// Finite abstract simplicial complex: a set of simplices closed under taking
// nonempty subsets, stored in canonical order. Immutable once built.
//
// Every member also carries a bitset over the sorted vertex list.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Deduplicates and sorts; throws std::invalid_argument unless the set is
  // closed under nonempty subsets.
  [[nodiscard]] static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  [[nodiscard]] std::size_t size() const noexcept { return simplices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return simplices_.empty(); }
  [[nodiscard]] const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  [[nodiscard]] const Simplex& operator[](std::size_t i) const { return simplices_.at(i); }
  // Sorted vertex labels (the 0-simplices).
  [[nodiscard]] const std::vector<Label>& vertex_labels() const noexcept { return vertices_; }
  // Maximal dimension, -1 for the empty complex.
  [[nodiscard]] int dimension() const noexcept;

  [[nodiscard]] std::optional<std::size_t> index_of(const Simplex& x) const;
  [[nodiscard]] bool contains(const Simplex& x) const { return index_of(x).has_value(); }
  // Index of x; throws std::invalid_argument when x is not a member.
  [[nodiscard]] std::size_t require_index(const Simplex& x) const;

  [[nodiscard]] const Bitset& vertex_set(std::size_t i) const { return vsets_.at(i); }
  [[nodiscard]] bool intersects(std::size_t i, std::size_t j) const {
    return vsets_[i].intersects(vsets_[j]);
  }
  // simplex i is a (not necessarily proper) face of simplex j
  [[nodiscard]] bool is_face_of(std::size_t i, std::size_t j) const {
    return simplices_[i].size() <= simplices_[j].size() && vsets_[i].subset_of(vsets_[j]);
  }
  [[nodiscard]] int parity_sign(std::size_t i) const { return simplices_[i].parity_sign(); }

  [[nodiscard]] bool is_facet(std::size_t i) const;
  [[nodiscard]] std::vector<std::size_t> facets() const;

  // The complex minus one facet. Throws std::invalid_argument if i is not a facet.
  [[nodiscard]] SimplicialComplex without_facet(std::size_t i) const;
  // Applies fn to every vertex label; fn must be injective on the vertex set.
  [[nodiscard]] SimplicialComplex relabeled(const std::function<Label(const Label&)>& fn) const;

  // "{(1),(2),(1,2)}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

  // Builds from vertex-id sets over a sorted label list. The sets must be
  // sorted ascending, canonically ordered and closed under subsets.
  [[nodiscard]] static SimplicialComplex from_canonical_ids(
      std::vector<Label> vertices, const std::vector<std::vector<std::uint32_t>>& sets);

 private:
  std::vector<Simplex> simplices_;
  std::vector<Label> vertices_;
  std::vector<Bitset> vsets_;
};

// Euler characteristic of an arbitrary set of simplices, sum of sign.
[[nodiscard]] std::int64_t set_euler_characteristic(std::span<const Simplex> sets);

// Constructors

// All nonempty subsets of the given sets. Throws on an empty set.
[[nodiscard]] SimplicialComplex generate_complex(const std::vector<std::vector<Label>>& sets);
[[nodiscard]] SimplicialComplex generate_complex(const std::vector<Simplex>& sets);
// Clique complex of a graph.
[[nodiscard]] SimplicialComplex whitney_complex(const Graph& g);
[[nodiscard]] SimplicialComplex k_skeleton(const SimplicialComplex& c, int k);
// Nonempty forests of g; vertices are edge labels "u-v".
[[nodiscard]] SimplicialComplex graphic_matroid(const Graph& g);
[[nodiscard]] SimplicialComplex independence_complex(const Graph& g);
// The complete complex on the vertices of x (all nonempty subsets of x).
[[nodiscard]] SimplicialComplex complete_complex_on(const Simplex& x);

// Zykov join: tagged members of a and b together with all cross unions.
[[nodiscard]] SimplicialComplex zykov_join(const SimplicialComplex& a, const SimplicialComplex& b);
[[nodiscard]] SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                               const SimplicialComplex& b);

// Functionals

[[nodiscard]] FVector f_vector(const SimplicialComplex& c);
[[nodiscard]] std::int64_t euler_characteristic(const SimplicialComplex& c);
// Product of sign over all members, +1 for the empty complex.
[[nodiscard]] int fermi_characteristic(const SimplicialComplex& c);
// 1 + f_0 t + f_1 t^2 + ... + f_d t^(d+1)
[[nodiscard]] IntPolynomial f_function(const SimplicialComplex& c);
[[nodiscard]] IntPolynomial f_function(const FVector& f);
// 1 - euler
[[nodiscard]] std::int64_t genus(const SimplicialComplex& c);

}  // namespace conlap
