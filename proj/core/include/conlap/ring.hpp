#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"
#include "conlap/linalg.hpp"

namespace conlap {

// Vertices are pairs (a, b) in lexicographic index order, labeled "a" "x" "b".
// (a,b) ~ (c,d) when each coordinate is equal or adjacent, and the pairs differ.
[[nodiscard]] Graph strong_product(const Graph& g, const Graph& h);

// Cells of a Cartesian product: tuples of simplices, first factor most
// significant in the cell index.
class ProductCellSet {
 public:
  explicit ProductCellSet(std::vector<SimplicialComplex> factors);

  [[nodiscard]] const std::vector<SimplicialComplex>& factors() const noexcept { return factors_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::vector<std::size_t> cell(std::size_t k) const;
  [[nodiscard]] int dimension(std::size_t k) const;
  [[nodiscard]] int parity_sign(std::size_t k) const;
  [[nodiscard]] std::string label(std::size_t k) const;
  [[nodiscard]] bool intersects(std::size_t k, std::size_t l) const;
  [[nodiscard]] std::int64_t euler_characteristic() const;

  [[nodiscard]] Graph connection_graph() const;
  // Built from cell intersections directly, not via tensor products.
  [[nodiscard]] IntMatrix connection_matrix() const;

 private:
  std::vector<SimplicialComplex> factors_;
  std::size_t size_;
};

[[nodiscard]] ProductCellSet product_cells(const SimplicialComplex& a, const SimplicialComplex& b);
[[nodiscard]] IntMatrix product_connection_laplacian(const SimplicialComplex& a,
                                                     const SimplicialComplex& b);

// Integer combination of products. Single-vertex factors are units and are
// dropped; a product with an empty factor is zero.
class RingExpr {
 public:
  struct Term {
    long coefficient;
    std::vector<SimplicialComplex> factors;  // sorted; empty means the unit
  };

  RingExpr() = default;
  static RingExpr integer(long n);
  static RingExpr complex(SimplicialComplex c);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::string to_string() const;

  RingExpr& operator+=(const RingExpr& o);
  RingExpr& operator-=(const RingExpr& o);
  friend RingExpr operator+(RingExpr a, const RingExpr& b) { return a += b; }
  friend RingExpr operator-(RingExpr a, const RingExpr& b) { return a -= b; }
  friend RingExpr operator-(RingExpr a);
  friend RingExpr operator*(const RingExpr& a, const RingExpr& b);

 private:
  void add_term(long coefficient, std::vector<SimplicialComplex> factors);
  std::vector<Term> terms_;
};

// sum of coefficient * product of euler
[[nodiscard]] mpz_class ring_energy(const RingExpr& e);

inline constexpr std::size_t kRingInversionGuard = 400;
// Same value from the entry sum of the exact inverse of each term's tensor
// Laplacian. Throws GuardExceeded for terms with more than
// kRingInversionGuard cells.
[[nodiscard]] mpz_class ring_energy_by_inversion(const RingExpr& e);

struct SpectrumReport {
  double product_error = 0;  // max |sigma(L(a) x L(b)) - pairwise products|
  double union_error = 0;    // max |sigma(L(a + b)) - union of spectra|
  [[nodiscard]] bool passed(double tolerance = 1e-6) const noexcept {
    return product_error <= tolerance && union_error <= tolerance;
  }
};

[[nodiscard]] SpectrumReport ring_spectrum_check(const SimplicialComplex& a,
                                                 const SimplicialComplex& b);

}  // namespace conlap
