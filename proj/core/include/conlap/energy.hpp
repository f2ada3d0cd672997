#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "conlap/complex.hpp"
#include "conlap/linalg.hpp"

namespace conlap {

// The exact inverse g = L^-1 of a nonempty complex's connection matrix.
class GreenMatrix {
 public:
  // Throws std::invalid_argument for the empty complex.
  explicit GreenMatrix(SimplicialComplex c);

  [[nodiscard]] const SimplicialComplex& base() const noexcept { return base_; }
  [[nodiscard]] const IntMatrix& matrix() const noexcept { return g_; }
  [[nodiscard]] const mpz_class& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
  [[nodiscard]] std::size_t size() const noexcept { return g_.rows(); }

 private:
  SimplicialComplex base_;
  IntMatrix g_;
};

[[nodiscard]] GreenMatrix green_matrix(const SimplicialComplex& c);

// Sum of all Green function entries; 0 for the empty complex.
[[nodiscard]] mpz_class total_energy(const SimplicialComplex& c);
[[nodiscard]] mpz_class total_energy(const GreenMatrix& g);

// V(x), the row sum of g at x.
[[nodiscard]] mpz_class potential(const GreenMatrix& g, const Simplex& x);
[[nodiscard]] mpz_class potential(const SimplicialComplex& c, const Simplex& x);

// sign(x) sign(y) euler(W+(x) cap W+(y)), evaluated combinatorially.
[[nodiscard]] std::int64_t green_star_entry(const SimplicialComplex& c, const Simplex& x,
                                            const Simplex& y);
// Index form of green_star_entry.
[[nodiscard]] std::int64_t green_star_entry(const SimplicialComplex& c, std::size_t x, std::size_t y);

// sum over x of sign(x) g(x, x)
[[nodiscard]] mpz_class super_trace_inverse(const GreenMatrix& g);
[[nodiscard]] mpz_class super_trace_inverse(const SimplicialComplex& c);

// Sum of sign(x) sign(y) over ordered intersecting pairs, x = y included.
[[nodiscard]] std::int64_t wu_characteristic(const SimplicialComplex& c);

// The bordered matrix K(t) for a facet x: the connection matrix of c
// without x, followed by a last row and column for x whose off-diagonal
// entries are scaled by t. The corner stays 1.
[[nodiscard]] IntMatrix extension_matrix(const SimplicialComplex& c, const Simplex& x, long t);

// det K(t) = alpha - beta t^2 recovered from evaluations at t = 0, 1, 2.
struct ExtensionProfile {
  mpz_class det_at_0;
  mpz_class det_at_1;
  mpz_class det_at_2;
  mpz_class alpha;      // det L of c without x
  mpz_class beta;
  mpz_class glue_euler;   // beta / alpha, the Euler characteristic of the glue
  bool quadratic_fit = false;   // det K(2) = alpha - 4 beta
  bool matches_full = false;    // det K(1) = det L(c)
};

// Throws std::invalid_argument unless x is a facet of c.
[[nodiscard]] ExtensionProfile extension_determinant_profile(const SimplicialComplex& c,
                                                             const Simplex& x);

}  // namespace conlap
