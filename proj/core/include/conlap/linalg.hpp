#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "conlap/polynomial.hpp"

namespace conlap {

// Thrown when a brute-force routine is asked to work beyond its size guard.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  [[nodiscard]] static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool is_symmetric() const;

  mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  [[nodiscard]] const std::vector<mpz_class>& entries() const noexcept { return entries_; }

  [[nodiscard]] IntMatrix transpose() const;
  // Sum of all entries.
  [[nodiscard]] mpz_class sum() const;
  // Matrix with rows and columns reordered: result(i, j) = (*this)(perm[i], perm[j]).
  [[nodiscard]] IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // Text form: "rows cols" on the first line, then one line per row of
  // space-separated decimal integers.
  [[nodiscard]] std::string to_text() const;
  // Parses to_text() output. Throws std::invalid_argument on malformed input.
  [[nodiscard]] static IntMatrix from_text(const std::string& text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
[[nodiscard]] mpz_class determinant(const IntMatrix& m);

// Exact inverse of a matrix with determinant +1 or -1. Throws
// std::domain_error when |det| != 1.
[[nodiscard]] IntMatrix inverse_unimodular(const IntMatrix& m);

// det(t I - m) by the Faddeev-LeVerrier recursion, exact over the integers.
[[nodiscard]] IntPolynomial characteristic_polynomial(const IntMatrix& m);

// Inertia counted with Descartes' rule of signs on a characteristic
// polynomial whose roots are known to be real.
[[nodiscard]] Inertia inertia_from_characteristic_polynomial(const IntPolynomial& p);

// Leading-minor (Jacobi) count after a symmetric pivot order has been found
// with nonzero successive minors. Returns false if no such order exists.
bool inertia_by_pivoted_minors(const IntMatrix& m, Inertia& out);

// Exact inertia of a symmetric nonsingular matrix. Uses pivoted leading
// minors when possible and the characteristic polynomial otherwise.
// Throws std::invalid_argument for asymmetric input and std::domain_error
// for singular input.
[[nodiscard]] Inertia inertia(const IntMatrix& m);

// Kronecker product; row (i, k) maps to i * b.rows() + k.
[[nodiscard]] IntMatrix tensor_product(const IntMatrix& a, const IntMatrix& b);
// Block-diagonal matrix diag(a, b).
[[nodiscard]] IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

inline constexpr std::size_t kPermanentGuard = 14;
// Ryser's formula. Throws GuardExceeded above kPermanentGuard.
[[nodiscard]] mpz_class permanent(const IntMatrix& m);

inline constexpr std::size_t kPermutationGuard = 9;
// Literal sum over all permutations of sign * product. Throws GuardExceeded
// above kPermutationGuard.
[[nodiscard]] mpz_class permutation_expansion_determinant(const IntMatrix& m);
// Path-sum form of det(1 + A) for an adjacency matrix A: the permutation
// expansion of 1 + A, each permutation a set of oriented cyclic paths.
[[nodiscard]] mpz_class fredholm_path_oracle(const IntMatrix& adjacency);

// Eigenvalues of a symmetric matrix in ascending order, in double precision.
[[nodiscard]] std::vector<double> numeric_spectrum(const IntMatrix& m);

}  // namespace conlap
