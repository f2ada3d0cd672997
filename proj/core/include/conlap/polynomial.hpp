#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace conlap {

// Dense integer polynomial, coefficients lowest degree first. Trailing zero
// coefficients are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  [[nodiscard]] static IntPolynomial constant(const mpz_class& c);
  // The monomial t^k.
  [[nodiscard]] static IntPolynomial monomial(std::size_t k);

  [[nodiscard]] const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  // Coefficient of t^k (zero beyond the degree).
  [[nodiscard]] mpz_class coefficient(std::size_t k) const;
  // -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

  [[nodiscard]] mpz_class evaluate(const mpz_class& t) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form such as "1 + 4t + 5t^2 + 2t^3".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace conlap
