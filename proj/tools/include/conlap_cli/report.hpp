#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conlap/complex.hpp"
#include "json.hpp"

namespace conlap::cli {

struct SimplexRow {
  std::string simplex;
  int parity_sign = 1;
  mpz_class green_diagonal;  // g(x,x)
  mpz_class potential;       // row sum of g
  std::int64_t curvature = 0;

  friend bool operator==(const SimplexRow&, const SimplexRow&) = default;
};

struct Report {
  std::size_t n = 0;
  std::vector<std::int64_t> f_vector;
  int dimension = -1;
  std::int64_t euler = 0;
  int fermi = 1;
  mpz_class determinant = 1;
  mpz_class energy = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::int64_t wu = 0;
  std::vector<SimplexRow> rows;

  // euler = p - n = energy = b - f
  [[nodiscard]] bool consistent() const;
  friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr std::size_t kDefaultMaxSimplices = 400;

// Throws std::length_error when c has more than max_n simplices.
[[nodiscard]] Report build_report(const SimplicialComplex& c,
                                  std::size_t max_n = kDefaultMaxSimplices);

[[nodiscard]] std::string format_report(const Report& r);
// Big integers are stored as decimal strings.
[[nodiscard]] nlohmann::ordered_json report_to_json(const Report& r);
[[nodiscard]] Report report_from_json(const nlohmann::json& j);

}  // namespace conlap::cli
