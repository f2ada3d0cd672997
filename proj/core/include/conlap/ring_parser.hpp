#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conlap/ring.hpp"

namespace conlap {

class RingSyntaxError : public std::runtime_error {
 public:
  RingSyntaxError(std::size_t column, const std::string& message)
      : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Evaluates statements like `X = gen({1,2},{2,3}); Y = cycle(4); X * Y + 2`,
// where `*` is the Cartesian product, `+`/`-` the disjoint sum, and an integer
// n stands for n copies of a point. The value of the last statement is returned.
//
// Builtins: gen({..},..), point(), empty(), simplex(n), complete(n), cycle(n),
// path(n), wheel(n), diamond(), octahedron(), file("facets.txt").
// Relative file paths resolve against base_dir.
[[nodiscard]] RingExpr evaluate_ring_program(std::string_view source,
                                             const std::filesystem::path& base_dir = {});

}  // namespace conlap
