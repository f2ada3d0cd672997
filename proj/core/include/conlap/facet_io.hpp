#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"

namespace conlap {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// One facet per line, vertices separated by commas; '#' starts a comment and
// blank lines are skipped. Lines need not be maximal: the complex generated
// by all listed sets is returned.
[[nodiscard]] SimplicialComplex parse_facets(std::string_view text);
[[nodiscard]] SimplicialComplex read_facet_file(const std::filesystem::path& path);
// Facets in canonical order, one per line.
[[nodiscard]] std::string format_facets(const SimplicialComplex& c);
void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& c);

// "u,v" lines are edges, single-label lines are vertices.
[[nodiscard]] Graph parse_graph(std::string_view text);
[[nodiscard]] Graph read_graph_file(const std::filesystem::path& path);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace conlap
