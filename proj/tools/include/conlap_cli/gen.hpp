#pragma once

#include <string>
#include <vector>

#include "conlap/complex.hpp"

namespace conlap::cli {

// Builds a named family from string parameters. Throws std::invalid_argument
// for unknown families or bad parameters.
[[nodiscard]] SimplicialComplex generate_family(const std::string& family,
                                                const std::vector<std::string>& params);

[[nodiscard]] std::vector<std::string> family_names();

}  // namespace conlap::cli
