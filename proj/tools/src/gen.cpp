#include "conlap_cli/gen.hpp"

#include <charconv>
#include <stdexcept>

#include "conlap/facet_io.hpp"
#include "conlap/families.hpp"

namespace conlap::cli {
namespace {

template <typename T>
T parse_number(const std::string& s, const char* what) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  }
  return value;
}

void expect_count(const std::string& family, const std::vector<std::string>& params, std::size_t n) {
  if (params.size() != n) {
    throw std::invalid_argument(family + " takes " + std::to_string(n) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

int size_param(const std::string& s, int low, int high) {
  const int n = parse_number<int>(s, "size");
  if (n < low || n > high) {
    throw std::invalid_argument("size " + s + " outside " + std::to_string(low) + ".." +
                                std::to_string(high));
  }
  return n;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"simplex", "cycle", "complete", "diamond", "wheel", "octahedron", "path", "random", "matroid-of"};
}

SimplicialComplex generate_family(const std::string& family, const std::vector<std::string>& params) {
  if (family == "simplex") {
    expect_count(family, params, 1);
    return simplex_complex(size_param(params[0], 0, 20));
  }
  if (family == "cycle") {
    expect_count(family, params, 1);
    return cycle_complex(size_param(params[0], 3, 100000));
  }
  if (family == "complete") {
    expect_count(family, params, 1);
    return complete_complex(size_param(params[0], 1, 20));
  }
  if (family == "path") {
    expect_count(family, params, 1);
    return path_complex(size_param(params[0], 1, 100000));
  }
  if (family == "wheel") {
    expect_count(family, params, 1);
    return wheel_complex(size_param(params[0], 3, 100000));
  }
  if (family == "diamond") {
    expect_count(family, params, 0);
    return diamond_complex();
  }
  if (family == "octahedron") {
    expect_count(family, params, 0);
    return octahedron_complex();
  }
  if (family == "random") {
    expect_count(family, params, 3);
    const int n = size_param(params[0], 0, 64);
    const double p = parse_number<double>(params[1], "probability");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
    const auto seed = parse_number<std::uint64_t>(params[2], "seed");
    return random_whitney_complex(n, p, seed);
  }
  if (family == "matroid-of") {
    expect_count(family, params, 1);
    return graphic_matroid(read_graph_file(params[0]));
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace conlap::cli
