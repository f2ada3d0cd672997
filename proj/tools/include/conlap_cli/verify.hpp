#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "conlap/fixtures.hpp"

namespace conlap::cli {

struct Pool {
  std::vector<NamedComplex> complexes;
  std::vector<NamedGraph> graphs;
};

// "small" (named fixtures plus the seeded random pool), "named", or
// "file:<path>" (one facet file; its 1-skeleton serves as the graph).
// Throws std::invalid_argument for anything else.
[[nodiscard]] Pool make_pool(std::string_view spec, std::uint64_t seed);

struct CheckRecord {
  std::string suite;
  std::string subject;
  std::string detail;
  bool passed = true;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::size_t max_n = 300;  // complexes with more simplices are skipped
};

[[nodiscard]] const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws std::invalid_argument for
// an unknown suite.
[[nodiscard]] std::vector<CheckRecord> run_suite(std::string_view suite, const Pool& pool,
                                                 const VerifyOptions& options);

[[nodiscard]] std::string format_record(const CheckRecord& r);

}  // namespace conlap::cli
