#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conlap/graph.hpp"

namespace conlap {

inline constexpr std::size_t kHomotopyGuard = 12;

struct HomotopyVerdict {
  bool contractible = false;
  std::optional<int> sphere_dimension;
  // Contractible: vertices removed in order, each with a contractible unit
  // sphere, ending at the last remaining vertex. Sphere: every vertex, each
  // of whose removal leaves a contractible graph. Otherwise empty.
  std::vector<Label> certificate;

  [[nodiscard]] bool is_sphere() const noexcept { return sphere_dimension.has_value(); }
};

// Full classification of the Whitney complex of g. Throws GuardExceeded
// above kHomotopyGuard vertices.
[[nodiscard]] HomotopyVerdict classify(const Graph& g);
[[nodiscard]] HomotopyVerdict is_contractible(const Graph& g);
[[nodiscard]] HomotopyVerdict is_sphere(const Graph& g);

// Re-checks a verdict step by step against g.
[[nodiscard]] bool replay_certificate(const Graph& g, const HomotopyVerdict& v);

struct PoolGraph {
  std::string name;
  Graph graph;
  bool ball = false;  // caller asserts this member is a ball
};

struct JoinCheck {
  std::string left;
  std::string right;
  std::string expectation;
  bool passed = false;
};

struct JoinClosureReport {
  std::vector<JoinCheck> checks;
  std::vector<std::string> skipped;
  [[nodiscard]] bool passed() const;
};

// For every ordered pair of the pool whose join fits the guard: contractible
// + anything is contractible, a d-sphere + an e-sphere is a (d+e+1)-sphere,
// a sphere + a ball is contractible and not a sphere.
[[nodiscard]] JoinClosureReport join_closure_check(const std::vector<PoolGraph>& pool);

}  // namespace conlap
