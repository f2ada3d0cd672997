#include "conlap/morse.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "conlap/linalg.hpp"

namespace conlap {
namespace {

void require_injective(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("vertex function size does not match the graph");
  }
  if (!is_locally_injective(g, f)) {
    throw std::invalid_argument("vertex function is not locally injective");
  }
}

Bitset lower_neighbors(const Graph& g, const VertexFunction& f, std::size_t v) {
  Bitset lower(g.size());
  g.neighborhood(v).for_each([&](std::size_t w) {
    if (f[w] < f[v]) lower.set(w);
  });
  return lower;
}

// Uniform index in [0, bound) from raw engine output by rejection.
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = engine();
  while (r >= limit) r = engine();
  return r % bound;
}

void shuffle_with(std::vector<std::size_t>& v, std::mt19937_64& engine) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(draw_below(engine, i));
    std::swap(v[i - 1], v[j]);
  }
}

// euler of the Whitney complex on a vertex subset of a graph with <= 64 vertices.
std::int64_t small_clique_euler(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                              int sign) {
  std::int64_t euler_char = 0;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    euler_char += sign + small_clique_euler(adj, candidates & adj[static_cast<std::size_t>(v)], -sign);
  }
  return euler_char;
}

}  // namespace

bool is_locally_injective(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.size()) return false;
  for (auto [a, b] : g.edges()) {
    if (f[a] == f[b]) return false;
  }
  return true;
}

VertexFunction random_injective_function(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 engine(seed);
  shuffle_with(order, engine);
  VertexFunction f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<unsigned long>(order[i]);
  return f;
}

std::int64_t ph_index(const Graph& g, const VertexFunction& f, std::size_t v) {
  require_injective(g, f);
  return 1 - whitney_euler_characteristic(g, lower_neighbors(g, f, v));
}

std::vector<std::int64_t> ph_indices(const Graph& g, const VertexFunction& f) {
  require_injective(g, f);
  std::vector<std::int64_t> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    out[v] = 1 - whitney_euler_characteristic(g, lower_neighbors(g, f, v));
  }
  return out;
}

std::int64_t ph_sum(const Graph& g, const VertexFunction& f) {
  const auto idx = ph_indices(g, f);
  return std::accumulate(idx.begin(), idx.end(), std::int64_t{0});
}

mpq_class levitt_curvature(const Graph& g, std::size_t v) {
  const auto counts = clique_counts(g, g.neighborhood(v));
  mpq_class k = 1;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    mpq_class term(static_cast<long>(counts[d]), static_cast<unsigned long>(d + 2));
    term.canonicalize();
    if (d % 2 == 0) {
      k -= term;
    } else {
      k += term;
    }
  }
  return k;
}

std::vector<mpq_class> levitt_curvatures(const Graph& g) {
  std::vector<mpq_class> out;
  out.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out.push_back(levitt_curvature(g, v));
  return out;
}

std::int64_t sphere_curvature(const IncidenceIndex& index, std::size_t x) {
  return index.complex().parity_sign(x) * (1 - index.euler_characteristic(index.sphere(x)));
}

std::int64_t sphere_curvature(const SimplicialComplex& c, const Simplex& x) {
  const std::size_t xi = c.require_index(x);
  const IncidenceIndex index(c);
  return sphere_curvature(index, xi);
}

std::vector<mpq_class> index_expectation(const Graph& g, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = g.size();
  std::vector<mpq_class> out(n, 0);
  if (n == 0) return out;

  if (n <= kExhaustiveOrderLimit) {
    // Euler characteristic of every vertex subset, tabulated once.
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [a, b] : g.edges()) {
      adj[a] |= std::uint64_t{1} << b;
      adj[b] |= std::uint64_t{1} << a;
    }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::int64_t> euler_char(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) euler_char[mask] = small_clique_euler(adj, mask, 1);

    std::vector<std::size_t> order(n);  // order[k] = vertex at position k
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::int64_t> totals(n, 0);
    std::int64_t count = 0;
    do {
      std::uint64_t seen = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t v = order[k];
        totals[v] += 1 - euler_char[adj[v] & seen];
        seen |= std::uint64_t{1} << v;
      }
      ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    for (std::size_t v = 0; v < n; ++v) {
      out[v] = mpq_class(static_cast<long>(totals[v]), static_cast<unsigned long>(count));
      out[v].canonicalize();
    }
    return out;
  }

  if (trials == 0) throw std::invalid_argument("index expectation needs at least one trial");
  std::mt19937_64 engine(seed);
  std::vector<std::size_t> order(n);
  std::vector<std::int64_t> totals(n, 0);
  VertexFunction f(n);
  for (std::size_t t = 0; t < trials; ++t) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle_with(order, engine);
    for (std::size_t k = 0; k < n; ++k) f[order[k]] = static_cast<unsigned long>(k);
    const auto idx = ph_indices(g, f);
    for (std::size_t v = 0; v < n; ++v) totals[v] += idx[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = mpq_class(static_cast<long>(totals[v]), static_cast<unsigned long>(trials));
    out[v].canonicalize();
  }
  return out;
}

DualIndex dual_index_check(const SimplicialComplex& c, const SimplexFunction& f, const Simplex& x) {
  const std::size_t xi = c.require_index(x);
  if (f.values() != SimplexFunction::dimension(c).values()) {
    throw std::invalid_argument("dual index check is only supported for f = dim");
  }
  const SimplexFunction dim = SimplexFunction::dimension(c);
  DualIndex d;
  d.stable = 1 - euler_characteristic(stable_sphere(c, x, dim));
  d.unstable = 1 - euler_characteristic(unstable_sphere(c, x, dim));
  const IncidenceIndex index(c);
  d.full = 1 - euler_characteristic(sphere_complex(index, index.sphere(xi)));
  return d;
}

std::vector<BuildStep> multiplicative_ph_trace(const SimplicialComplex& c) {
  const std::size_t n = c.size();
  std::vector<BuildStep> steps;
  steps.reserve(n);
  // inverse of the current connection matrix, valid while `tracking` holds
  std::vector<std::vector<mpz_class>> inv;
  bool tracking = true;
  mpz_class det = 1;
  mpz_class s;
  std::vector<mpz_class> u;

  for (std::size_t k = 0; k < n; ++k) {
    const Simplex& x = c[k];
    std::int64_t factor = 1;
    if (x.size() > 1) {
      std::vector<std::vector<Label>> faces;
      for (std::size_t drop = 0; drop < x.size(); ++drop) {
        std::vector<Label> face;
        for (std::size_t b = 0; b < x.size(); ++b) {
          if (b != drop) face.push_back(x.vertices()[b]);
        }
        faces.push_back(std::move(face));
      }
      factor = 1 - euler_characteristic(generate_complex(faces));
    }

    std::vector<std::size_t> touching;
    for (std::size_t y = 0; y < k; ++y) {
      if (c.intersects(y, k)) touching.push_back(y);
    }

    mpz_class next_det;
    if (tracking) {
      // u = g b, s = 1 - b^T g b
      u.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (auto y : touching) u[i] += inv[i][y];
      }
      s = 1;
      for (auto y : touching) s -= u[y];
      next_det = det * s;
      if (s == 1 || s == -1) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            if (u[i] != 0 && u[j] != 0) inv[i][j] += u[i] * u[j] * s;  // 1/s = s
          }
        }
        for (auto& row : inv) row.push_back(0);
        inv.emplace_back(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
          inv[i][k] = -u[i] * s;
          inv[k][i] = -u[i] * s;
        }
        inv[k][k] = s;
      } else {
        tracking = false;
        inv.clear();
      }
    }
    if (!tracking) {
      const SimplicialComplex prefix = SimplicialComplex::from_simplices(
          std::vector<Simplex>(c.simplices().begin(), c.simplices().begin() + static_cast<std::ptrdiff_t>(k + 1)));
      next_det = determinant(connection_matrix(prefix));
    }
    steps.push_back(BuildStep{x, factor, next_det, next_det == det * factor});
    det = next_det;
  }
  return steps;
}

std::pair<IntPolynomial, IntPolynomial> parametrized_ph_sides(const Graph& g, const VertexFunction& f) {
  require_injective(g, f);
  const IntPolynomial lhs = f_function(FVector{clique_counts(g)});
  IntPolynomial sum;
  for (std::size_t v = 0; v < g.size(); ++v) {
    sum += f_function(FVector{clique_counts(g, lower_neighbors(g, f, v))});
  }
  const IntPolynomial rhs = IntPolynomial{1} + IntPolynomial::monomial(1) * sum;
  return {lhs, rhs};
}

bool parametrized_ph_check(const Graph& g, const VertexFunction& f) {
  const auto [lhs, rhs] = parametrized_ph_sides(g, f);
  return lhs == rhs;
}

}  // namespace conlap
