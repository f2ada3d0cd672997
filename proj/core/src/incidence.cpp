#include "conlap/incidence.hpp"

#include <stdexcept>

namespace conlap {
namespace {

void require_matching(const SimplicialComplex& c, const SimplexFunction& f) {
  if (f.size() != c.size()) {
    throw std::invalid_argument("simplex function has " + std::to_string(f.size()) +
                                " values for a complex with " + std::to_string(c.size()) +
                                " simplices");
  }
  if (!f.is_locally_injective(c)) {
    throw std::invalid_argument("simplex function is not locally injective on the refinement graph");
  }
}

SimplicialComplex directed_sphere(const SimplicialComplex& c, const Simplex& x,
                                  const SimplexFunction& f, bool below) {
  const std::size_t xi = c.require_index(x);
  require_matching(c, f);
  const IncidenceIndex index(c);
  Bitset members = index.sphere(xi);
  Bitset chosen(c.size());
  members.for_each([&](std::size_t y) {
    if (below ? f(y) < f(xi) : f(y) > f(xi)) chosen.set(y);
  });
  return sphere_complex(index, chosen);
}

}  // namespace

SimplexFunction SimplexFunction::dimension(const SimplicialComplex& c) {
  std::vector<mpq_class> v;
  v.reserve(c.size());
  for (const auto& x : c.simplices()) v.emplace_back(x.dimension());
  return SimplexFunction(std::move(v));
}

SimplexFunction SimplexFunction::negated() const {
  std::vector<mpq_class> v;
  v.reserve(values_.size());
  for (const auto& q : values_) v.push_back(-q);
  return SimplexFunction(std::move(v));
}

bool SimplexFunction::is_locally_injective(const SimplicialComplex& c) const {
  if (values_.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i].size() != c[j].size() && c.is_face_of(i, j) && values_[i] == values_[j]) return false;
    }
  }
  return true;
}

Graph barycentric_graph(const SimplicialComplex& c) {
  Graph g;
  for (const auto& x : c.simplices()) g.add_vertex(x.to_string());
  // Canonical order puts every proper face before its cofaces.
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (c[i].size() < c[j].size() && c.is_face_of(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

SimplicialComplex barycentric_refinement(const SimplicialComplex& c) {
  return whitney_complex(barycentric_graph(c));
}

IntMatrix stirling_refinement_operator(int d) {
  if (d < 0) throw std::invalid_argument("refinement operator dimension must be nonnegative");
  const auto n = static_cast<std::size_t>(d) + 1;
  // stirling[j][i] = S(j, i) for j, i = 0..n
  std::vector<std::vector<mpz_class>> stirling(n + 1, std::vector<mpz_class>(n + 1, 0));
  stirling[0][0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      stirling[j][i] = static_cast<unsigned long>(i) * stirling[j - 1][i] + stirling[j - 1][i - 1];
    }
  }
  IntMatrix a(n, n);
  mpz_class factorial = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    factorial *= static_cast<unsigned long>(i);
    for (std::size_t j = 1; j <= n; ++j) a(i - 1, j - 1) = factorial * stirling[j][i];
  }
  return a;
}

FVector refine_f_vector(const FVector& f) {
  if (f.counts.empty()) return {};
  const IntMatrix a = stirling_refinement_operator(static_cast<int>(f.counts.size()) - 1);
  FVector out;
  out.counts.resize(f.counts.size(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * static_cast<long>(f.counts[j]);
    out.counts[i] = s.get_si();
  }
  return out;
}

Graph connection_graph(const SimplicialComplex& c) {
  Graph g;
  for (const auto& x : c.simplices()) g.add_vertex(x.to_string());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c.intersects(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

IntMatrix connection_adjacency(const SimplicialComplex& c) {
  IntMatrix a(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c.intersects(i, j)) {
        a(i, j) = 1;
        a(j, i) = 1;
      }
    }
  }
  return a;
}

IntMatrix connection_matrix(const SimplicialComplex& c) {
  IntMatrix l = connection_adjacency(c);
  for (std::size_t i = 0; i < c.size(); ++i) l(i, i) = 1;
  return l;
}

IncidenceIndex::IncidenceIndex(const SimplicialComplex& c) : complex_(&c), refined_(barycentric_graph(c)) {}

Bitset IncidenceIndex::sphere(std::size_t x) const { return refined_.neighborhood(x); }

Bitset IncidenceIndex::lower_sphere(std::size_t x) const {
  Bitset out(complex_->size());
  refined_.neighborhood(x).for_each([&](std::size_t y) {
    if ((*complex_)[y].size() < (*complex_)[x].size()) out.set(y);
  });
  return out;
}

Bitset IncidenceIndex::upper_sphere(std::size_t x) const {
  Bitset out(complex_->size());
  refined_.neighborhood(x).for_each([&](std::size_t y) {
    if ((*complex_)[y].size() > (*complex_)[x].size()) out.set(y);
  });
  return out;
}

std::int64_t IncidenceIndex::euler_characteristic(const Bitset& members) const {
  return whitney_euler_characteristic(refined_, members);
}

SimplicialComplex sphere_complex(const IncidenceIndex& index, const Bitset& members) {
  std::vector<std::size_t> vertices;
  members.for_each([&](std::size_t y) { vertices.push_back(y); });
  return whitney_complex(index.barycentric().induced(vertices));
}

SimplicialComplex unit_sphere(const SimplicialComplex& c, const Simplex& x) {
  const std::size_t xi = c.require_index(x);
  const IncidenceIndex index(c);
  return sphere_complex(index, index.sphere(xi));
}

SimplicialComplex stable_sphere(const SimplicialComplex& c, const Simplex& x,
                                const SimplexFunction& f) {
  return directed_sphere(c, x, f, true);
}

SimplicialComplex unstable_sphere(const SimplicialComplex& c, const Simplex& x,
                                  const SimplexFunction& f) {
  return directed_sphere(c, x, f, false);
}

std::vector<Simplex> star(const SimplicialComplex& c, const Simplex& x) {
  const std::size_t xi = c.require_index(x);
  std::vector<Simplex> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c.is_face_of(xi, j)) out.push_back(c[j]);
  }
  return out;
}

SimplicialComplex core(const SimplicialComplex& c, const Simplex& x) {
  (void)c.require_index(x);
  return complete_complex_on(x);
}

std::size_t connection_ball_degree(const SimplicialComplex& c, const Simplex& x) {
  const std::size_t xi = c.require_index(x);
  std::size_t d = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != xi && c.intersects(xi, j)) ++d;
  }
  return d;
}

}  // namespace conlap
