#include "conlap/energy.hpp"

#include <stdexcept>

#include "conlap/incidence.hpp"

namespace conlap {

GreenMatrix::GreenMatrix(SimplicialComplex c) : base_(std::move(c)) {
  if (base_.empty()) throw std::invalid_argument("the empty complex has no Green matrix");
  try {
    g_ = inverse_unimodular(connection_matrix(base_));
  } catch (const std::domain_error& e) {
    throw std::logic_error(std::string("connection matrix is not unimodular: ") + e.what());
  }
}

GreenMatrix green_matrix(const SimplicialComplex& c) { return GreenMatrix(c); }

mpz_class total_energy(const GreenMatrix& g) { return g.matrix().sum(); }

mpz_class total_energy(const SimplicialComplex& c) {
  if (c.empty()) return 0;
  return total_energy(green_matrix(c));
}

mpz_class potential(const GreenMatrix& g, const Simplex& x) {
  const std::size_t i = g.base().require_index(x);
  mpz_class v = 0;
  for (std::size_t j = 0; j < g.size(); ++j) v += g(i, j);
  return v;
}

mpz_class potential(const SimplicialComplex& c, const Simplex& x) {
  (void)c.require_index(x);
  return potential(green_matrix(c), x);
}

std::int64_t green_star_entry(const SimplicialComplex& c, std::size_t x, std::size_t y) {
  std::int64_t euler_char = 0;
  for (std::size_t z = 0; z < c.size(); ++z) {
    if (c.is_face_of(x, z) && c.is_face_of(y, z)) euler_char += c.parity_sign(z);
  }
  return c.parity_sign(x) * c.parity_sign(y) * euler_char;
}

std::int64_t green_star_entry(const SimplicialComplex& c, const Simplex& x, const Simplex& y) {
  return green_star_entry(c, c.require_index(x), c.require_index(y));
}

mpz_class super_trace_inverse(const GreenMatrix& g) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.base().parity_sign(i) * g(i, i);
  return s;
}

mpz_class super_trace_inverse(const SimplicialComplex& c) { return super_trace_inverse(green_matrix(c)); }

std::int64_t wu_characteristic(const SimplicialComplex& c) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c.intersects(i, j)) w += c.parity_sign(i) * c.parity_sign(j);
    }
  }
  return w;
}

IntMatrix extension_matrix(const SimplicialComplex& c, const Simplex& x, long t) {
  const std::size_t xi = c.require_index(x);
  if (!c.is_facet(xi)) throw std::invalid_argument(x.to_string() + " is not a facet");
  const SimplicialComplex rest = c.without_facet(xi);
  const IntMatrix l = connection_matrix(rest);
  const std::size_t n = rest.size();
  IntMatrix k(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k(i, j) = l(i, j);
  }
  const Simplex& top = c[xi];
  for (std::size_t i = 0; i < n; ++i) {
    if (rest[i].intersects(top)) {
      k(i, n) = t;
      k(n, i) = t;
    }
  }
  k(n, n) = 1;
  return k;
}

ExtensionProfile extension_determinant_profile(const SimplicialComplex& c, const Simplex& x) {
  ExtensionProfile p;
  p.det_at_0 = determinant(extension_matrix(c, x, 0));
  p.det_at_1 = determinant(extension_matrix(c, x, 1));
  p.det_at_2 = determinant(extension_matrix(c, x, 2));
  p.alpha = p.det_at_0;
  p.beta = p.alpha - p.det_at_1;
  p.quadratic_fit = (p.det_at_2 == p.alpha - 4 * p.beta);
  if (p.alpha == 0) throw std::domain_error("det K(0) vanished; the base complex is not unimodular");
  if (mpz_divisible_p(p.beta.get_mpz_t(), p.alpha.get_mpz_t())) {
    mpz_divexact(p.glue_euler.get_mpz_t(), p.beta.get_mpz_t(), p.alpha.get_mpz_t());
  } else {
    p.quadratic_fit = false;
  }
  p.matches_full = (p.det_at_1 == determinant(connection_matrix(c)));
  return p;
}

}  // namespace conlap
