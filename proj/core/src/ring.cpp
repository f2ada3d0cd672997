#include "conlap/ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "conlap/incidence.hpp"

namespace conlap {

Graph strong_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.size();
  Graph out;
  for (const auto& a : g.labels()) {
    for (const auto& b : h.labels()) out.add_vertex(a + "x" + b);
  }
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = a; c < g.size(); ++c) {
        if (c != a && !g.adjacent(a, c)) continue;
        for (std::size_t d = 0; d < m; ++d) {
          if (c == a && d <= b) continue;
          if (d != b && !h.adjacent(b, d)) continue;
          out.add_edge(a * m + b, c * m + d);
        }
      }
    }
  }
  return out;
}

ProductCellSet::ProductCellSet(std::vector<SimplicialComplex> factors)
    : factors_(std::move(factors)), size_(1) {
  for (const auto& f : factors_) size_ *= f.size();
}

std::vector<std::size_t> ProductCellSet::cell(std::size_t k) const {
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    idx[i] = k % factors_[i].size();
    k /= factors_[i].size();
  }
  return idx;
}

int ProductCellSet::dimension(std::size_t k) const {
  const auto idx = cell(k);
  int d = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) d += factors_[i][idx[i]].dimension();
  return d;
}

int ProductCellSet::parity_sign(std::size_t k) const { return dimension(k) % 2 == 0 ? 1 : -1; }

std::string ProductCellSet::label(std::size_t k) const {
  const auto idx = cell(k);
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += "x";
    s += factors_[i][idx[i]].to_string();
  }
  return s;
}

bool ProductCellSet::intersects(std::size_t k, std::size_t l) const {
  const auto a = cell(k);
  const auto b = cell(l);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!factors_[i].intersects(a[i], b[i])) return false;
  }
  return true;
}

std::int64_t ProductCellSet::euler_characteristic() const {
  std::int64_t euler_char = 0;
  for (std::size_t k = 0; k < size_; ++k) euler_char += parity_sign(k);
  return euler_char;
}

Graph ProductCellSet::connection_graph() const {
  Graph g;
  for (std::size_t k = 0; k < size_; ++k) g.add_vertex(label(k));
  for (std::size_t k = 0; k < size_; ++k) {
    for (std::size_t l = k + 1; l < size_; ++l) {
      if (intersects(k, l)) g.add_edge(k, l);
    }
  }
  return g;
}

IntMatrix ProductCellSet::connection_matrix() const {
  IntMatrix m(size_, size_);
  for (std::size_t k = 0; k < size_; ++k) {
    for (std::size_t l = 0; l < size_; ++l) m(k, l) = intersects(k, l) ? 1 : 0;
  }
  return m;
}

ProductCellSet product_cells(const SimplicialComplex& a, const SimplicialComplex& b) {
  return ProductCellSet({a, b});
}

IntMatrix product_connection_laplacian(const SimplicialComplex& a, const SimplicialComplex& b) {
  return tensor_product(connection_matrix(a), connection_matrix(b));
}

namespace {

bool factor_less(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.simplices().begin(), a.simplices().end(),
                                      b.simplices().begin(), b.simplices().end());
}

}  // namespace

RingExpr RingExpr::integer(long n) {
  RingExpr e;
  e.add_term(n, {});
  return e;
}

RingExpr RingExpr::complex(SimplicialComplex c) {
  RingExpr e;
  e.add_term(1, {std::move(c)});
  return e;
}

void RingExpr::add_term(long coefficient, std::vector<SimplicialComplex> factors) {
  if (coefficient == 0) return;
  std::vector<SimplicialComplex> kept;
  for (auto& f : factors) {
    if (f.empty()) return;
    if (f.size() == 1) continue;
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end(), factor_less);
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->factors == kept) {
      it->coefficient += coefficient;
      if (it->coefficient == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back(Term{coefficient, std::move(kept)});
}

RingExpr& RingExpr::operator+=(const RingExpr& o) {
  for (const auto& t : o.terms_) add_term(t.coefficient, t.factors);
  return *this;
}

RingExpr& RingExpr::operator-=(const RingExpr& o) {
  for (const auto& t : o.terms_) add_term(-t.coefficient, t.factors);
  return *this;
}

RingExpr operator-(RingExpr a) {
  for (auto& t : a.terms_) t.coefficient = -t.coefficient;
  return a;
}

RingExpr operator*(const RingExpr& a, const RingExpr& b) {
  RingExpr out;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      std::vector<SimplicialComplex> f = s.factors;
      f.insert(f.end(), t.factors.begin(), t.factors.end());
      out.add_term(s.coefficient * t.coefficient, std::move(f));
    }
  }
  return out;
}

std::string RingExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) os << (t.coefficient < 0 ? " - " : " + ");
    else if (t.coefficient < 0) os << "-";
    const long mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (t.factors.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      if (k > 0) os << "*";
      os << "[" << t.factors[k].to_string() << "]";
    }
  }
  return os.str();
}

mpz_class ring_energy(const RingExpr& e) {
  mpz_class total = 0;
  for (const auto& t : e.terms()) {
    mpz_class p = t.coefficient;
    for (const auto& f : t.factors) p *= static_cast<long>(euler_characteristic(f));
    total += p;
  }
  return total;
}

mpz_class ring_energy_by_inversion(const RingExpr& e) {
  mpz_class total = 0;
  for (const auto& t : e.terms()) {
    std::size_t cells = 1;
    for (const auto& f : t.factors) cells *= f.size();
    if (cells > kRingInversionGuard) {
      throw GuardExceeded("product term has " + std::to_string(cells) + " cells");
    }
    IntMatrix l = IntMatrix::identity(1);
    for (const auto& f : t.factors) l = tensor_product(l, connection_matrix(f));
    total += t.coefficient * inverse_unimodular(l).sum();
  }
  return total;
}

namespace {

double max_gap(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

SpectrumReport ring_spectrum_check(const SimplicialComplex& a, const SimplicialComplex& b) {
  const IntMatrix la = connection_matrix(a);
  const IntMatrix lb = connection_matrix(b);
  const auto sa = numeric_spectrum(la);
  const auto sb = numeric_spectrum(lb);

  std::vector<double> products;
  products.reserve(sa.size() * sb.size());
  for (double x : sa) {
    for (double y : sb) products.push_back(x * y);
  }
  std::vector<double> merged = sa;
  merged.insert(merged.end(), sb.begin(), sb.end());

  SpectrumReport r;
  r.product_error = max_gap(numeric_spectrum(tensor_product(la, lb)), products);
  r.union_error = max_gap(numeric_spectrum(connection_matrix(disjoint_union(a, b))), merged);
  return r;
}

}  // namespace conlap
