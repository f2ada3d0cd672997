#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Family closure(const std::vector<Set>& sets) {
  Family out;
  for (const auto& s : sets) {
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Set sub;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask >> b & 1U) sub.push_back(s[b]);
      }
      std::sort(sub.begin(), sub.end());
      out.insert(sub);
    }
  }
  return out;
}

std::vector<Set> canonical(const Family& f) {
  std::vector<Set> v(f.begin(), f.end());
  std::stable_sort(v.begin(), v.end(), [](const Set& a, const Set& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return v;
}

std::vector<std::int64_t> f_vector(const Family& f) {
  std::vector<std::int64_t> out;
  for (const auto& s : f) {
    if (out.size() < s.size()) out.resize(s.size(), 0);
    ++out[s.size() - 1];
  }
  return out;
}

std::int64_t euler(const Family& f) {
  std::int64_t euler_char = 0;
  for (const auto& s : f) euler_char += s.size() % 2 == 1 ? 1 : -1;
  return euler_char;
}

Family cliques(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  Family out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Set s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    bool complete = true;
    for (std::size_t i = 0; i < s.size() && complete; ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!adj[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])]) {
          complete = false;
          break;
        }
      }
    }
    if (complete) out.insert(s);
  }
  return out;
}

std::vector<std::vector<std::size_t>> forests(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    // acyclic iff every component has one fewer edge than vertices
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(vertices));
    std::size_t used = 0;
    std::vector<std::size_t> chosen;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1U)) continue;
      nb[static_cast<std::size_t>(edges[e].first)].push_back(edges[e].second);
      nb[static_cast<std::size_t>(edges[e].second)].push_back(edges[e].first);
      chosen.push_back(e);
      ++used;
    }
    std::vector<bool> seen(static_cast<std::size_t>(vertices), false);
    int components = 0;
    for (int s = 0; s < vertices; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++components;
      std::vector<int> stack = {s};
      seen[static_cast<std::size_t>(s)] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : nb[static_cast<std::size_t>(v)]) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
        }
      }
    }
    if (static_cast<int>(used) == vertices - components) out.push_back(chosen);
  }
  return out;
}

Matrix connection(const std::vector<Set>& simplices) {
  const std::size_t n = simplices.size();
  Matrix m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = simplices[i];
      const auto& b = simplices[j];
      bool meet = false;
      for (int v : a) meet = meet || std::find(b.begin(), b.end(), v) != b.end();
      m[i][j] = meet ? 1 : 0;
    }
  }
  return m;
}

mpq_class det(Matrix m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

Matrix inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class pivot = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= pivot;
      inv[c][k] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

namespace {

int parity(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

mpz_class permutation_sum(const std::vector<std::vector<long>>& m, bool signed_terms) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  mpz_class total = 0;
  do {
    mpz_class term = signed_terms ? parity(p) : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

mpz_class leibniz(const std::vector<std::vector<long>>& m) { return permutation_sum(m, true); }
mpz_class permanent(const std::vector<std::vector<long>>& m) { return permutation_sum(m, false); }

std::int64_t star_euler(const std::vector<Set>& simplices, const Set& x, const Set& y) {
  std::int64_t euler_char = 0;
  for (const auto& z : simplices) {
    if (std::includes(z.begin(), z.end(), x.begin(), x.end()) &&
        std::includes(z.begin(), z.end(), y.begin(), y.end())) {
      euler_char += z.size() % 2 == 1 ? 1 : -1;
    }
  }
  return euler_char;
}

std::int64_t sphere_euler(const std::vector<Set>& simplices, const Set& x) {
  // chains z_0 < z_1 < ... < z_k of simplices strictly comparable to x that
  // are pairwise comparable; each contributes (-1)^k
  std::vector<Set> near;
  for (const auto& z : simplices) {
    if (z == x) continue;
    const bool sub = std::includes(x.begin(), x.end(), z.begin(), z.end());
    const bool sup = std::includes(z.begin(), z.end(), x.begin(), x.end());
    if (sub || sup) near.push_back(z);
  }
  std::sort(near.begin(), near.end(), [](const Set& a, const Set& b) { return a.size() < b.size(); });
  std::int64_t euler_char = 0;
  std::function<void(std::size_t, const Set*, int)> extend = [&](std::size_t from, const Set* top, int len) {
    for (std::size_t i = from; i < near.size(); ++i) {
      const Set& z = near[i];
      if (top != nullptr &&
          (z.size() <= top->size() || !std::includes(z.begin(), z.end(), top->begin(), top->end()))) {
        continue;
      }
      euler_char += len % 2 == 0 ? 1 : -1;
      extend(i + 1, &z, len + 1);
    }
  };
  extend(0, nullptr, 0);
  return euler_char;
}

mpz_class stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return mpz_class(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

bool contractible(const Adjacency& adj, std::vector<int> vertices) {
  if (vertices.empty()) return false;
  if (vertices.size() == 1) return true;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    std::vector<int> unit;
    std::vector<int> rest;
    for (int w : vertices) {
      if (w == v) continue;
      rest.push_back(w);
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) unit.push_back(w);
    }
    if (contractible(adj, unit) && contractible(adj, rest)) return true;
  }
  return false;
}

}  // namespace oracle
