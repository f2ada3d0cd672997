#include "conlap_cli/verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "conlap/energy.hpp"
#include "conlap/facet_io.hpp"
#include "conlap/families.hpp"
#include "conlap/homotopy.hpp"
#include "conlap/incidence.hpp"
#include "conlap/linalg.hpp"
#include "conlap/morse.hpp"
#include "conlap/ring.hpp"

namespace conlap::cli {
namespace {

using Log = std::vector<CheckRecord>;

std::string facet_list(const SimplicialComplex& c) {
  std::string s;
  for (auto i : c.facets()) {
    if (!s.empty()) s += ' ';
    s += c[i].to_string();
  }
  return s.empty() ? "{}" : s;
}

Graph one_skeleton(const SimplicialComplex& c) {
  Graph g(c.vertex_labels());
  for (const auto& x : c.simplices()) {
    if (x.size() == 2) g.add_edge(x.vertices()[0], x.vertices()[1]);
  }
  return g;
}

std::string violations(std::size_t bad) {
  return bad == 0 ? "holds" : std::to_string(bad) + " violations";
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

class Recorder {
 public:
  Recorder(std::string suite, Log& log) : suite_(std::move(suite)), log_(log) {}

  void check(const std::string& subject, bool ok, const std::string& detail,
             const SimplicialComplex* witness = nullptr) {
    CheckRecord r{suite_, subject, detail, ok};
    if (!ok && witness != nullptr) r.detail += " [facets: " + facet_list(*witness) + "]";
    log_.push_back(std::move(r));
  }
  void skip(const std::string& subject, const std::string& why) {
    log_.push_back({suite_, subject, "skipped: " + why, true});
  }

 private:
  std::string suite_;
  Log& log_;
};

// Complexes within the size guard.
template <typename Fn>
void each_complex(const Pool& pool, const VerifyOptions& opt, Recorder& rec, Fn&& fn) {
  for (const auto& nc : pool.complexes) {
    if (nc.complex.empty()) continue;
    if (nc.complex.size() > opt.max_n) {
      rec.skip(nc.name, std::to_string(nc.complex.size()) + " simplices exceed --max-n");
      continue;
    }
    fn(nc);
  }
}

void suite_unimodularity(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("unimodularity", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto& c = nc.complex;
    const mpz_class det = determinant(connection_matrix(c));
    const int fermi_char = fermi_characteristic(c);
    rec.check(nc.name, det == fermi_char, "det L = " + det.get_str() + ", fermi = " + std::to_string(fermi_char), &c);
    if (c.size() > 60) return;
    for (auto f : c.facets()) {
      const auto p = extension_determinant_profile(c, c[f]);
      std::int64_t boundary_euler = 0;
      for (std::size_t k = 1; k < c[f].size(); ++k) {
        // proper faces of size k: C(|x|, k) of them, each with sign (-1)^(k-1)
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), c[f].size(), k);
        boundary_euler += (k % 2 == 1 ? 1 : -1) * binom.get_si();
      }
      const bool ok = p.quadratic_fit && p.matches_full && p.glue_euler == boundary_euler &&
                      p.alpha == determinant(connection_matrix(c.without_facet(f)));
      rec.check(nc.name + " facet " + c[f].to_string(), ok,
                "det K(t) = " + p.alpha.get_str() + " - " + p.beta.get_str() + " t^2, euler(A) = " +
                    p.glue_euler.get_str(),
                &c);
    }
  });
}

void suite_energy(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("energy", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const mpz_class e = total_energy(nc.complex);
    const auto euler_char = euler_characteristic(nc.complex);
    rec.check(nc.name, e == static_cast<long>(euler_char), "energy " + e.get_str() + " = euler " + std::to_string(euler_char),
              &nc.complex);
  });
}

void suite_hearing(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("hearing", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto fv = f_vector(nc.complex);
    const Inertia in = inertia(connection_matrix(nc.complex));
    const bool ok = static_cast<std::int64_t>(in.positive) == fv.even() &&
                    static_cast<std::int64_t>(in.negative) == fv.odd() && in.zero == 0;
    rec.check(nc.name, ok,
              "inertia (" + std::to_string(in.positive) + "," + std::to_string(in.negative) +
                  "), (b,f) = (" + std::to_string(fv.even()) + "," + std::to_string(fv.odd()) + ")",
              &nc.complex);
  });
}

void suite_green_star(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("green-star", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto& c = nc.complex;
    const GreenMatrix g(c);
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        const auto s = green_star_entry(c, i, j);
        if (g(i, j) != static_cast<long>(s)) {
          if (bad++ == 0) first = "g" + c[i].to_string() + c[j].to_string() + " = " + g(i, j).get_str() +
                                  ", star formula " + std::to_string(s);
        }
      }
    }
    rec.check(nc.name, bad == 0,
              bad == 0 ? std::to_string(c.size() * c.size()) + " entries agree"
                       : std::to_string(bad) + " mismatches, first " + first,
              &c);
  });
}

void suite_diagonal(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("diagonal", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto& c = nc.complex;
    const GreenMatrix g(c);
    const IncidenceIndex index(c);
    std::size_t bad_diag = 0;
    std::size_t bad_potential = 0;
    std::int64_t balance = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto sphere_ec = index.euler_characteristic(index.sphere(i));
      if (g(i, i) != static_cast<long>(1 - sphere_ec)) ++bad_diag;
      mpz_class row = 0;
      for (std::size_t j = 0; j < c.size(); ++j) row += g(i, j);
      if (row != c.parity_sign(i) * g(i, i)) ++bad_potential;
      balance += c.parity_sign(i) * sphere_ec;
    }
    const mpz_class str = super_trace_inverse(g);
    const auto euler_char = euler_characteristic(c);
    rec.check(nc.name, bad_diag == 0, "g(x,x) = 1 - euler(S(x)): " + violations(bad_diag), &c);
    rec.check(nc.name, bad_potential == 0,
              "V(x) = sign(x) g(x,x): " + violations(bad_potential), &c);
    rec.check(nc.name, str == static_cast<long>(euler_char), "str(g) = " + str.get_str() + ", euler = " + std::to_string(euler_char), &c);
    rec.check(nc.name, balance == 0, "sum sign(x) euler(S(x)) = " + std::to_string(balance), &c);
  });
}

void suite_unit_ball(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("unit-ball", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto& c = nc.complex;
    const IncidenceIndex index(c);
    const std::size_t n = c.size();
    std::vector<std::int64_t> upper(n);
    for (std::size_t i = 0; i < n; ++i) upper[i] = index.euler_characteristic(index.upper_sphere(i));
    std::size_t bad_row = 0;
    std::size_t bad_ball = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t row = 0;
      std::int64_t ball = 0;
      std::size_t degree = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!c.intersects(i, j)) continue;
        row += 1 - upper[j];
        ball += upper[j];
        if (j != i) ++degree;
      }
      if (row != 1) ++bad_row;
      if (ball != static_cast<std::int64_t>(degree)) ++bad_ball;
    }
    rec.check(nc.name, bad_row == 0, "L k = 1: " + violations(bad_row), &c);
    rec.check(nc.name, bad_ball == 0,
              "d(x) = sum over B(x) of euler(S+(y)): " + violations(bad_ball), &c);
  });
}

std::vector<NamedGraph> small_graphs(const Pool& pool, std::size_t limit) {
  std::vector<NamedGraph> out;
  for (const auto& g : pool.graphs) {
    if (g.graph.size() <= limit) out.push_back(g);
  }
  return out;
}

void suite_poincare_hopf(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("poincare-hopf", log);
  for (const auto& ng : pool.graphs) {
    const auto euler_char = whitney_euler_characteristic(ng.graph);
    std::size_t bad_sum = 0;
    std::size_t bad_poly = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
      const auto f = random_injective_function(ng.graph.size(), opt.seed * 7919 + t);
      if (ph_sum(ng.graph, f) != euler_char) ++bad_sum;
      if (!parametrized_ph_check(ng.graph, f)) ++bad_poly;
    }
    rec.check(ng.name, bad_sum == 0,
              "index sum = euler " + std::to_string(euler_char) + ": " + violations(bad_sum));
    rec.check(ng.name, bad_poly == 0,
              "f-function identity: " + violations(bad_poly));
  }
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto& c = nc.complex;
    if (c.size() > 80) return;
    const SimplexFunction dim = SimplexFunction::dimension(c);
    std::size_t bad = 0;
    for (const auto& x : c.simplices()) {
      if (!dual_index_check(c, dim, x).holds()) ++bad;
    }
    rec.check(nc.name, bad == 0, "i_f i_-f = i: " + violations(bad), &c);

    const Graph g1 = barycentric_graph(c);
    VertexFunction f(g1.size());
    for (std::size_t i = 0; i < c.size(); ++i) f[i] = c[i].dimension();
    std::size_t bad_sign = 0;
    const auto idx = ph_indices(g1, f);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (idx[i] != c.parity_sign(i)) ++bad_sign;
    }
    rec.check(nc.name, bad_sign == 0,
              "index of dim on the refinement graph is sign: " + violations(bad_sign), &c);
  });
}

void suite_gauss_bonnet(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("gauss-bonnet", log);
  for (const auto& ng : pool.graphs) {
    const auto euler_char = whitney_euler_characteristic(ng.graph);
    mpq_class total = 0;
    const auto k = levitt_curvatures(ng.graph);
    for (const auto& v : k) total += v;
    rec.check(ng.name, total == static_cast<long>(euler_char),
              "sum of curvatures " + total.get_str() + " = euler " + std::to_string(euler_char));
    if (ng.graph.size() <= kExhaustiveOrderLimit) {
      const auto e = index_expectation(ng.graph, 1, opt.seed);
      rec.check(ng.name, e == k, "index expectation over all orders equals curvature");
    }
  }
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const IncidenceIndex index(nc.complex);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < nc.complex.size(); ++i) total += sphere_curvature(index, i);
    const auto euler_char = euler_characteristic(nc.complex);
    rec.check(nc.name, total == euler_char,
              "sum of sphere curvatures " + std::to_string(total) + " = euler " + std::to_string(euler_char), &nc.complex);
  });
}

void suite_mult_ph(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("mult-ph", log);
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    const auto steps = multiplicative_ph_trace(nc.complex);
    std::size_t bad = 0;
    for (const auto& s : steps) {
      if (!s.holds || s.factor != s.simplex.parity_sign()) ++bad;
    }
    const bool final_ok = !steps.empty() && steps.back().determinant == fermi_characteristic(nc.complex);
    rec.check(nc.name, bad == 0 && final_ok,
              std::to_string(steps.size()) + " steps, " + std::to_string(bad) + " violations, final det " +
                  (steps.empty() ? std::string("-") : steps.back().determinant.get_str()),
              &nc.complex);
  });
}

void suite_joins(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("joins", log);
  std::vector<PoolGraph> certified = {
      {"empty", Graph{}, false},      {"K1", complete_graph(1), true}, {"P2", empty_graph(2), false},
      {"K2", complete_graph(2), true}, {"K3", complete_graph(3), true}, {"C4", cycle_graph(4), false},
      {"C5", cycle_graph(5), false},   {"P3", path_graph(3), true},     {"octahedron", octahedron_graph(), false},
  };
  const auto report = join_closure_check(certified);
  for (const auto& c : report.checks) {
    rec.check(c.left + " + " + c.right, c.passed, "expected " + c.expectation);
  }
  for (const auto& s : report.skipped) rec.skip(s, "guard");

  Graph sphere;
  for (int k = 1; k <= 3; ++k) {
    sphere = graph_join(sphere, empty_graph(2));
    const auto v = classify(sphere);
    rec.check(std::to_string(k) + " P2", v.sphere_dimension == k - 1,
              "expected a " + std::to_string(k - 1) + "-sphere");
  }

  for (const auto& ng : small_graphs(pool, kHomotopyGuard)) {
    const auto v = classify(ng.graph);
    const auto euler_char = whitney_euler_characteristic(ng.graph);
    if (v.contractible) rec.check(ng.name, euler_char == 1, "contractible with euler " + std::to_string(euler_char));
    if (v.sphere_dimension) {
      const int d = *v.sphere_dimension;
      rec.check(ng.name, euler_char == 1 + (d % 2 == 0 ? 1 : -1),
                std::to_string(d) + "-sphere with euler " + std::to_string(euler_char));
      const Graph refined = barycentric_graph(whitney_complex(ng.graph));
      if (refined.size() <= kHomotopyGuard) {
        rec.check(ng.name, classify(refined).sphere_dimension == d, "refinement stays a sphere");
      }
    }
    rec.check(ng.name, replay_certificate(ng.graph, v), "certificate replays");
  }

  std::vector<const NamedComplex*> small;
  for (const auto& nc : pool.complexes) {
    if (!nc.complex.empty() && nc.complex.size() <= 16) small.push_back(&nc);
  }
  for (std::size_t i = 0; i < small.size() && i < 12; ++i) {
    for (std::size_t j = i; j < small.size() && j < 12; ++j) {
      const auto& a = small[i]->complex;
      const auto& b = small[j]->complex;
      const auto joined = zykov_join(a, b);
      if (joined.size() > opt.max_n) continue;
      const auto ga = genus(a);
      const auto gb = genus(b);
      const auto gj = genus(joined);
      rec.check(small[i]->name + " + " + small[j]->name, gj == ga * gb,
                "genus " + std::to_string(gj) + " = " + std::to_string(ga) + " * " + std::to_string(gb), &joined);
    }
  }
}

void suite_ring(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("ring", log);
  std::vector<const NamedComplex*> small;
  for (const auto& nc : pool.complexes) {
    if (!nc.complex.empty() && nc.complex.size() <= 15) small.push_back(&nc);
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < small.size() && pairs < 24; ++i) {
    for (std::size_t j = i; j < small.size() && pairs < 24; ++j) {
      const auto& a = small[i]->complex;
      const auto& b = small[j]->complex;
      if (a.size() * b.size() > std::min<std::size_t>(120, opt.max_n)) continue;
      ++pairs;
      const std::string name = small[i]->name + " x " + small[j]->name;
      const auto euler_a = euler_characteristic(a);
      const auto euler_b = euler_characteristic(b);

      const mpz_class e_prod = ring_energy_by_inversion(RingExpr::complex(a) * RingExpr::complex(b));
      rec.check(name, e_prod == static_cast<long>(euler_a * euler_b),
                "E(GxH) = " + e_prod.get_str() + ", E(G)E(H) = " + std::to_string(euler_a * euler_b));
      const mpz_class e_sum = total_energy(disjoint_union(a, b));
      rec.check(name, e_sum == static_cast<long>(euler_a + euler_b),
                "E(G+H) = " + e_sum.get_str() + ", E(G)+E(H) = " + std::to_string(euler_a + euler_b));

      const ProductCellSet cells = product_cells(a, b);
      const IntMatrix l = product_connection_laplacian(a, b);
      rec.check(name, l == cells.connection_matrix(), "tensor Laplacian equals the cell intersection matrix");
      rec.check(name, same_labeled_graph(cells.connection_graph(),
                                         strong_product(connection_graph(a), connection_graph(b))),
                "(GxH)' equals the strong product of G' and H'");

      const auto fa = f_vector(a);
      const auto fb = f_vector(b);
      const Inertia in = inertia(l);
      const auto p = fa.even() * fb.even() + fa.odd() * fb.odd();
      const auto q = fa.even() * fb.odd() + fa.odd() * fb.even();
      rec.check(name, static_cast<std::int64_t>(in.positive) == p && static_cast<std::int64_t>(in.negative) == q,
                "inertia (" + std::to_string(in.positive) + "," + std::to_string(in.negative) +
                    ") by sign rule (" + std::to_string(p) + "," + std::to_string(q) + ")");

      const auto spec = ring_spectrum_check(a, b);
      rec.check(name, spec.passed(), "spectrum error " + str(spec.product_error) + " / " + str(spec.union_error));
    }
  }
  rec.check("empty expression", ring_energy(RingExpr{}) == 0, "E(0) = 0");
}

void suite_paths(const Pool& pool, const VerifyOptions& opt, Log& log) {
  Recorder rec("paths", log);
  static const long kWith[] = {1, 2, 6, 24, 120, 720};
  static const long kWithout[] = {0, 1, 2, 9, 44, 265};
  for (int n = 1; n <= 6; ++n) {
    IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = i == j ? 0 : 1;
    }
    const mpz_class with = permanent(a + IntMatrix::identity(a.rows()));
    const mpz_class without = permanent(a);
    rec.check("K" + std::to_string(n), with == kWith[n - 1] && without == kWithout[n - 1],
              "per(1+A) = " + with.get_str() + ", per(A) = " + without.get_str());
  }
  each_complex(pool, opt, rec, [&](const NamedComplex& nc) {
    if (nc.complex.size() > kPermutationGuard) return;
    const mpz_class paths = fredholm_path_oracle(connection_adjacency(nc.complex));
    const mpz_class det = determinant(connection_matrix(nc.complex));
    rec.check(nc.name, paths == det, "path sum " + paths.get_str() + " = det(1+A) " + det.get_str(), &nc.complex);
  });
}

using SuiteFn = void (*)(const Pool&, const VerifyOptions&, Log&);

const std::map<std::string, SuiteFn, std::less<>>& suites() {
  static const std::map<std::string, SuiteFn, std::less<>> table = {
      {"unimodularity", &suite_unimodularity}, {"energy", &suite_energy},
      {"hearing", &suite_hearing},             {"green-star", &suite_green_star},
      {"diagonal", &suite_diagonal},           {"poincare-hopf", &suite_poincare_hopf},
      {"gauss-bonnet", &suite_gauss_bonnet},   {"unit-ball", &suite_unit_ball},
      {"joins", &suite_joins},                 {"ring", &suite_ring},
      {"paths", &suite_paths},                 {"mult-ph", &suite_mult_ph},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "unimodularity", "energy",    "hearing", "green-star", "diagonal", "poincare-hopf", "gauss-bonnet",
      "unit-ball",     "joins",     "ring",    "paths",      "mult-ph",  "all"};
  return names;
}

Pool make_pool(std::string_view spec, std::uint64_t seed) {
  Pool pool;
  if (spec == "named" || spec == "small") {
    pool.complexes = named_complexes();
    pool.graphs = named_graphs();
    if (spec == "small") {
      for (auto& c : random_complex_pool(seed)) pool.complexes.push_back(std::move(c));
      for (auto& g : random_graph_pool(seed)) pool.graphs.push_back(std::move(g));
    }
    return pool;
  }
  if (spec.substr(0, 5) == "file:") {
    const std::string path(spec.substr(5));
    SimplicialComplex c = read_facet_file(path);
    pool.graphs.push_back({path, one_skeleton(c)});
    pool.complexes.push_back({path, std::move(c)});
    return pool;
  }
  throw std::invalid_argument("unknown pool '" + std::string(spec) + "' (small, named, file:<path>)");
}

std::vector<CheckRecord> run_suite(std::string_view suite, const Pool& pool, const VerifyOptions& options) {
  Log log;
  if (suite == "all") {
    for (const auto& [name, fn] : suites()) fn(pool, options, log);
    return log;
  }
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  it->second(pool, options, log);
  return log;
}

std::string format_record(const CheckRecord& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.suite + " | " + r.subject + " | " + r.detail;
}

}  // namespace conlap::cli
