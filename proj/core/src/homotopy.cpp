#include "conlap/homotopy.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "conlap/complex.hpp"
#include "conlap/linalg.hpp"

namespace conlap {
namespace {

using Mask = std::uint32_t;

// Verdicts on induced subgraphs of one root graph, keyed by vertex mask.
class Classifier {
 public:
  explicit Classifier(const Graph& g) : n_(g.size()) {
    if (n_ > kHomotopyGuard) {
      throw GuardExceeded("homotopy recursion is limited to " + std::to_string(kHomotopyGuard) +
                          " vertices");
    }
    adj_.assign(n_, 0);
    for (auto [a, b] : g.edges()) {
      adj_[a] |= Mask{1} << b;
      adj_[b] |= Mask{1} << a;
    }
    contractible_.assign(std::size_t{1} << n_, kUnknown);
    sphere_.assign(std::size_t{1} << n_, kUnknown);
  }

  [[nodiscard]] Mask all() const { return n_ == 0 ? 0 : static_cast<Mask>((std::size_t{1} << n_) - 1); }
  [[nodiscard]] Mask sphere_of(Mask m, int v) const { return m & adj_[static_cast<std::size_t>(v)]; }

  bool contractible(Mask m) {
    auto& slot = contractible_[m];
    if (slot != kUnknown) return slot != 0;
    bool result = false;
    if (std::popcount(m) == 1) {
      result = true;
    } else if (m != 0) {
      result = removable(m).has_value();
    }
    slot = result ? 1 : 0;
    return result;
  }

  // A vertex whose unit sphere and complement are both contractible.
  std::optional<int> removable(Mask m) {
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask without = m & ~(Mask{1} << v);
      if (contractible(sphere_of(m, v)) && contractible(without)) return v;
    }
    return std::nullopt;
  }

  // kNone when not a sphere, else dimension + 1 (so the empty (-1)-sphere is 0).
  int sphere(Mask m) {
    auto& slot = sphere_[m];
    if (slot != kUnknown) return slot;
    int result = 0;
    if (m != 0) {
      int dim = kNone;
      for (Mask rest = m; rest != 0 && result != kNone; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int s = sphere(sphere_of(m, v));
        if (s == kNone || (dim != kNone && s != dim)) {
          result = kNone;
          break;
        }
        dim = s;
        if (!contractible(m & ~(Mask{1} << v))) result = kNone;
      }
      if (result != kNone) result = dim + 1;
    }
    sphere_[m] = result;
    return result;
  }

  static constexpr int kUnknown = -2;
  static constexpr int kNone = -1;

 private:
  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<int> contractible_;
  std::vector<int> sphere_;
};

std::vector<Label> mask_labels(const Graph& g, Mask m) {
  std::vector<Label> out;
  for (; m != 0; m &= m - 1) out.push_back(g.label(static_cast<std::size_t>(std::countr_zero(m))));
  return out;
}

Graph induced_by_mask(const Graph& g, Mask m) {
  std::vector<std::size_t> keep;
  for (; m != 0; m &= m - 1) keep.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return g.induced(keep);
}

Mask labels_to_mask(const Graph& g, const std::vector<Label>& labels, bool& ok) {
  Mask m = 0;
  for (const auto& l : labels) {
    const auto i = g.index_of(l);
    if (!i) {
      ok = false;
      return 0;
    }
    m |= Mask{1} << *i;
  }
  return m;
}

}  // namespace

HomotopyVerdict classify(const Graph& g) {
  Classifier cls(g);
  HomotopyVerdict verdict;
  const Mask all = cls.all();
  verdict.contractible = cls.contractible(all);
  const int s = cls.sphere(all);
  if (s != Classifier::kNone) verdict.sphere_dimension = s - 1;

  if (verdict.contractible) {
    Mask m = all;
    while (std::popcount(m) > 1) {
      const int v = *cls.removable(m);
      verdict.certificate.push_back(g.label(static_cast<std::size_t>(v)));
      m &= ~(Mask{1} << v);
    }
    verdict.certificate.push_back(g.label(static_cast<std::size_t>(std::countr_zero(m))));
  } else if (verdict.sphere_dimension) {
    verdict.certificate = mask_labels(g, all);
  }
  return verdict;
}

HomotopyVerdict is_contractible(const Graph& g) { return classify(g); }
HomotopyVerdict is_sphere(const Graph& g) { return classify(g); }

bool replay_certificate(const Graph& g, const HomotopyVerdict& v) {
  if (v.contractible && v.sphere_dimension) return false;
  const HomotopyVerdict fresh = classify(g);
  if (fresh.contractible != v.contractible || fresh.sphere_dimension != v.sphere_dimension) {
    return false;
  }
  bool ok = true;
  const Mask all = g.empty() ? 0 : static_cast<Mask>((std::size_t{1} << g.size()) - 1);
  const Mask listed = labels_to_mask(g, v.certificate, ok);
  if (!ok) return false;

  if (v.contractible) {
    if (v.certificate.size() != g.size() || listed != all) return false;
    Mask m = all;
    for (std::size_t k = 0; k + 1 < v.certificate.size(); ++k) {
      const std::size_t x = *g.index_of(v.certificate[k]);
      const Mask rest = m & ~(Mask{1} << x);
      Mask unit = 0;
      g.neighborhood(x).for_each([&](std::size_t w) { unit |= Mask{1} << w; });
      unit &= m;
      if (!classify(induced_by_mask(g, unit)).contractible) return false;
      if (!classify(induced_by_mask(g, rest)).contractible) return false;
      m = rest;
    }
    return true;
  }
  if (v.sphere_dimension) {
    if (listed != all) return false;
    for (const auto& label : v.certificate) {
      const std::size_t x = *g.index_of(label);
      Mask unit = 0;
      g.neighborhood(x).for_each([&](std::size_t w) { unit |= Mask{1} << w; });
      if (classify(induced_by_mask(g, unit)).sphere_dimension != *v.sphere_dimension - 1) return false;
      if (!classify(induced_by_mask(g, all & ~(Mask{1} << x))).contractible) return false;
    }
    return true;
  }
  return v.certificate.empty();
}

bool JoinClosureReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

JoinClosureReport join_closure_check(const std::vector<PoolGraph>& pool) {
  std::vector<HomotopyVerdict> verdicts;
  verdicts.reserve(pool.size());
  for (const auto& p : pool) verdicts.push_back(classify(p.graph));

  JoinClosureReport report;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      const auto& va = verdicts[i];
      const auto& vb = verdicts[j];
      const bool relevant = va.contractible || (va.is_sphere() && (vb.is_sphere() || b.ball));
      if (!relevant) continue;
      if (a.graph.size() + b.graph.size() > kHomotopyGuard) {
        report.skipped.push_back(a.name + " + " + b.name + ": join exceeds the vertex guard");
        continue;
      }
      const HomotopyVerdict joined = classify(graph_join(a.graph, b.graph));
      if (va.contractible) {
        report.checks.push_back({a.name, b.name, "contractible", joined.contractible});
      }
      if (va.is_sphere() && vb.is_sphere()) {
        const int d = *va.sphere_dimension + *vb.sphere_dimension + 1;
        report.checks.push_back({a.name, b.name, std::to_string(d) + "-sphere",
                                 joined.sphere_dimension == d});
      }
      if (va.is_sphere() && b.ball) {
        report.checks.push_back(
            {a.name, b.name, "ball", joined.contractible && !joined.is_sphere()});
      }
    }
  }
  return report;
}

}  // namespace conlap
