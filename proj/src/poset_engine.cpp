// poset_engine.cpp
#include "adesheaf/poset_engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "adesheaf/errors.hpp"

namespace ade {
namespace {

// Scalar of phi on a one-dimensional germ space.
Rational germ_scalar(const CurveConfig& cfg, const HomSpace& space, const HomElement& phi, const Ext1Germs& germs,
                     Side side) {
  GermMap map = act_on_ext(cfg, space, phi, germs, side);
  return map.matrix(0, 0);
}

}  // namespace

BundlePoset build_poset(const CurveConfig& config, std::vector<LineBundle> elements, std::vector<LineBundle> partners,
                        PosetSide side) {
  for (const auto* list : {&elements, &partners})
    for (const auto& x : *list)
      if (hom0(config, x, x).dimension() != 1) {
        throw InvalidInput("End(" + x.name() + ") is not generated by the identity");
      }
  // Ext^1(L, N) with L on the quotient side.
  auto germs = [&](const LineBundle& element, const LineBundle& partner) {
    const LineBundle& l = side == PosetSide::Sub ? partner : element;
    const LineBundle& n = side == PosetSide::Sub ? element : partner;
    Ext1Germs g;
    try {
      g = ext1_Z(config, l, n);
    } catch (const Unsupported&) {
      throw InvalidInput("Ext^1(" + l.name() + ", " + n.name() + ") is outside the modeled case (shared component)");
    }
    if (g.dimension() != 1) {
      throw InvalidInput("Ext^1(" + l.name() + ", " + n.name() + ") has dimension " + std::to_string(g.dimension()) +
                         ", expected 1");
    }
    return g;
  };
  for (const auto& x : elements)
    for (const auto& y : partners) germs(x, y);

  BundlePoset poset;
  const std::size_t n = elements.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  poset.witness.assign(n, std::vector<std::optional<Vector>>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      // Sub: morphisms p -> q acting forward. Quotient: morphisms q -> p acting backward.
      const HomSpace space = side == PosetSide::Sub ? hom0(config, elements[p], elements[q])
                                                    : hom0(config, elements[q], elements[p]);
      const int d = space.dimension();
      if (d == 0) continue;
      // Scalar of each basis element on each partner's germ.
      std::vector<Vector> scalars;
      for (const auto& partner : partners) {
        Vector s;
        for (const auto& b : space.basis()) {
          s.push_back(side == PosetSide::Sub
                          ? germ_scalar(config, space, b, germs(elements[p], partner), Side::Post)
                          : germ_scalar(config, space, b, germs(elements[p], partner), Side::Pre));
        }
        scalars.push_back(std::move(s));
      }
      if (std::any_of(scalars.begin(), scalars.end(), [](const Vector& s) { return is_zero(s); })) continue;
      // Some t gives sum t^k b_k nonzero on all germs: each germ excludes
      // at most d - 1 values of t.
      const int tries = (d - 1) * static_cast<int>(partners.size()) + 1;
      for (int t = 1; t <= tries + 1; ++t) {
        Vector coords(static_cast<std::size_t>(d));
        Rational pow = 1;
        for (int k = 0; k < d; ++k) {
          coords[static_cast<std::size_t>(k)] = pow;
          pow *= t;
        }
        bool all = true;
        for (const auto& s : scalars) {
          Rational v;
          for (int k = 0; k < d; ++k) v += coords[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)];
          all = all && !v.is_zero();
        }
        if (all) {
          poset.leq[p][q] = true;
          poset.witness[p][q] = std::move(coords);
          break;
        }
      }
      if (!poset.leq[p][q]) throw InvariantViolation("no witnessing morphism found for a related pair");
    }
  poset.elements = std::move(elements);
  poset.partners = std::move(partners);
  poset.side = side;
  return poset;
}

AxiomCheck check_axioms(const BundlePoset& poset) {
  AxiomCheck c;
  const std::size_t n = poset.size();
  for (std::size_t p = 0; p < n; ++p) {
    c.reflexive = c.reflexive && poset.leq[p][p];
    for (std::size_t q = 0; q < n; ++q) {
      if (poset.leq[p][q] && poset.leq[q][p] && !(poset.elements[p] == poset.elements[q])) c.antisymmetric = false;
      if (!poset.leq[p][q]) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (poset.leq[q][r] && !poset.leq[p][r]) c.transitive = false;
    }
  }
  return c;
}

bool is_chain(const BundlePoset& poset, const std::vector<std::size_t>& subset) {
  for (auto p : subset)
    for (auto q : subset)
      if (!poset.comparable(p, q)) return false;
  return true;
}

std::vector<std::size_t> minimal_elements(const BundlePoset& poset, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (auto p : subset) {
    bool minimal = true;
    for (auto q : subset)
      if (q != p && poset.leq[q][p] && !poset.leq[p][q]) minimal = false;
    // Isomorphic copies: keep the first occurrence only.
    for (auto q : subset) {
      if (q == p) break;
      if (poset.leq[q][p] && poset.leq[p][q]) minimal = false;
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

std::size_t width(const BundlePoset& poset) {
  const std::size_t n = poset.size();
  // Strict order on isomorphism classes: drop repeated elements first.
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < n; ++p) {
    bool dup = false;
    for (auto q : reps) dup = dup || (poset.leq[p][q] && poset.leq[q][p]);
    if (!dup) reps.push_back(p);
  }
  const std::size_t k = reps.size();
  std::vector<int> match_right(k, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t u, std::vector<bool>& seen) {
    for (std::size_t v = 0; v < k; ++v) {
      if (!poset.less(reps[u], reps[v]) || seen[v]) continue;
      seen[v] = true;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]), seen)) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < k; ++u) {
    std::vector<bool> seen(k, false);
    if (augment(u, seen)) ++matching;
  }
  return k - matching;
}

std::vector<std::size_t> max_antichain(const BundlePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> best, current;
  std::function<void(std::size_t)> search = [&](std::size_t from) {
    if (current.size() > best.size()) best = current;
    if (current.size() + (n - from) <= best.size()) return;
    for (std::size_t p = from; p < n; ++p) {
      bool free = true;
      for (auto q : current) free = free && !poset.comparable(p, q);
      if (!free) continue;
      current.push_back(p);
      search(p + 1);
      current.pop_back();
    }
  };
  search(0);
  return best;
}

std::size_t max_minimal_exhaustive(const BundlePoset& poset) {
  const std::size_t n = poset.size();
  if (n > 24) throw InvalidInput("exhaustive subset search is limited to 24 elements");
  std::size_t best = 0;
  std::vector<std::size_t> subset;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    subset.clear();
    for (std::size_t p = 0; p < n; ++p)
      if (mask >> p & 1ul) subset.push_back(p);
    best = std::max(best, minimal_elements(poset, subset).size());
  }
  return best;
}

std::string to_dot(const BundlePoset& poset) {
  const std::size_t n = poset.size();
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t p = 0; p < n; ++p) out << "  n" << p << " [label=\"" << poset.elements[p].name() << "\"];\n";
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (!poset.less(p, q) || poset.leq[q][p]) continue;
      bool cover = true;
      for (std::size_t r = 0; r < n && cover; ++r)
        if (r != p && r != q && poset.less(p, r) && poset.less(r, q) && !poset.leq[r][p] && !poset.leq[q][r]) {
          cover = false;
        }
      if (cover) out << "  n" << p << " -> n" << q << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace ade
