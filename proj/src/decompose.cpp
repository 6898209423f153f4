// decompose.cpp
//
// Splitting a presentation into indecomposable parts. Cheap moves first:
// zero rows and columns, connected components of the support of epsilon,
// and row/column eliminations by single off-diagonal morphisms. When those
// stall on a decomposable block, an idempotent of End(E) is found by Fitting
// decomposition and conjugated to a coordinate projection.
#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "adesheaf/errors.hpp"
#include "adesheaf/extension_lab.hpp"

namespace ade {
namespace {

struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::size_t nonzeros(const Matrix& eps, const Block& blk) {
  std::size_t n = 0;
  for (auto i : blk.rows)
    for (auto j : blk.cols)
      if (!eps(i, j).is_zero()) ++n;
  return n;
}

// Connected components of the bipartite support graph inside the block.
std::vector<Block> support_components(const Matrix& eps, const Block& blk) {
  const std::size_t r = blk.rows.size(), c = blk.cols.size();
  std::vector<std::size_t> parent(r + c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < c; ++b)
      if (!eps(blk.rows[a], blk.cols[b]).is_zero()) parent[find(a)] = find(r + b);
  std::map<std::size_t, Block> comps;
  for (std::size_t a = 0; a < r; ++a) comps[find(a)].rows.push_back(blk.rows[a]);
  for (std::size_t b = 0; b < c; ++b) comps[find(r + b)].cols.push_back(blk.cols[b]);
  std::vector<Block> out;
  for (auto& [root, b] : comps) out.push_back(std::move(b));
  return out;
}

// Embeds an element of End over the summands `idx` of a sum into End of the
// full sum, acting as the identity on the remaining summands.
Vector embed(const SumEndomorphisms& full, const SumEndomorphisms& sub, const Vector& x,
             const std::vector<std::size_t>& idx) {
  Vector out(full.dimension());
  std::vector<bool> inside(full.size(), false);
  for (auto p : idx) inside[p] = true;
  for (std::size_t p = 0; p < full.size(); ++p)
    if (!inside[p]) out[full.offset(p, p)] = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const auto d = static_cast<std::size_t>(sub.hom(a, b).dimension());
      for (std::size_t k = 0; k < d; ++k) out[full.offset(idx[a], idx[b]) + k] = x[sub.offset(a, b) + k];
    }
  return out;
}

Vector scaled(const Vector& v, const Rational& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

// ---------------------------------------------------------- idempotents

// Minimal polynomial of y in A, lowest degree first, monic.
std::optional<Vector> minimal_polynomial(const Algebra& alg, const Vector& y) {
  std::vector<Vector> powers{alg.unit()};
  for (std::size_t d = 1; d <= alg.dimension(); ++d) {
    powers.push_back(alg.multiply(powers.back(), y));
    Matrix m = Matrix::from_columns(powers, alg.dimension());
    Kernel k = kernel(m);
    if (k.dimension() > 0) {
      Vector rel = k.basis.front();
      Rational lead = rel.back();
      if (lead.is_zero()) return std::nullopt;
      for (auto& c : rel) c /= lead;
      return rel;
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  n = n < 0 ? -n : n;
  std::vector<std::int64_t> out;
  if (n == 0 || n > 1'000'000'000'000LL) return out;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

Rational evaluate(const Vector& poly, const Rational& t) {
  Rational v;
  for (std::size_t k = poly.size(); k-- > 0;) v = v * t + poly[k];
  return v;
}

std::vector<Rational> rational_roots(Vector poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1 && poly.front().is_zero()) {
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end()) roots.push_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() < 2) return roots;
  std::int64_t lcm = 1;
  for (const auto& c : poly) lcm = std::lcm(lcm, c.den());
  std::vector<std::int64_t> ints;
  for (const auto& c : poly) ints.push_back((c * Rational(lcm)).num());
  for (auto p : divisors(ints.front()))
    for (auto q : divisors(ints.back()))
      for (std::int64_t sign : {1, -1}) {
        Rational t(sign * p, q);
        if (evaluate(poly, t).is_zero() && std::find(roots.begin(), roots.end(), t) == roots.end()) {
          roots.push_back(t);
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Matrix power(const Matrix& m, std::size_t n) {
  Matrix out = Matrix::identity(m.rows());
  Matrix base = m;
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

// Fitting idempotent of z: projection of 1 onto im L_z^N along ker L_z^N.
Vector fitting_idempotent(const Algebra& alg, const Vector& z) {
  const std::size_t n = alg.dimension();
  Matrix m = power(alg.left_multiplication(z), n);
  RowEchelon e = rref(m);
  std::vector<Vector> cols;
  for (auto p : e.pivots) cols.push_back(m.column(p));
  const std::size_t image_dim = cols.size();
  for (auto& v : kernel(m).basis) cols.push_back(v);
  Matrix basis = Matrix::from_columns(cols, n);
  Vector coeffs = inverse(basis) * alg.unit();
  Vector e_vec(n);
  for (std::size_t k = 0; k < image_dim; ++k)
    for (std::size_t t = 0; t < n; ++t) e_vec[t] += coeffs[k] * cols[k][t];
  return e_vec;
}

std::optional<Vector> find_idempotent(const Algebra& alg) {
  const std::size_t n = alg.dimension();
  std::vector<Vector> candidates;
  for (std::size_t k = 0; k < n; ++k) candidates.push_back(alg.basis_vector(k));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) candidates.push_back(alg.multiply(alg.basis_vector(k), alg.basis_vector(l)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) candidates.push_back(add(alg.basis_vector(k), alg.basis_vector(l)));
  for (const auto& y : candidates) {
    try {
      auto poly = minimal_polynomial(alg, y);
      if (!poly || poly->size() <= 2) continue;  // scalar
      for (const auto& lambda : rational_roots(*poly)) {
        Vector z = add(y, scaled(alg.unit(), -lambda));
        Vector e = fitting_idempotent(alg, z);
        if (is_zero(e) || e == alg.unit()) continue;
        if (!alg.is_idempotent(e)) throw InvariantViolation("Fitting projection is not idempotent");
        return e;
      }
    } catch (const std::overflow_error&) {
      continue;
    }
  }
  return std::nullopt;
}

// Conjugates an idempotent x of End(sum) to a coordinate projection:
// returns (P, P^-1, selected) with P x P^-1 = sum of identities on selected.
struct Diagonalizer {
  Vector p;
  Vector p_inv;
  std::vector<bool> selected;
};

Diagonalizer diagonalize(const SumEndomorphisms& end, const Vector& x) {
  Diagonalizer d;
  d.selected.assign(end.size(), false);
  Vector s(end.dimension()), s_inv(end.dimension()), diag(end.dimension());
  for (const auto& cls : end.isotypic_classes()) {
    Matrix e = end.scalar_block(x, cls);
    RowEchelon re = rref(e);
    std::vector<Vector> cols;
    for (auto p : re.pivots) cols.push_back(e.column(p));
    const std::size_t r = cols.size();
    for (auto& v : kernel(e).basis) cols.push_back(v);
    Matrix t = Matrix::from_columns(cols, cls.size());
    s = add(s, end.from_scalar_block(inverse(t), cls));
    s_inv = add(s_inv, end.from_scalar_block(t, cls));
    for (std::size_t a = 0; a < r; ++a) {
      d.selected[cls[a]] = true;
      diag[end.offset(cls[a], cls[a])] = 1;
    }
  }
  Vector one = end.identity();
  Vector xa = end.multiply(end.multiply(s, x), s_inv);
  Vector not_diag = add(one, scaled(diag, -1));
  Vector u = add(end.multiply(diag, xa), end.multiply(not_diag, add(one, scaled(xa, -1))));
  Vector nil = add(one, scaled(u, -1));
  Vector u_inv = one, term = one;
  for (std::size_t k = 0; k <= end.size() + 1; ++k) {
    term = end.multiply(term, nil);
    if (is_zero(term)) break;
    u_inv = add(u_inv, term);
    if (k == end.size() + 1) throw InvariantViolation("correction term is not nilpotent");
  }
  d.p = end.multiply(u, s);
  d.p_inv = end.multiply(s_inv, u_inv);
  if (end.multiply(end.multiply(d.p, x), d.p_inv) != diag) {
    throw InvariantViolation("idempotent did not conjugate to a coordinate projection");
  }
  return d;
}

// ----------------------------------------------------------- canonical key

std::string key_for(const ExtPresentation& pres, const std::vector<std::size_t>& rp, const std::vector<std::size_t>& cp) {
  const std::size_t m = rp.size(), n = cp.size();
  Matrix eps(m, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) eps(a, b) = pres.epsilon()(rp[a], cp[b]);
  // Rescale rows and columns along a BFS forest so forest entries become 1.
  std::vector<Rational> rs(m, 1), cs(n, 1);
  std::vector<bool> rseen(m, false), cseen(n, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (rseen[start]) continue;
    rseen[start] = true;
    std::vector<std::pair<bool, std::size_t>> queue{{true, start}};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [is_row, v] = queue[h];
      if (is_row) {
        for (std::size_t b = 0; b < n; ++b)
          if (!cseen[b] && !eps(v, b).is_zero()) {
            cseen[b] = true;
            cs[b] = Rational(1) / (rs[v] * eps(v, b));
            queue.emplace_back(false, b);
          }
      } else {
        for (std::size_t a = 0; a < m; ++a)
          if (!rseen[a] && !eps(a, v).is_zero()) {
            rseen[a] = true;
            rs[a] = Rational(1) / (cs[v] * eps(a, v));
            queue.emplace_back(true, a);
          }
      }
    }
  }
  std::ostringstream out;
  for (auto i : rp) out << pres.f()[i].name() << ';';
  out << '|';
  for (auto j : cp) out << pres.g()[j].name() << ';';
  out << '|';
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) out << (rs[a] * eps(a, b) * cs[b]).to_string() << ',';
  return out.str();
}

}  // namespace

std::string canonical_key(const ExtPresentation& pres) {
  const std::size_t m = pres.f().size(), n = pres.g().size();
  std::vector<std::size_t> rp(m), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  auto by_name = [](const std::vector<LineBundle>& side) {
    return [&side](std::size_t x, std::size_t y) { return side[x] < side[y]; };
  };
  std::sort(rp.begin(), rp.end(), by_name(pres.f()));
  std::sort(cp.begin(), cp.end(), by_name(pres.g()));
  auto factorial = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t t = 2; t <= k; ++t) f *= t;
    return f;
  };
  if (factorial(m) * factorial(n) > 5040) return key_for(pres, rp, cp);
  // Minimum over orderings that keep the summand lists sorted.
  std::string best;
  std::vector<std::size_t> r = rp;
  do {
    bool sorted_rows = true;
    for (std::size_t a = 1; a < m; ++a)
      if (pres.f()[r[a]] < pres.f()[r[a - 1]]) sorted_rows = false;
    if (!sorted_rows) continue;
    std::vector<std::size_t> c = cp;
    do {
      bool sorted_cols = true;
      for (std::size_t b = 1; b < n; ++b)
        if (pres.g()[c[b]] < pres.g()[c[b - 1]]) sorted_cols = false;
      if (!sorted_cols) continue;
      std::string k = key_for(pres, r, c);
      if (best.empty() || k < best) best = k;
    } while (std::next_permutation(c.begin(), c.end()));
  } while (std::next_permutation(r.begin(), r.end()));
  return best;
}

DecompositionReport decompose(const ExtPresentation& pres) {
  PresentationActions act(pres);
  const auto& end_f = act.end_f();
  const auto& end_g = act.end_g();
  DecompositionReport report;
  report.a = end_f.identity();
  report.b = end_g.identity();
  Matrix eps = pres.epsilon();

  auto apply = [&](const Vector& p, const Vector& q) {
    eps = act.transport(p, eps, q);
    report.a = end_f.multiply(p, report.a);
    report.b = end_g.multiply(report.b, q);
  };

  std::vector<Block> finished;
  Block all;
  for (std::size_t i = 0; i < pres.f().size(); ++i) all.rows.push_back(i);
  for (std::size_t j = 0; j < pres.g().size(); ++j) all.cols.push_back(j);
  std::vector<Block> work;
  if (!all.rows.empty() || !all.cols.empty()) work.push_back(all);

  while (!work.empty()) {
    Block blk = std::move(work.back());
    work.pop_back();
    if (blk.rows.size() + blk.cols.size() <= 1) {
      finished.push_back(blk);
      continue;
    }
    auto comps = support_components(eps, blk);
    if (comps.size() > 1) {
      report.steps.push_back("split " + std::to_string(comps.size()) + " support components");
      for (auto& c : comps) work.push_back(std::move(c));
      continue;
    }

    // Greedy eliminations; each accepted move strictly shrinks the support.
    bool moved = false;
    for (auto i1 : blk.rows) {
      for (auto i2 : blk.rows) {
        if (i1 == i2 || moved) continue;
        const auto d = static_cast<std::size_t>(end_f.hom(i2, i1).dimension());
        for (std::size_t k = 0; k < d && !moved; ++k)
          for (auto j : blk.cols) {
            const Rational& s = act.post_scalar(i2, i1, k, j);
            if (s.is_zero() || eps(i1, j).is_zero() || eps(i2, j).is_zero()) continue;
            Vector p = end_f.identity();
            p[end_f.offset(i2, i1) + k] += -eps(i2, j) / (s * eps(i1, j));
            Matrix trial = act.post(p, eps);
            if (nonzeros(trial, blk) < nonzeros(eps, blk)) {
              apply(p, end_g.identity());
              report.steps.push_back("row move " + std::to_string(i1) + " -> " + std::to_string(i2));
              moved = true;
              break;
            }
          }
      }
      if (moved) break;
    }
    if (!moved) {
      for (auto j1 : blk.cols) {
        for (auto j2 : blk.cols) {
          if (j1 == j2 || moved) continue;
          const auto d = static_cast<std::size_t>(end_g.hom(j2, j1).dimension());
          for (std::size_t k = 0; k < d && !moved; ++k)
            for (auto i : blk.rows) {
              const Rational& s = act.pre_scalar(j2, j1, k, i);
              if (s.is_zero() || eps(i, j2).is_zero() || eps(i, j1).is_zero()) continue;
              Vector q = end_g.identity();
              q[end_g.offset(j2, j1) + k] += -eps(i, j1) / (s * eps(i, j2));
              Matrix trial = act.pre(eps, q);
              if (nonzeros(trial, blk) < nonzeros(eps, blk)) {
                apply(end_f.identity(), q);
                report.steps.push_back("column move " + std::to_string(j2) + " -> " + std::to_string(j1));
                moved = true;
                break;
              }
            }
        }
        if (moved) break;
      }
    }
    if (moved) {
      work.push_back(std::move(blk));
      continue;
    }

    ExtPresentation sub(pres.config(), {}, {}, Matrix());
    {
      std::vector<LineBundle> f, g;
      for (auto i : blk.rows) f.push_back(pres.f()[i]);
      for (auto j : blk.cols) g.push_back(pres.g()[j]);
      Matrix e(blk.rows.size(), blk.cols.size());
      for (std::size_t a = 0; a < blk.rows.size(); ++a)
        for (std::size_t b = 0; b < blk.cols.size(); ++b) e(a, b) = eps(blk.rows[a], blk.cols[b]);
      sub = ExtPresentation(pres.config(), std::move(f), std::move(g), std::move(e));
    }
    EndAlgebra end = end_algebra(sub);
    if (end.algebra.semisimple_dimension() == 1) {
      finished.push_back(blk);
      continue;
    }
    auto idem = find_idempotent(end.algebra);
    if (!idem) throw InvariantViolation("decomposable block without a rational idempotent");
    Vector pair = end.pair(*idem);
    const auto df = static_cast<std::ptrdiff_t>(end.f_dimension);
    Vector ef(pair.begin(), pair.begin() + df), eg(pair.begin() + df, pair.end());
    SumEndomorphisms sub_f(pres.config(), sub.f()), sub_g(pres.config(), sub.g());
    Diagonalizer df_side = diagonalize(sub_f, ef);
    Diagonalizer dg_side = diagonalize(sub_g, eg);
    apply(embed(end_f, sub_f, df_side.p, blk.rows), embed(end_g, sub_g, dg_side.p_inv, blk.cols));
    Block on, off;
    for (std::size_t a = 0; a < blk.rows.size(); ++a) (df_side.selected[a] ? on : off).rows.push_back(blk.rows[a]);
    for (std::size_t b = 0; b < blk.cols.size(); ++b) (dg_side.selected[b] ? on : off).cols.push_back(blk.cols[b]);
    for (auto i : on.rows)
      for (auto j : off.cols)
        if (!eps(i, j).is_zero()) throw InvariantViolation("idempotent split left a cross term");
    for (auto i : off.rows)
      for (auto j : on.cols)
        if (!eps(i, j).is_zero()) throw InvariantViolation("idempotent split left a cross term");
    report.steps.push_back("idempotent split");
    work.push_back(std::move(on));
    work.push_back(std::move(off));
  }

  if (act.transport(report.a, pres.epsilon(), report.b) != eps) {
    throw InvariantViolation("accumulated transformation does not reproduce the normal form");
  }
  report.normal_form = eps;
  ExtPresentation reduced(pres.config(), pres.f(), pres.g(), eps);

  std::map<std::string, std::size_t> seen;
  std::sort(finished.begin(), finished.end(), [](const Block& x, const Block& y) {
    return std::tie(x.rows, x.cols) < std::tie(y.rows, y.cols);
  });
  for (auto& blk : finished) {
    std::sort(blk.rows.begin(), blk.rows.end());
    std::sort(blk.cols.begin(), blk.cols.end());
    ExtPresentation part = reduced.restrict(blk.rows, blk.cols);
    std::string key = canonical_key(part);
    auto it = seen.find(key);
    if (it != seen.end()) {
      auto& existing = report.parts[it->second];
      ++existing.multiplicity;
      continue;
    }
    seen.emplace(key, report.parts.size());
    report.parts.push_back(DecompositionPart{std::move(part), blk.rows, blk.cols, 1, key});
  }
  return report;
}

}  // namespace ade
