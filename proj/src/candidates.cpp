// candidates.cpp
//
// Summand tables around the branch point, chain bundles on the far side, and
// the single-node reduction of End(E) to a matrix problem.
#include <algorithm>
#include <optional>

#include "adesheaf/errors.hpp"
#include "adesheaf/extension_lab.hpp"

namespace ade {
namespace {

std::vector<int> resolve_anchors(const CurveConfig& config, const std::vector<int>& anchors) {
  if (anchors.empty()) return std::vector<int>(static_cast<std::size_t>(config.size()), 0);
  if (static_cast<int>(anchors.size()) != config.size()) {
    throw InvalidInput("expected " + std::to_string(config.size()) + " anchors, got " + std::to_string(anchors.size()));
  }
  return anchors;
}

void check_path(const CurveConfig& config, const std::vector<int>& stages, const char* what) {
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (!config.has_component(stages[k])) throw InvalidInput(std::string(what) + ": unknown component");
    if (std::count(stages.begin(), stages.end(), stages[k]) > 1) {
      throw InvalidInput(std::string(what) + ": repeated component C" + std::to_string(stages[k]));
    }
    if (k > 0 && !config.adjacent(stages[k - 1], stages[k])) {
      throw InvalidInput(std::string(what) + ": C" + std::to_string(stages[k - 1]) + " and C" +
                         std::to_string(stages[k]) + " are not adjacent");
    }
  }
}

// b offset per stage: 0 (b = a), 1 (b = a + 1), or absent.
using Pattern = std::vector<std::optional<int>>;

std::vector<Pattern> present_patterns(std::size_t k, std::size_t length) {
  std::vector<Pattern> out;
  for (int b : {0, 1}) {
    std::vector<Pattern> tails;
    if (k > 0) {
      tails = present_patterns(k - 1, length);
      tails.push_back(Pattern(length));
    } else {
      tails.push_back(Pattern(length));
    }
    for (auto p : tails) {
      p[k] = b;
      out.push_back(std::move(p));
    }
  }
  return out;
}

LineBundle realize(const CurveConfig& config, const std::vector<int>& stages, const Pattern& p,
                   const std::vector<int>& anchors, bool later_is_next) {
  std::vector<int> support, degrees;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (!p[k]) continue;
    int d = anchors[static_cast<std::size_t>(stages[k] - 1)] + *p[k];
    const std::size_t later = later_is_next ? k + 1 : k - 1;
    if (later < stages.size() && p[later]) ++d;
    support.push_back(stages[k]);
    degrees.push_back(d);
  }
  return LineBundle(config, std::move(support), std::move(degrees));
}

}  // namespace

std::vector<LineBundle> CandidateTable::flat() const {
  std::vector<LineBundle> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

CandidateTable summand_candidates(const CurveConfig& config, const std::vector<int>& stages,
                                  const std::vector<int>& anchors) {
  if (stages.size() < 2) throw InvalidInput("a stage order needs at least two components");
  check_path(config, stages, "stage order");
  const auto a = resolve_anchors(config, anchors);
  const std::size_t m = stages.size();
  CandidateTable table;
  table.stages = stages;
  for (auto& p : present_patterns(m - 2, m)) {
    std::vector<LineBundle> row;
    for (std::optional<int> last : {std::optional<int>(), std::optional<int>(0), std::optional<int>(1)}) {
      p[m - 1] = last;
      row.push_back(realize(config, stages, p, a, true));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<LineBundle> chain_candidates(const CurveConfig& config, const std::vector<int>& chain,
                                         const std::vector<int>& anchors, ChainOrder order) {
  if (chain.empty()) throw InvalidInput("empty chain");
  check_path(config, chain, "chain");
  const auto a = resolve_anchors(config, anchors);
  std::vector<LineBundle> out;
  for (std::size_t len = 1; len <= chain.size(); ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      Pattern p(chain.size());
      for (std::size_t k = 0; k < len; ++k) p[k] = static_cast<int>((bits >> k) & 1u);
      out.push_back(realize(config, chain, p, a, order == ChainOrder::Outward));
    }
  return out;
}

BranchLayout branch_layout(const CurveConfig& config) {
  const int n = config.size();
  BranchLayout layout;
  switch (config.kind().type) {
    case AdeType::D:
      layout.f_stages = {1, 3, 2};
      for (int c = 4; c <= n; ++c) layout.chain.push_back(c);
      layout.node = Node::between(3, 4);
      break;
    case AdeType::E:
      layout.f_stages = {1, 2, 3, 4};
      for (int c = 5; c <= n; ++c) layout.chain.push_back(c);
      layout.node = Node::between(3, 5);
      break;
    default:
      throw Unsupported("no branch point in " + config.kind().name());
  }
  return layout;
}

NodeProfile node_profile(const ExtPresentation& pres) {
  const auto& cfg = pres.config();
  const std::size_t m = pres.f().size(), n = pres.g().size();
  std::optional<Node> x;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& here = pres.node(i, j);
      if (!here) throw Unsupported("an F/G pair without a connecting node");
      if (x && *x != *here) throw Unsupported("germs sit at more than one node");
      x = here;
    }
  NodeProfile prof;
  prof.f_order.assign(m, std::vector<bool>(m, false));
  prof.g_order.assign(n, std::vector<bool>(n, false));
  if (!x) return prof;
  // Side of the node on which each summand lives.
  const int f_side = pres.f().empty() ? 0 : (pres.f()[0].contains(x->a) ? x->a : x->b);
  const int g_side = x->other(f_side);
  auto fill = [&](const std::vector<LineBundle>& side, int at, std::vector<std::vector<bool>>& order) {
    int kernel = 0;
    for (std::size_t p = 0; p < side.size(); ++p)
      for (std::size_t q = 0; q < side.size(); ++q) {
        HomSpace h = hom0(cfg, side[q], side[p]);
        kernel += h.dimension();
        for (const auto& phi : h.basis())
          if (!phi.value_at(cfg, at, x->other(at)).is_zero()) order[p][q] = true;
        if (order[p][q]) --kernel;
      }
    return kernel;
  };
  prof.f_kernel = fill(pres.f(), f_side, prof.f_order);
  prof.g_kernel = fill(pres.g(), g_side, prof.g_order);
  return prof;
}

namespace {

// Rank of a small integer matrix by fraction-free elimination.
int integer_rank(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        __int128 v = static_cast<__int128>(a[r][c]) * a[i][k] - static_cast<__int128>(a[i][c]) * a[r][k];
        a[i][k] = static_cast<std::int64_t>(v / prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

LambdaResult solve_lambda(const std::vector<std::vector<bool>>& f_order, const std::vector<std::vector<bool>>& g_order,
                          const std::vector<std::vector<int>>& eps, bool need_locality) {
  const std::size_t m = f_order.size(), n = g_order.size();
  std::vector<std::pair<std::size_t, std::size_t>> fv, gv;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (f_order[p][q]) fv.emplace_back(p, q);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (g_order[p][q]) gv.emplace_back(p, q);
  const std::size_t unknowns = fv.size() + gv.size();
  // (M eps - eps N)(i, j) = sum_k M[i][k] eps[k][j] - sum_k eps[i][k] N[k][j]
  std::vector<std::vector<std::int64_t>> eq(m * n, std::vector<std::int64_t>(unknowns, 0));
  for (std::size_t u = 0; u < fv.size(); ++u) {
    auto [p, q] = fv[u];
    for (std::size_t j = 0; j < n; ++j) eq[p * n + j][u] += eps[q][j];
  }
  for (std::size_t u = 0; u < gv.size(); ++u) {
    auto [p, q] = gv[u];
    for (std::size_t i = 0; i < m; ++i) eq[i * n + q][fv.size() + u] -= eps[i][p];
  }
  LambdaResult res;
  res.dimension = static_cast<int>(unknowns) - integer_rank(eq);
  if (!need_locality) return res;

  Matrix sys(m * n, unknowns);
  for (std::size_t r = 0; r < m * n; ++r)
    for (std::size_t u = 0; u < unknowns; ++u) sys(r, u) = eq[r][u];
  Kernel k = kernel(sys);
  // Elements as block-diagonal matrices diag(M, N) acting on k^m + k^n.
  const std::size_t dim = m + n;
  std::vector<Matrix> elems;
  for (const auto& v : k.basis) {
    Matrix x(dim, dim);
    for (std::size_t u = 0; u < fv.size(); ++u) x(fv[u].first, fv[u].second) = v[u];
    for (std::size_t u = 0; u < gv.size(); ++u) x(m + gv[u].first, m + gv[u].second) = v[fv.size() + u];
    elems.push_back(std::move(x));
  }
  Matrix gram(elems.size(), elems.size());
  for (std::size_t s = 0; s < elems.size(); ++s)
    for (std::size_t t = 0; t < elems.size(); ++t) {
      Matrix prod = elems[s] * elems[t];
      Rational tr;
      for (std::size_t d = 0; d < dim; ++d) tr += prod(d, d);
      gram(s, t) = tr;
    }
  res.local = rank(gram) == 1;
  return res;
}

}  // namespace ade
