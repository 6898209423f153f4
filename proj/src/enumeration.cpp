// enumeration.cpp
//
// Bounded search for rigid indecomposable presentations around the branch
// point. All germs sit at the node joining the F spine to the chain, so
// End(E) reduces to the matrix problem of solve_lambda and only the node-value
// pattern of each side matters. Multisets are grouped by that pattern (up to
// relabeling) and by
//   alpha = 2 (dim End - #pattern) + c1^2,
// which together with dim Lambda determines
//   hom1(E, E) = alpha_F + alpha_G + 2 |F| |G| + 2 dim Lambda.
#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "adesheaf/errors.hpp"
#include "adesheaf/extension_lab.hpp"

namespace ade {
namespace {

using Mask = std::vector<std::vector<bool>>;

struct SideData {
  std::vector<LineBundle> candidates;
  std::vector<std::vector<int>> hom;     // hom[p][q] = dim Hom(c_q, c_p)
  std::vector<std::vector<bool>> value;  // nonzero node value
  std::vector<std::vector<int>> pairing;
};

SideData side_data(const CurveConfig& cfg, std::vector<LineBundle> cands, int at, int toward) {
  SideData d;
  d.candidates = std::move(cands);
  const std::size_t k = d.candidates.size();
  d.hom.assign(k, std::vector<int>(k, 0));
  d.value.assign(k, std::vector<bool>(k, false));
  d.pairing.assign(k, std::vector<int>(k, 0));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      HomSpace h = hom0(cfg, d.candidates[q], d.candidates[p]);
      d.hom[p][q] = h.dimension();
      for (const auto& phi : h.basis())
        if (!phi.value_at(cfg, at, toward).is_zero()) d.value[p][q] = true;
      d.pairing[p][q] = intersection(cfg, d.candidates[p].c1(cfg.size()), d.candidates[q].c1(cfg.size()));
    }
  return d;
}

struct Variant {
  int alpha = 0;
  unsigned long long count = 0;
  std::vector<std::size_t> representative;  // candidate indices, in canonical order
};

struct Group {
  std::size_t size = 0;
  Mask mask;
  int pattern_count = 0;
  std::map<int, Variant> variants;  // by alpha
};

Mask permuted(const Mask& m, const std::vector<std::size_t>& perm) {
  const std::size_t s = perm.size();
  Mask out(s, std::vector<bool>(s, false));
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) out[p][q] = m[perm[p]][perm[q]];
  return out;
}

std::vector<Group> group_multisets(const SideData& d, int max_size, std::size_t& multisets) {
  std::map<std::pair<std::size_t, Mask>, Group> groups;
  const std::size_t k = d.candidates.size();
  std::vector<std::size_t> pick;
  auto visit = [&]() {
    const std::size_t s = pick.size();
    Mask m(s, std::vector<bool>(s, false));
    int homs = 0, c1sq = 0, pattern = 0;
    for (std::size_t p = 0; p < s; ++p)
      for (std::size_t q = 0; q < s; ++q) {
        m[p][q] = d.value[pick[p]][pick[q]];
        homs += d.hom[pick[p]][pick[q]];
        c1sq += d.pairing[pick[p]][pick[q]];
        pattern += m[p][q] ? 1 : 0;
      }
    const int alpha = 2 * (homs - pattern) + c1sq;
    std::vector<std::size_t> perm(s), best_perm;
    std::iota(perm.begin(), perm.end(), 0);
    Mask best;
    do {
      Mask c = permuted(m, perm);
      if (best_perm.empty() || c < best) {
        best = std::move(c);
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto& g = groups[{s, best}];
    g.size = s;
    g.mask = best;
    g.pattern_count = pattern;
    auto& v = g.variants[alpha];
    v.alpha = alpha;
    if (v.count++ == 0)
      for (auto p : best_perm) v.representative.push_back(pick[p]);
    ++multisets;
  };
  // Non-decreasing index sequences of length 1..max_size.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) visit();
    if (static_cast<int>(pick.size()) == max_size) return;
    for (std::size_t c = from; c < k; ++c) {
      pick.push_back(c);
      self(self, c);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<Group> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

// Positions p, q are twins when swapping them preserves the mask.
std::vector<std::vector<std::size_t>> twin_classes(const Mask& m) {
  const std::size_t s = m.size();
  auto twins = [&](std::size_t p, std::size_t q) {
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[p], perm[q]);
    return permuted(m, perm) == m;
  };
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> used(s, false);
  for (std::size_t p = 0; p < s; ++p) {
    if (used[p]) continue;
    std::vector<std::size_t> cls{p};
    used[p] = true;
    for (std::size_t q = p + 1; q < s; ++q) {
      if (used[q]) continue;
      bool all = true;
      for (auto r : cls) all = all && twins(r, q);
      if (all) {
        cls.push_back(q);
        used[q] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

struct TaskResult {
  unsigned long long presentations = 0;
  std::size_t solved = 0;
  std::vector<unsigned long long> by_rank;
  std::optional<int> min_hom1;
  bool sides_rigid = true;
  std::vector<std::optional<RigidWitness>> witnesses;  // by rank
};

TaskResult run_pair(const Group& fg, const Group& gg, const SideData& fd, const SideData& gd, std::size_t max_rank) {
  TaskResult res;
  res.by_rank.assign(max_rank + 1, 0);
  res.witnesses.resize(max_rank + 1);
  const std::size_t m = fg.size, n = gg.size;
  const auto rows = twin_classes(fg.mask);
  const auto cols = twin_classes(gg.mask);
  const std::size_t rank = std::max(m, n);
  std::vector<std::vector<int>> eps(m, std::vector<int>(n, 0));
  for (unsigned long bits = 0; bits < (1ul << (m * n)); ++bits) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) eps[i][j] = static_cast<int>((bits >> (i * n + j)) & 1ul);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = std::any_of(eps[i].begin(), eps[i].end(), [](int e) { return e; });
    for (std::size_t j = 0; j < n && ok; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < m; ++i) any = any || eps[i][j];
      ok = any;
    }
    if (!ok) continue;
    // Lex-leader under swaps of twin rows and of twin columns.
    for (const auto& cls : rows)
      for (std::size_t t = 1; t < cls.size() && ok; ++t) ok = !(eps[cls[t]] < eps[cls[t - 1]]);
    for (const auto& cls : cols)
      for (std::size_t t = 1; t < cls.size() && ok; ++t) {
        std::vector<int> a, b;
        for (std::size_t i = 0; i < m; ++i) {
          a.push_back(eps[i][cls[t - 1]]);
          b.push_back(eps[i][cls[t]]);
        }
        ok = !(b < a);
      }
    if (!ok) continue;

    const int d_lambda = solve_lambda(fg.mask, gg.mask, eps, false).dimension;
    ++res.solved;
    std::optional<bool> local;
    for (const auto& [af, vf] : fg.variants)
      for (const auto& [ag, vg] : gg.variants) {
        const int hom1 = af + ag + 2 * static_cast<int>(m * n) + 2 * d_lambda;
        if (hom1 < 0) throw InvariantViolation("negative self-Ext^1 in the enumeration");
        res.presentations += vf.count * vg.count;
        if (!res.min_hom1 || hom1 < *res.min_hom1) res.min_hom1 = hom1;
        if (hom1 != 0) continue;
        if (!local) local = solve_lambda(fg.mask, gg.mask, eps, true).local;
        if (!*local) continue;
        res.by_rank[rank] += vf.count * vg.count;
        if (af + 2 * fg.pattern_count != 0 || ag + 2 * gg.pattern_count != 0) res.sides_rigid = false;
        if (!res.witnesses[rank]) {
          RigidWitness w;
          w.rank = rank;
          for (auto c : vf.representative) w.f.push_back(fd.candidates[c]);
          for (auto c : vg.representative) w.g.push_back(gd.candidates[c]);
          w.epsilon = eps;
          res.witnesses[rank] = std::move(w);
        }
      }
  }
  return res;
}

}  // namespace

EnumerationResult enumerate_presentations(const CurveConfig& config, const EnumerationBounds& bounds, int workers) {
  EnumerationResult out;
  out.config = config.kind().name();
  const std::size_t max_rank = static_cast<std::size_t>(std::max({bounds.max_f, bounds.max_g, 0}));
  out.rigid_indecomposable_by_rank.assign(max_rank + 1, 0);
  if (bounds.max_f <= 0 || bounds.max_g <= 0) return out;

  const BranchLayout layout = branch_layout(config);
  const int f_at = std::find(layout.f_stages.begin(), layout.f_stages.end(), layout.node.a) != layout.f_stages.end()
                       ? layout.node.a
                       : layout.node.b;
  const int g_at = layout.node.other(f_at);
  SideData fd = side_data(config, summand_candidates(config, layout.f_stages, bounds.anchors).flat(), f_at, g_at);
  SideData gd = side_data(config, chain_candidates(config, layout.chain, bounds.anchors, ChainOrder::Outward), g_at, f_at);
  out.f_candidates = fd.candidates.size();
  out.g_candidates = gd.candidates.size();
  auto fgroups = group_multisets(fd, bounds.max_f, out.f_multisets);
  auto ggroups = group_multisets(gd, bounds.max_g, out.g_multisets);

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t a = 0; a < fgroups.size(); ++a)
    for (std::size_t b = 0; b < ggroups.size(); ++b) tasks.emplace_back(a, b);
  out.pattern_pairs = tasks.size();

  std::vector<TaskResult> results(tasks.size());
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  auto work = [&](std::size_t id) {
    for (std::size_t t = id; t < tasks.size(); t += w)
      results[t] = run_pair(fgroups[tasks[t].first], ggroups[tasks[t].second], fd, gd, max_rank);
  };
  if (w == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (std::size_t id = 0; id < w; ++id)
      pool.emplace_back([&, id] {
        try {
          work(id);
        } catch (...) {
          errors[id] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::optional<int> min_hom1;
  std::vector<std::optional<RigidWitness>> witnesses(max_rank + 1);
  for (auto& r : results) {
    out.presentations += r.presentations;
    out.epsilons_solved += r.solved;
    for (std::size_t k = 0; k <= max_rank; ++k) {
      out.rigid_indecomposable_by_rank[k] += r.by_rank[k];
      if (!witnesses[k] && r.witnesses[k]) witnesses[k] = std::move(r.witnesses[k]);
    }
    if (r.min_hom1 && (!min_hom1 || *r.min_hom1 < *min_hom1)) min_hom1 = r.min_hom1;
    out.sides_rigid = out.sides_rigid && r.sides_rigid;
  }
  out.min_hom1 = min_hom1.value_or(0);
  for (std::size_t k = 0; k <= max_rank; ++k)
    if (out.rigid_indecomposable_by_rank[k] > 0) out.max_rigid_rank = k;

  // Independent re-check of every witness through the full intertwiner solve.
  for (auto& w_opt : witnesses) {
    if (!w_opt) continue;
    const auto& wit = *w_opt;
    Matrix eps(wit.f.size(), wit.g.size());
    for (std::size_t i = 0; i < wit.f.size(); ++i)
      for (std::size_t j = 0; j < wit.g.size(); ++j) eps(i, j) = wit.epsilon[i][j];
    ExtPresentation pres(config, wit.f, wit.g, eps);
    if (!is_OX_rigid(pres).rigid || !is_indecomposable(pres) || pres.rank() != wit.rank) {
      throw InvariantViolation("enumeration witness fails the full check");
    }
    out.witnesses.push_back(wit);
  }
  return out;
}

}  // namespace ade
