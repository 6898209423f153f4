// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "adesheaf/errors.hpp"
#include "adesheaf/verify.hpp"

using namespace ade;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  std::string id;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok    " : "FAILED") + " " + what);
  }
};

const CurveConfig& d4() {
  static const CurveConfig cfg = CurveConfig::build("D4");
  return cfg;
}
LineBundle chain_l(int n) { return LineBundle(d4(), {1, 2, 3}, {n, -n, 0}); }
LineBundle o_c4() { return LineBundle(d4(), {4}, {0}); }
LineBundle n41() { return LineBundle(d4(), {1, 3}, {1, 1}); }
LineBundle n32() { return LineBundle(d4(), {2, 3}, {0, 1}); }
LineBundle n23() { return LineBundle(d4(), {1, 2, 3}, {2, 1, 1}); }

std::string str(const Json& j) { return j.dump(); }

const Check& find(const VerificationReport& r, const std::string& claim) {
  for (const auto& c : r.checks)
    if (c.claim == claim) return c;
  throw InvariantViolation("missing check: " + claim);
}

Criterion unbounded_rank() {
  Criterion c{"A1", "unbounded rank on D4"};
  const auto t0 = Clock::now();
  std::vector<LineBundle> f;
  for (int r = 1; r <= 8; ++r) {
    f.push_back(chain_l(r - 1));
    const auto u = universal_extension(d4(), f, {o_c4()});
    const auto end = end_algebra(u);
    c.expect(u.rank() == static_cast<std::size_t>(r) && end.algebra.semisimple_dimension() == 1,
             "r = " + std::to_string(r) + ": rank " + std::to_string(u.rank()) + ", dim End/rad " +
                 std::to_string(end.algebra.semisimple_dimension()));
  }
  const double t = since(t0);
  c.expect(t < 5.0, "runtime " + std::to_string(t) + " s (limit 5 s)");
  return c;
}

Criterion rank3_criterion() {
  Criterion c{"A2", "rank-3 rigid example"};
  const auto u = universal_extension(d4(), {n41(), n32(), n23()}, {o_c4()});
  const auto r = is_OX_rigid(u);
  c.expect(r.end_dimension == 3, "dim End = " + std::to_string(r.end_dimension));
  c.expect(r.c1_square == -6, "c1^2 = " + std::to_string(r.c1_square));
  c.expect(r.hom1 == 0, "hom1(E,E) = " + std::to_string(r.hom1));
  c.expect(is_indecomposable(u), "indecomposable");
  c.expect(u.rank() == 3, "rank = " + std::to_string(u.rank()));
  c.expect(r.criterion_b == std::optional<bool>(true), "generation route agrees");
  return c;
}

Criterion rigid_bound(int& min_hom1) {
  Criterion c{"A3", "rigid rank bound on D4, D5, E6, E7, E8"};
  for (const char* k : {"D4", "D5", "E6", "E7", "E8"}) {
    const auto cfg = CurveConfig::build(k);
    const auto t0 = Clock::now();
    const auto res = enumerate_presentations(cfg, EnumerationBounds{}, 1);
    const double t = since(t0);
    min_hom1 = std::min(min_hom1, res.min_hom1);
    const auto& by = res.rigid_indecomposable_by_rank;
    c.expect(res.max_rigid_rank <= 3, std::string(k) + ": max rigid indecomposable rank " +
                                          std::to_string(res.max_rigid_rank) + " (claimed <= 3)");
    for (const auto& w : res.witnesses)
      if (w.rank >= 4) {
        std::ostringstream s;
        s << "       witness F =";
        for (const auto& l : w.f) s << " " << l.name();
        s << ", G =";
        for (const auto& l : w.g) s << " " << l.name();
        s << ", epsilon = " << Json(w.epsilon).dump();
        c.details.push_back(s.str());
      }
    c.expect(by.size() > 3 && by[3] > 0, std::string(k) + ": rank-3 rigid indecomposables found: " +
                                              std::to_string(by.size() > 3 ? by[3] : 0));
    const auto u = ade::rank3_example(cfg);
    c.expect(u.rank() == 3 && is_OX_rigid(u).rigid && is_indecomposable(u),
             std::string(k) + ": explicit rank-3 construction rigid and indecomposable");
    c.expect(t < 60.0, std::string(k) + ": runtime " + std::to_string(t) + " s (limit 60 s)");
  }
  return c;
}

Criterion numeric_anchors() {
  Criterion c{"A4", "quoted Hom, Ext and Euler values"};
  for (int n = -3; n <= 3; ++n) {
    const int e = ext1_Z(d4(), o_c4(), chain_l(n)).dimension();
    const int h = hom0(d4(), o_c4(), chain_l(n)).dimension();
    c.expect(e == 1 && h == 0, "n = " + std::to_string(n) + ": Ext^1(O_C4, L_n) = " + std::to_string(e) +
                                   ", Hom(O_C4, L_n) = " + std::to_string(h));
  }
  auto dim = [](const LineBundle& a, const LineBundle& b) { return hom0(d4(), a, b).dimension(); };
  const std::vector<int> got{dim(n41(), n32()), dim(n41(), n23()), dim(n32(), n23()), dim(n23(), n41()),
                             dim(n23(), n32())};
  c.expect(got == std::vector<int>{0, 1, 1, 0, 0},
           "Hom(N41,N32), Hom(N41,N23), Hom(N32,N23), Hom(N23,N41), Hom(N23,N32) = " + str(got));
  c.expect(dim(n32(), n41()) == 0, "Hom(N32,N41) = 0");
  c.expect(chi_X(d4(), n41(), n32()) == 0, "chi(N41,N32) = " + std::to_string(chi_X(d4(), n41(), n32())));
  c.expect(chi_X(d4(), n41(), n23()) == 1, "chi(N41,N23) = " + std::to_string(chi_X(d4(), n41(), n23())));
  c.details.push_back("flag   chi(N32,N32) computed " + std::to_string(chi_X(d4(), n32(), n32())) +
                      ", printed 1 (flagged discrepancy, excluded)");
  return c;
}

Criterion tables() {
  Criterion c{"A5", "tables: counts, chains, width, incomparable pair"};
  const auto r = verify_tables();
  for (const char* t : {"D4 branch table", "E three-stage table", "E four-stage table"}) {
    const auto& n = find(r, std::string(t) + ": entry count");
    c.expect(n.pass, std::string(t) + ": " + str(n.computed) + " entries");
  }
  for (const char* t : {"D4 branch table", "E three-stage table (on the D4 star)", "E four-stage table"}) {
    const auto& ch = find(r, std::string(t) + ": every column and row is a chain");
    c.expect(ch.pass, std::string(t) + ": chains, broken = " + str(ch.computed));
  }
  for (const char* t : {"D4 branch table", "E four-stage table"}) {
    const auto& w = find(r, std::string(t) + ": width");
    c.expect(w.pass, std::string(t) + ": width " + str(w.computed));
  }
  c.expect(find(r, "D4 branch table: N31 and N22 are incomparable").pass, "N31 and N22 incomparable");
  return c;
}

Criterion oracle() {
  Criterion c{"A6", "closed-form Hom equals the node-local oracle"};
  const auto r = verify_hom_engine();
  const auto& chk = find(r, "closed-form Hom equals the node-local oracle on the corpus");
  c.expect(chk.pass, "agreement " + str(chk.computed));
  c.expect(chk.computed.at("pairs").get<std::size_t>() >= 500, "corpus has >= 500 ordered pairs");
  return c;
}

void for_each_degrees(std::size_t k, int bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> d(k, -bound);
  while (true) {
    f(d);
    std::size_t i = 0;
    while (i < k && d[i] == bound) d[i++] = -bound;
    if (i == k) return;
    ++d[i];
  }
}

Vector random_automorphism(const SumEndomorphisms& end, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(-3, 3);
  Vector a = end.identity();
  for (int step = 0; step < 6; ++step) {
    Vector e = end.identity();
    std::size_t p = rng() % end.size(), q = rng() % end.size();
    if (p == q) {
      int s = 0;
      while (s == 0) s = coin(rng);
      e[end.offset(p, p)] = s;
    } else {
      for (int k = 0; k < end.hom(p, q).dimension(); ++k) e[end.offset(p, q) + static_cast<std::size_t>(k)] = coin(rng);
    }
    a = end.multiply(e, a);
  }
  return a;
}

std::vector<std::string> invariants(const DecompositionReport& rep) {
  std::vector<std::string> out;
  for (const auto& p : rep.parts)
    for (int k = 0; k < p.multiplicity; ++k)
      out.push_back(p.presentation.c1().to_string() + "/" + std::to_string(p.presentation.rank()));
  std::sort(out.begin(), out.end());
  return out;
}

bool anti_nef(const CurveConfig& cfg, const Cycle& z) {
  for (int c : cfg.components())
    if (intersection(cfg, z, Cycle::reduced(cfg.size(), std::vector<int>{c})) > 0) return false;
  return true;
}

Criterion global_invariants(int min_hom1) {
  Criterion c{"A7", "global invariants"};
  c.expect(min_hom1 >= 0, "min hom1 over every enumerated presentation = " + std::to_string(min_hom1));

  for (const char* k : {"D4", "E6"}) {
    const auto cfg = CurveConfig::build(k);
    std::size_t count = 0, bad = 0;
    for (const auto& supp : connected_subsets(cfg, cfg.components())) {
      for_each_degrees(supp.size(), 3, [&](const std::vector<int>& d) {
        LineBundle l(cfg, supp, d);
        ++count;
        if (h0(cfg, l) - h1(cfg, l) != euler_characteristic(l)) ++bad;
      });
    }
    c.expect(bad == 0, std::string(k) + ": h0 - h1 = chi on " + std::to_string(count) + " bundles, " +
                           std::to_string(bad) + " mismatches");
  }

  std::mt19937 rng(20260415);
  std::vector<ExtPresentation> cases;
  cases.push_back(universal_extension(d4(), {chain_l(0), chain_l(1)}, {o_c4()}));
  cases.push_back(universal_extension(d4(), {chain_l(0), chain_l(1), chain_l(2)}, {o_c4()}));
  cases.push_back(universal_extension(d4(), {n41(), n32(), n23()}, {o_c4()}));
  cases.push_back(
      universal_extension(d4(), {chain_l(0), chain_l(0), chain_l(1)}, {o_c4(), LineBundle(d4(), {4}, {1})}));
  cases.push_back(universal_extension(d4(), {n41(), n41(), n23()}, {o_c4(), o_c4()}));
  std::size_t stable = 0;
  for (const auto& pres : cases) {
    const auto base = invariants(decompose(pres));
    PresentationActions act(pres);
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
      Vector a = random_automorphism(act.end_f(), rng);
      Vector b = random_automorphism(act.end_g(), rng);
      ExtPresentation moved(pres.config(), pres.f(), pres.g(), act.transport(a, pres.epsilon(), b));
      ok = ok && invariants(decompose(moved)) == base;
    }
    if (ok) ++stable;
  }
  c.expect(stable == cases.size(), "decomposition multisets stable under 100 random automorphisms in " +
                                       std::to_string(stable) + "/" + std::to_string(cases.size()) + " cases");

  std::vector<std::string> kinds;
  for (int n = 1; n <= 8; ++n) kinds.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) kinds.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) kinds.push_back("E" + std::to_string(n));
  for (const auto& k : kinds) {
    const auto cfg = CurveConfig::build(k);
    const Cycle z = fundamental_cycle(cfg);
    // Every positive anti-nef cycle below Z must be Z itself.
    std::size_t smaller = 0;
    std::vector<int> y(static_cast<std::size_t>(cfg.size()), 0);
    while (true) {
      std::size_t i = 0;
      while (i < y.size() && y[i] == z.multiplicities()[i]) y[i++] = 0;
      if (i == y.size()) break;
      ++y[i];
      Cycle cy(y);
      if (!(cy == z) && anti_nef(cfg, cy)) ++smaller;
    }
    c.expect(anti_nef(cfg, z) && smaller == 0, k + ": Z = " + z.to_string() + " anti-nef, " +
                                                   std::to_string(smaller) + " smaller anti-nef cycles");
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> all;
  int min_hom1 = 0;
  try {
    all.push_back(unbounded_rank());
    all.push_back(rank3_criterion());
    all.push_back(rigid_bound(min_hom1));
    all.push_back(numeric_anchors());
    all.push_back(tables());
    all.push_back(oracle());
    all.push_back(global_invariants(min_hom1));
  } catch (const std::exception& e) {
    std::cout << "acceptance run aborted: " << e.what() << "\n";
    return 2;
  }
  bool ok = true;
  for (const auto& c : all) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << "\n";
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
    ok = ok && c.pass;
  }
  return ok ? 0 : 1;
}
