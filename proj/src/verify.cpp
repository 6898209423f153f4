// verify.cpp
#include "adesheaf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "adesheaf/errors.hpp"

namespace ade {

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::Literature: return "literature";
    case Origin::Computed: return "computed";
    case Origin::Trivial: return "trivial";
  }
  return "computed";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Partial: return "partial";
  }
  return "fail";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Partial: return 2;
  }
  return 1;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass && !c.informational; }));
}

Status VerificationReport::status() const {
  if (failures() > 0) return Status::Fail;
  return partial ? Status::Partial : Status::Pass;
}

void VerificationReport::canonicalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.claim < b.claim; });
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"claim", c.claim},
           {"reference", c.reference},
           {"computed", c.computed},
           {"expected", c.expected},
           {"origin", origin_name(c.origin)},
           {"pass", c.pass},
           {"informational", c.informational}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return Json{{"suite", report.suite},
              {"status", status_name(report.status())},
              {"failures", report.failures()},
              {"notes", report.notes},
              {"checks", checks}};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add(VerificationReport& rep, std::string claim, std::string reference, Json computed, Json expected,
         Origin origin, bool informational = false, std::string note = {}) {
  Check c;
  c.pass = computed == expected;
  c.claim = std::move(claim);
  c.reference = std::move(reference);
  c.computed = std::move(computed);
  c.expected = std::move(expected);
  c.origin = origin;
  c.informational = informational;
  c.note = std::move(note);
  rep.checks.push_back(std::move(c));
}

const CurveConfig& d4() {
  static const CurveConfig cfg = CurveConfig::build("D4");
  return cfg;
}
const CurveConfig& e6() {
  static const CurveConfig cfg = CurveConfig::build("E6");
  return cfg;
}

LineBundle chain_l(int n) { return LineBundle(d4(), {1, 2, 3}, {n, -n, 0}); }
LineBundle o_c4() { return LineBundle(d4(), {4}, {0}); }
LineBundle n41() { return LineBundle(d4(), {1, 3}, {1, 1}); }
LineBundle n32() { return LineBundle(d4(), {2, 3}, {0, 1}); }
LineBundle n23() { return LineBundle(d4(), {1, 2, 3}, {2, 1, 1}); }

// E tables are generated with a_1 shifted by -2 so that they line up with
// the printed tables at a = 0.
std::vector<int> e_anchors(const CurveConfig& cfg) {
  std::vector<int> a(static_cast<std::size_t>(cfg.size()), 0);
  a[0] = -2;
  return a;
}

// Printed entries, "13:1,0" = O_{C1+C3}(1,0).
LineBundle parse_entry(const CurveConfig& cfg, const std::string& text) {
  const auto colon = text.find(':');
  std::vector<int> support, degrees;
  for (std::size_t k = 0; k < colon; ++k) support.push_back(text[k] - '0');
  std::stringstream in(text.substr(colon + 1));
  std::string item;
  while (std::getline(in, item, ',')) degrees.push_back(std::stoi(item));
  return LineBundle(cfg, support, degrees);
}

struct PrintedTable {
  std::string name;
  const CurveConfig* config;
  std::vector<int> stages;
  std::vector<int> anchors;
  std::size_t count;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::size_t, std::size_t>> misprints;  // 1-based (row, col)
};

std::vector<PrintedTable> printed_tables() {
  PrintedTable d{"D4 branch table", &d4(), {1, 3, 2}, {}, 18,
                 {{"13:1,0", "123:1,0,1", "123:1,1,1"},
                  {"13:2,0", "123:2,0,1", "123:2,1,1"},
                  {"3:0", "23:0,1", "23:1,1"},
                  {"13:1,1", "123:1,0,2", "123:1,1,2"},
                  {"13:2,1", "123:2,0,2", "123:2,1,2"},
                  {"3:1", "23:0,2", "23:1,2"}},
                 {}};
  PrintedTable e3{"E three-stage table", &e6(), {1, 2, 3}, e_anchors(e6()), 18,
                  {{"12:-1,0", "123:-1,1,0", "123:-1,1,1"},
                   {"12:0,0", "123:0,1,0", "123:0,1,1"},
                   {"2:0", "23:1,0", "23:1,1"},
                   {"12:-1,1", "123:-1,2,0", "123:-1,2,1"},
                   {"12:0,1", "123:0,2,0", "123:0,2,1"},
                   {"2:0", "23:2,0", "23:2,1"}},
                  {{6, 1}}};
  PrintedTable e4{"E four-stage table", &e6(), {1, 2, 3, 4}, e_anchors(e6()), 42,
                  {{"123:-1,1,0", "1234:-1,1,1,0", "1234:-1,1,1,1"},
                   {"123:0,1,0", "1234:0,1,1,0", "1234:0,1,1,1"},
                   {"23:1,0", "234:1,1,0", "234:1,1,1"},
                   {"123:-1,2,0", "1234:-1,2,1,0", "1234:-1,2,1,1"},
                   {"123:0,2,0", "1234:0,2,1,0", "1234:0,2,1,1"},
                   {"23:2,0", "234:2,1,0", "234:2,1,1"},
                   {"3:0", "34:1,0", "34:1,1"},
                   {"123:-1,1,1", "1234:-1,1,2,0", "1234:-1,1,2,11"},
                   {"123:0,1,1", "1234:0,1,2,0", "1234:0,1,2,1"},
                   {"23:1,1", "234:1,2,0", "234:1,2,1"},
                   {"123:-1,2,1", "1234:-1,2,2,0", "1234:-1,2,2,1"},
                   {"123:0,2,1", "1234:0,2,2,0", "1234:0,2,2,1"},
                   {"23:2,1", "234:2,2,0", "234:2,2,1"},
                   {"3:1", "34:2,0", "34:2,1"}},
                  {{8, 3}}};
  return {d, e3, e4};
}

std::size_t cell(std::size_t row, std::size_t col) { return (row - 1) * 3 + (col - 1); }

void poset_checks(VerificationReport& rep, const std::string& name, const BundlePoset& p, std::size_t rows,
                  bool check_width) {
  const auto ax = check_axioms(p);
  add(rep, name + ": relation is a partial order", "order axioms", ax.ok(), true, Origin::Trivial);
  std::vector<std::string> broken;
  for (std::size_t c = 1; c <= 3; ++c) {
    std::vector<std::size_t> col;
    for (std::size_t r = 1; r <= rows; ++r) col.push_back(cell(r, c));
    if (!is_chain(p, col)) broken.push_back("column " + std::to_string(c));
  }
  for (std::size_t r = 1; r <= rows; ++r)
    if (!is_chain(p, {cell(r, 1), cell(r, 2), cell(r, 3)})) broken.push_back("row " + std::to_string(r));
  add(rep, name + ": every column and row is a chain", "table caption", broken, Json::array(), Origin::Literature);
  if (check_width) {
    add(rep, name + ": width", "at most three minimal elements", width(p), 3, Origin::Literature);
    add(rep, name + ": branch-and-bound antichain agrees with Dilworth", "two independent routes",
        max_antichain(p).size(), width(p), Origin::Computed);
  }
}

// Same D4 star as the rank-3 example, for D(n) and E(n).
std::vector<int> star_image(const CurveConfig& config) {
  switch (config.kind().type) {
    case AdeType::D: return {1, 2, 3, 4};
    case AdeType::E: return {2, 4, 3, 5};
    default: throw Unsupported("rank bound suite covers D(n) and E(n) only, got " + config.kind().name());
  }
}

}  // namespace

ExtPresentation rank3_example(const CurveConfig& config) {
  const auto img = star_image(config);
  auto move = [&](const LineBundle& l) {
    std::vector<int> s;
    for (int c : l.support()) s.push_back(img[static_cast<std::size_t>(c - 1)]);
    return LineBundle(config, s, l.degrees());
  };
  return universal_extension(config, {move(n41()), move(n32()), move(n23())}, {move(o_c4())});
}

BundlePoset d4_table_poset() {
  return build_poset(d4(), summand_candidates(d4(), {1, 3, 2}, {}).flat(), {o_c4()}, PosetSide::Sub);
}

BundlePoset e_four_stage_poset() {
  return build_poset(e6(), summand_candidates(e6(), {1, 2, 3, 4}, e_anchors(e6())).flat(),
                     {LineBundle(e6(), {5}, {0})}, PosetSide::Sub);
}

VerificationReport verify_unbounded_rank(int r_max) {
  if (r_max < 1) throw InvalidInput("rmax must be at least 1");
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "rank";
  std::vector<LineBundle> f;
  for (int r = 1; r <= r_max; ++r) {
    f.push_back(chain_l(r - 1));
    const auto u = universal_extension(d4(), f, {o_c4()});
    const std::string tag = "U_{0.." + std::to_string(r - 1) + "}";
    add(rep, tag + ": rank", "indecomposables of every rank", u.rank(), r, Origin::Literature);
    const auto end = end_algebra(u);
    add(rep, tag + ": End/rad is one-dimensional", "indecomposables of every rank",
        end.algebra.semisimple_dimension(), 1, Origin::Literature);
    add(rep, tag + ": indecomposable", "indecomposables of every rank", is_indecomposable(u), true,
        Origin::Literature);
    // Off-diagonal Hom(L_a, L_b) must act as zero on the germ, the diagonal as identity.
    PresentationActions act(u);
    bool diagonal = true;
    for (std::size_t i2 = 0; i2 < f.size(); ++i2)
      for (std::size_t i1 = 0; i1 < f.size(); ++i1)
        for (int k = 0; k < act.end_f().hom(i2, i1).dimension(); ++k)
          diagonal = diagonal && (act.post_scalar(i2, i1, static_cast<std::size_t>(k), 0).is_zero() == (i1 != i2));
    add(rep, tag + ": End(F) acts on the germs through diagonal matrices", "off-diagonal maps vanish at the node", diagonal, true,
        Origin::Literature);
    if (r == 3) {
      add(rep, tag + ": hom1(E,E)", "rigidity formula 2 dim End + c1^2", is_OX_rigid(u).hom1, 4, Origin::Computed,
          true, "the rank-3 member of this family is not rigid");
    }
  }
  rep.canonicalize();
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_rigid_bound(const CurveConfig& config, const EnumerationBounds& bounds, int workers) {
  const auto t0 = Clock::now();
  star_image(config);
  VerificationReport rep;
  rep.suite = "rigid " + config.kind().name();
  EnumerationBounds b = bounds;
  if (b.max_f > 5 || b.max_g > 4) {
    b.max_f = std::min(b.max_f, 5);
    b.max_g = std::min(b.max_g, 4);
    rep.partial = true;
    rep.notes.push_back("bounds clamped to max_f = " + std::to_string(b.max_f) +
                        ", max_g = " + std::to_string(b.max_g) + "; coverage is partial");
  }
  rep.notes.push_back("bounded verification over the enumerated family, not a proof");
  const auto res = enumerate_presentations(config, b, workers);
  Json by_rank = res.rigid_indecomposable_by_rank;

  if (res.presentations == 0) {
    add(rep, "enumeration is empty", "empty bounds", res.presentations, 0, Origin::Trivial);
    add(rep, "no rigid indecomposable of rank >= 4", "rank bound for rigid sheaves", res.max_rigid_rank, 0,
        Origin::Trivial, false, "vacuous");
    rep.canonicalize();
    rep.runtime_seconds = seconds_since(t0);
    return rep;
  }

  add(rep, "hom1 >= 0 on every enumerated presentation", "hom1 is a dimension", res.min_hom1 >= 0, true,
      Origin::Trivial);
  {
    Check c;
    c.claim = "no rigid indecomposable of rank >= 4";
    c.reference = "rank bound for rigid sheaves";
    c.computed = Json{{"max_rigid_rank", res.max_rigid_rank}, {"by_rank", by_rank}};
    c.expected = Json{{"max_rigid_rank", "<= 3"}};
    c.origin = Origin::Literature;
    c.pass = res.max_rigid_rank <= 3;
    if (!c.pass) {
      for (const auto& w : res.witnesses)
        if (w.rank == res.max_rigid_rank) {
          Json f = Json::array(), g = Json::array();
          for (const auto& l : w.f) f.push_back(l.name());
          for (const auto& l : w.g) g.push_back(l.name());
          c.computed["witness"] = Json{{"F", f}, {"G", g}, {"epsilon", w.epsilon}};
        }
      c.note = "counterexample found; witness re-checked with the full intertwiner solve";
    }
    rep.checks.push_back(std::move(c));
  }
  add(rep, "enumeration finds a rigid indecomposable of rank 3", "rank 3 is attained",
      res.rigid_indecomposable_by_rank.size() > 3 && res.rigid_indecomposable_by_rank[3] > 0, true,
      Origin::Literature);
  add(rep, "rigid witnesses have rigid F and G", "rigidity of the two sides", res.sides_rigid, true,
      Origin::Computed);

  const auto u = rank3_example(config);
  const auto r = is_OX_rigid(u);
  const std::string tag = config.kind().type == AdeType::E ? "rank-3 example moved along 1,2,3,4 -> 2,4,3,5"
                                                             : "rank-3 example on the D4 star";
  add(rep, tag + ": rank", "rank 3 is attained", u.rank(), 3, Origin::Literature);
  add(rep, tag + ": rigid", "rank 3 is attained", r.rigid, true, Origin::Literature);
  add(rep, tag + ": indecomposable", "rank 3 is attained", is_indecomposable(u), true, Origin::Literature);

  rep.notes.push_back("presentations enumerated: " + std::to_string(res.presentations));
  rep.canonicalize();
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_tables() {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "tables";
  for (const auto& t : printed_tables()) {
    const auto gen = summand_candidates(*t.config, t.stages, t.anchors);
    add(rep, t.name + ": entry count", "printed table size", gen.size(), t.count, Origin::Literature);
    std::vector<std::string> mismatches;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t r = 1; r <= t.rows.size(); ++r)
      for (std::size_t c = 1; c <= 3; ++c) {
        const auto printed = parse_entry(*t.config, t.rows[r - 1][c - 1]);
        if (gen.at(r, c) == printed) continue;
        const bool known = std::find(t.misprints.begin(), t.misprints.end(), std::pair{r, c}) != t.misprints.end();
        if (known) {
          seen.insert({r, c});
          add(rep, t.name + ": misprint at row " + std::to_string(r) + ", column " + std::to_string(c),
              "printed entry", gen.at(r, c).name(), printed.name(), Origin::Literature, true,
              "generation rule taken as canonical");
        } else {
          mismatches.push_back("row " + std::to_string(r) + ", column " + std::to_string(c) + ": generated " +
                               gen.at(r, c).name() + ", printed " + printed.name());
        }
      }
    add(rep, t.name + ": generated entries match the printed table", "printed table", mismatches, Json::array(),
        Origin::Literature);
  }

  const auto d = d4_table_poset();
  poset_checks(rep, "D4 branch table", d, 6, true);
  add(rep, "D4 branch table: largest number of minimal elements over all subsets", "at most three minimal elements",
      max_minimal_exhaustive(d), 3, Origin::Literature);
  const std::size_t n31 = cell(3, 1), n22 = cell(2, 2);
  add(rep, "D4 branch table: N31 and N22 are incomparable", "N31 not <= N22", !d.comparable(n31, n22), true,
      Origin::Literature);

  poset_checks(rep, "E four-stage table", e_four_stage_poset(), 14, true);

  // The three-stage table has no partner outside its stages on E6; it is the
  // D4 branch table after C2 <-> C3, so its order is checked there.
  std::vector<int> anchors{-2, 0, 0, 0};
  const auto moved =
      build_poset(d4(), summand_candidates(d4(), {1, 3, 2}, anchors).flat(), {o_c4()}, PosetSide::Sub);
  poset_checks(rep, "E three-stage table (on the D4 star)", moved, 6, false);
  rep.notes.push_back("E three-stage table ordered on D4 via C1->C1, C2->C3, C3->C2 with partner O_{C4}");

  rep.canonicalize();
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_hom_engine() {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.suite = "hom";

  struct Corpus {
    const CurveConfig* config;
    std::vector<LineBundle> bundles;
  };
  std::vector<Corpus> corpora(2);
  corpora[0].config = &d4();
  for (const auto& l : summand_candidates(d4(), {1, 3, 2}, {}).flat()) corpora[0].bundles.push_back(l);
  for (int n = -3; n <= 3; ++n) corpora[0].bundles.push_back(chain_l(n));
  corpora[0].bundles.push_back(o_c4());
  corpora[1].config = &e6();
  for (const auto& l : summand_candidates(e6(), {1, 2, 3}, e_anchors(e6())).flat()) corpora[1].bundles.push_back(l);
  for (const auto& l : summand_candidates(e6(), {1, 2, 3, 4}, e_anchors(e6())).flat()) corpora[1].bundles.push_back(l);
  for (auto& c : corpora) {
    std::sort(c.bundles.begin(), c.bundles.end());
    c.bundles.erase(std::unique(c.bundles.begin(), c.bundles.end()), c.bundles.end());
  }

  std::size_t pairs = 0, agree = 0, symmetric = 0, disjoint = 0, ext_agree = 0;
  std::vector<std::string> disagreements;
  for (const auto& c : corpora)
    for (const auto& a : c.bundles)
      for (const auto& b : c.bundles) {
        ++pairs;
        const int closed = hom0(*c.config, a, b).dimension();
        const int oracle = hom0_oracle(*c.config, a, b);
        if (closed == oracle) {
          ++agree;
        } else if (disagreements.size() < 10) {
          disagreements.push_back(a.name() + " -> " + b.name());
        }
        if (hom1_X(*c.config, a, b) == hom1_X(*c.config, b, a)) ++symmetric;
        bool shared = false;
        for (int x : a.support()) shared = shared || b.contains(x);
        if (!shared) {
          ++disjoint;
          if (ext1_Z(*c.config, a, b).dimension() == hom1_X(*c.config, a, b)) ++ext_agree;
        }
      }
  add(rep, "corpus has at least 500 ordered pairs", "oracle corpus size", pairs >= 500, true, Origin::Trivial);
  {
    Check c;
    c.claim = "closed-form Hom equals the node-local oracle on the corpus";
    c.reference = "independent oracle";
    c.computed = Json{{"pairs", pairs}, {"agree", agree}};
    c.expected = Json{{"pairs", pairs}, {"agree", pairs}};
    c.origin = Origin::Computed;
    c.pass = agree == pairs;
    if (!disagreements.empty()) c.note = "first disagreements: " + Json(disagreements).dump();
    rep.checks.push_back(std::move(c));
  }
  add(rep, "hom1 is symmetric on the corpus", "Serre duality on a CY2 surface", symmetric, pairs, Origin::Computed);
  add(rep, "Ext^1 on the curve equals hom1 on the surface for disjoint supports", "comparison of Ext groups",
      ext_agree, disjoint, Origin::Computed);

  for (int n = -3; n <= 3; ++n) {
    const std::string ln = "L_" + std::to_string(n);
    add(rep, "dim Ext^1(O_{C4}, " + ln + ")", "one germ at C3 ^ C4", ext1_Z(d4(), o_c4(), chain_l(n)).dimension(), 1,
        Origin::Literature);
    add(rep, "dim Hom(O_{C4}, " + ln + ")", "disjoint supports", hom0(d4(), o_c4(), chain_l(n)).dimension(), 0,
        Origin::Literature);
  }
  auto dim = [](const LineBundle& a, const LineBundle& b) { return hom0(d4(), a, b).dimension(); };
  add(rep, "dim Hom(N41, N32)", "N41 and N32 orthogonal", dim(n41(), n32()), 0, Origin::Literature);
  add(rep, "dim Hom(N32, N41)", "N41 and N32 orthogonal", dim(n32(), n41()), 0, Origin::Literature);
  add(rep, "dim Hom(N41, N23)", "N41 maps to N23", dim(n41(), n23()), 1, Origin::Literature);
  add(rep, "dim Hom(N32, N23)", "N32 maps to N23", dim(n32(), n23()), 1, Origin::Literature);
  add(rep, "dim Hom(N23, N41)", "no maps back from N23", dim(n23(), n41()), 0, Origin::Literature);
  add(rep, "dim Hom(N23, N32)", "no maps back from N23", dim(n23(), n32()), 0, Origin::Literature);
  add(rep, "chi(N41, N32)", "Euler pairing equal to zero", chi_X(d4(), n41(), n32()), 0, Origin::Literature);
  add(rep, "chi(N41, N23)", "Euler pairing equal to one", chi_X(d4(), n41(), n23()), 1, Origin::Literature);
  add(rep, "chi(N32, N23)", "direct pairing", chi_X(d4(), n32(), n23()), 1, Origin::Computed);
  add(rep, "chi(N32, N32)", "Euler pairing equal to one", chi_X(d4(), n32(), n32()), 1, Origin::Literature, true,
      "printed value 1 disagrees with -(C2+C3)^2 = 2; flagged discrepancy");

  rep.canonicalize();
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

std::vector<VerificationReport> verify_all(int r_max, int workers) {
  std::vector<VerificationReport> out;
  out.push_back(verify_unbounded_rank(r_max));
  for (const char* k : {"D4", "D5", "E6", "E7", "E8"})
    out.push_back(verify_rigid_bound(CurveConfig::build(k), EnumerationBounds{}, workers));
  out.push_back(verify_tables());
  out.push_back(verify_hom_engine());
  return out;
}

Status combined_status(const std::vector<VerificationReport>& reports) {
  Status s = Status::Pass;
  for (const auto& r : reports) {
    if (r.status() == Status::Fail) return Status::Fail;
    if (r.status() == Status::Partial) s = Status::Partial;
  }
  return s;
}

}  // namespace ade
