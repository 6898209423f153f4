#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "adesheaf/errors.hpp"
#include "adesheaf/tree_bundles.hpp"

using namespace ade;

namespace {

// Runs f on every degree vector in [-bound, bound]^k.
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

}  // namespace

TEST_CASE("single component") {
  auto d4 = CurveConfig::build("D4");
  for (int d = -3; d <= 5; ++d) {
    LineBundle l(d4, {3}, {d});
    CHECK(h0(d4, l) == std::max(0, d + 1));
    CHECK(h1(d4, l) == std::max(0, -d - 1));
  }
}

TEST_CASE("L_l on the D4 chain") {
  auto d4 = CurveConfig::build("D4");
  for (int l = 1; l <= 5; ++l) {
    LineBundle bundle(d4, {1, 2, 3}, {l, -l, 0});
    CHECK(h0(d4, bundle) == l);
    // Every section vanishes along C3, in particular at the C3 point toward C4.
    SectionSpace s = sections(d4, bundle);
    for (const Section& sec : s.basis) {
      CHECK(node_value(d4, bundle, sec, Node::between(3, 4)).is_zero());
    }
  }
}

TEST_CASE("named small values") {
  auto d4 = CurveConfig::build("D4");
  LineBundle a(d4, {1, 3}, {-1, 0});
  CHECK(h0(d4, a) == 0);
  CHECK(h1(d4, a) == 0);
  LineBundle b(d4, {1, 3}, {-2, -2});
  CHECK(h0(d4, b) == 0);
  CHECK(h1(d4, b) == 3);
  CHECK(euler_characteristic(b) == -3);
}

TEST_CASE("trivial bundle has a nowhere vanishing section") {
  for (const char* k : {"D4", "E6", "E8"}) {
    auto cfg = CurveConfig::build(k);
    std::vector<int> all = cfg.components();
    for (const auto& supp : connected_subsets(cfg, all)) {
      LineBundle l = LineBundle::structure_sheaf(cfg, supp);
      SectionSpace s = sections(cfg, l);
      REQUIRE(s.dimension() == 1);
      for (std::size_t n = 0; n < s.nodes.size(); ++n) CHECK_FALSE(s.values[n][0].is_zero());
    }
  }
}

TEST_CASE("generic section of O(1) is nonzero at a non-root node") {
  auto d4 = CurveConfig::build("D4");
  LineBundle l(d4, {3}, {1});
  SectionSpace s = sections(d4, l);
  REQUIRE(s.dimension() == 2);
  Section generic{{HomogeneousPoly::zero(1)}};
  generic.blocks[0].coeffs = {Rational(1), Rational(1)};
  CHECK_FALSE(node_value(d4, l, generic, Node::between(3, 4)).is_zero());
  CHECK_THROWS_AS(node_value(d4, LineBundle(d4, {1}, {0}), generic, Node::between(2, 3)), InvalidInput);
}

TEST_CASE("Euler identity on D4 and E6 subtrees") {
  for (const char* k : {"D4", "E6"}) {
    auto cfg = CurveConfig::build(k);
    std::vector<int> all = cfg.components();
    for (const auto& supp : connected_subsets(cfg, all)) {
      if (supp.size() > 4) continue;  // 7^k vectors; four components is already 2401
      for_each_degrees(supp.size(), 3, [&](const std::vector<int>& d) {
        LineBundle l(cfg, supp, d);
        int gluing = h0(cfg, l) - h1(cfg, l);
        REQUIRE(gluing == euler_characteristic(l));
      });
    }
  }
}

TEST_CASE("h0 is monotone in each degree") {
  auto e6 = CurveConfig::build("E6");
  std::vector<int> supp{2, 3, 4, 5};
  for_each_degrees(4, 2, [&](const std::vector<int>& d) {
    int base = h0(e6, LineBundle(e6, supp, d));
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto up = d;
      ++up[i];
      REQUIRE(h0(e6, LineBundle(e6, supp, up)) >= base);
    }
  });
}

TEST_CASE("bundle validation and naming") {
  auto d4 = CurveConfig::build("D4");
  CHECK_THROWS_AS(LineBundle(d4, {1, 2}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(LineBundle(d4, {}, {}), InvalidInput);
  CHECK_THROWS_AS(LineBundle(d4, {1, 1}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(LineBundle(d4, {1}, {0, 0}), InvalidInput);
  LineBundle l(d4, {3, 1}, {0, -1});
  CHECK(l.support() == std::vector<int>{1, 3});
  CHECK(l.degrees() == std::vector<int>{-1, 0});
  CHECK(l.name() == "O_{C1+C3}(-1,0)");
  CHECK(l == LineBundle(d4, {1, 3}, {-1, 0}));
}
