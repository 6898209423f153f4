#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adesheaf/curve_config.hpp"
#include "adesheaf/errors.hpp"
#include "adesheaf/linalg.hpp"

using namespace ade;

namespace {

Cycle basis_cycle(int n, int i) {
  Cycle c(n);
  c[i] = 1;
  return c;
}

bool anti_nef(const CurveConfig& cfg, const Cycle& z) {
  for (int i = 1; i <= cfg.size(); ++i)
    if (intersection(cfg, z, basis_cycle(cfg.size(), i)) > 0) return false;
  return true;
}

// Every positive cycle below z, by odometer.
bool has_smaller_anti_nef(const CurveConfig& cfg, const Cycle& z) {
  const int n = cfg.size();
  Cycle y(n);
  while (true) {
    int i = 1;
    while (i <= n && y[i] == z[i]) y[i++] = 0;
    if (i > n) return false;
    ++y[i];
    if (y != z && !y.is_zero() && anti_nef(cfg, y)) return true;
  }
}

}  // namespace

TEST_CASE("D4 is a star around C3") {
  auto cfg = CurveConfig::build("D4");
  for (int c : {1, 2, 4}) {
    CHECK(cfg.neighbors(c) == std::vector<int>{3});
  }
  CHECK(cfg.neighbors(3) == std::vector<int>{1, 2, 4});
}

TEST_CASE("A1 has no edges") {
  auto cfg = CurveConfig::build("A1");
  CHECK(cfg.size() == 1);
  CHECK(cfg.edges().empty());
}

TEST_CASE("E6 arms from the branch component") {
  auto cfg = CurveConfig::build("E6");
  CHECK(cfg.neighbors(3) == std::vector<int>{2, 4, 5});
  CHECK(cfg.neighbors(2) == std::vector<int>{1, 3});
  CHECK(cfg.neighbors(5) == std::vector<int>{3, 6});
  CHECK(cfg.neighbors(4) == std::vector<int>{3});
}

TEST_CASE("out-of-range kinds are rejected") {
  CHECK_THROWS_AS(CurveConfig::build("D3"), InvalidInput);
  CHECK_THROWS_AS(CurveConfig::build("E9"), InvalidInput);
  CHECK_THROWS_AS(CurveConfig::build("A0"), InvalidInput);
  CHECK_THROWS_AS(CurveConfig::build("F4"), InvalidInput);
  CHECK_THROWS_AS(CurveConfig::build("D"), InvalidInput);
}

TEST_CASE("every config is a tree with a negative definite form") {
  for (const char* k : {"A1", "A2", "A5", "D4", "D5", "D7", "E6", "E7", "E8"}) {
    CAPTURE(k);
    auto cfg = CurveConfig::build(k);
    CHECK(static_cast<int>(cfg.edges().size()) == cfg.size() - 1);
    CHECK(cfg.is_connected(cfg.components()));
    auto m = cfg.intersection_matrix();
    const auto n = static_cast<std::size_t>(cfg.size());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(m[i][i] == -2);
      for (std::size_t j = 0; j < n; ++j) CHECK(m[i][j] == m[j][i]);
    }
    // Leading principal minors alternate in sign.
    for (std::size_t k = 1; k <= n; ++k) {
      Matrix lead(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead(i, j) = m[i][j];
      RowEchelon e = rref(lead);
      REQUIRE(e.pivots.size() == k);
      // det via elimination on a copy
      Matrix a = lead;
      Rational det = 1;
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (a(p, c).is_zero()) ++p;
        if (p != c) {
          for (std::size_t j = 0; j < k; ++j) std::swap(a(p, j), a(c, j));
          det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < k; ++r) {
          Rational f = a(r, c) / a(c, c);
          for (std::size_t j = c; j < k; ++j) a(r, j) -= f * a(c, j);
        }
      }
      CHECK((k % 2 == 1 ? det < Rational(0) : det > Rational(0)));
    }
  }
}

TEST_CASE("intersection pairing values") {
  auto d4 = CurveConfig::build("D4");
  std::vector<int> c13{1, 3}, c23{2, 3}, c123{1, 2, 3};
  CHECK(intersection(d4, Cycle::reduced(4, c13), Cycle::reduced(4, c23)) == 0);
  CHECK(intersection(d4, Cycle::reduced(4, c13), Cycle::reduced(4, c123)) == -1);
  CHECK(intersection(d4, Cycle::reduced(4, c23), Cycle::reduced(4, c23)) == -2);
  CHECK(intersection(d4, Cycle::reduced(4, c13), Cycle(4)) == 0);
  CHECK_THROWS_AS(intersection(d4, Cycle(5), Cycle(4)), InvalidInput);
}

TEST_CASE("fundamental cycles") {
  for (int n = 1; n <= 8; ++n) {
    auto cfg = CurveConfig::build("A" + std::to_string(n));
    CHECK(fundamental_cycle(cfg) == Cycle::reduced(n, cfg.components()));
  }
  for (int n = 4; n <= 10; ++n) {
    auto cfg = CurveConfig::build("D" + std::to_string(n));
    std::vector<int> expected(static_cast<std::size_t>(n), 2);
    expected[0] = expected[1] = expected[static_cast<std::size_t>(n - 1)] = 1;
    CHECK(fundamental_cycle(cfg) == Cycle(expected));
  }
  CHECK(fundamental_cycle(CurveConfig::build("E6")) == Cycle(std::vector<int>{1, 2, 3, 2, 2, 1}));
  CHECK(fundamental_cycle(CurveConfig::build("E7")) == Cycle(std::vector<int>{2, 3, 4, 2, 3, 2, 1}));
  // Highest root of E8 under this labeling.
  CHECK(fundamental_cycle(CurveConfig::build("E8")) == Cycle(std::vector<int>{2, 4, 6, 3, 5, 4, 3, 2}));
}

TEST_CASE("fundamental cycle is anti-nef and minimal") {
  for (const char* k : {"A3", "A8", "D4", "D5", "D6", "D8", "E6", "E7", "E8"}) {
    CAPTURE(k);
    auto cfg = CurveConfig::build(k);
    Cycle z = fundamental_cycle(cfg);
    CHECK(anti_nef(cfg, z));
    CHECK_FALSE(has_smaller_anti_nef(cfg, z));
  }
}

TEST_CASE("cycle formatting and order") {
  Cycle z(std::vector<int>{1, 0, 2, -1});
  CHECK(z.to_string() == "C1+2C3-C4");
  CHECK(Cycle(3).to_string() == "0");
  CHECK(Cycle(std::vector<int>{1, 1, 0}).leq(Cycle(std::vector<int>{1, 2, 0})));
  CHECK_FALSE(Cycle(std::vector<int>{1, 1, 1}).leq(Cycle(std::vector<int>{1, 2, 0})));
}

TEST_CASE("subtrees") {
  auto d4 = CurveConfig::build("D4");
  std::vector<int> chain{1, 2, 3};
  Subtree t = subtree(d4, chain);
  CHECK(t.internal_edges.size() == 2);
  REQUIRE(t.boundary.size() == 1);
  CHECK(t.boundary[0] == std::pair{3, 4});
  std::vector<int> all{1, 2, 3, 4};
  CHECK(subtree(d4, all).boundary.empty());
  std::vector<int> bad{1, 2};
  CHECK_THROWS_AS(subtree(d4, bad), InvalidInput);
}

TEST_CASE("E6 contains a D4 star under the relabeling") {
  auto d4 = CurveConfig::build("D4");
  auto e6 = CurveConfig::build("E6");
  std::vector<int> image{2, 4, 3, 5};
  CHECK(is_induced_embedding(d4, e6, image));
  std::vector<int> wrong{1, 2, 3, 4};
  CHECK_FALSE(is_induced_embedding(d4, e6, wrong));
}

TEST_CASE("node points are distinct per component") {
  auto e8 = CurveConfig::build("E8");
  const auto& nb = e8.neighbors(3);
  REQUIRE(nb.size() == 3);
  CHECK(e8.node_point(3, 2).x == Rational(1));
  CHECK(e8.node_point(3, 2).y == Rational(0));
  CHECK(e8.node_point(3, 4).x == Rational(0));
  CHECK(e8.node_point(3, 5).x == Rational(1));
  CHECK(e8.node_point(3, 5).y == Rational(1));
  CHECK_THROWS_AS(e8.node_point(3, 7), InvalidInput);
}
