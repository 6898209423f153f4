#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adesheaf/errors.hpp"
#include "adesheaf/io.hpp"

using namespace ade;

TEST_CASE("rationals round trip") {
  CHECK(to_json(Rational(3)) == Json(3));
  CHECK(to_json(Rational(-2, 6)) == Json("-1/3"));
  CHECK(rational_from_json(Json("4/6")) == Rational(2, 3));
  CHECK(rational_from_json(Json(-5)) == Rational(-5));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), InvalidInput);
}

TEST_CASE("config and cycle") {
  const auto d4 = CurveConfig::build("D4");
  auto j = to_json(d4);
  CHECK(j.dump() == R"({"kind":"D4","edges":[[1,3],[2,3],[3,4]]})");
  CHECK(to_json(d4, fundamental_cycle(d4)).dump() == R"({"kind":"D4","mult":[1,1,2,1]})");
  auto dot = to_dot(d4);
  CHECK(dot.find("C3 -- C4") != std::string::npos);
}

TEST_CASE("bundles round trip") {
  const auto e6 = CurveConfig::build("E6");
  LineBundle l(e6, {3, 5, 2}, {0, -1, 4});
  auto back = bundle_from_json(e6, to_json(l));
  CHECK(back == l);
  // Missing degrees default to zero.
  CHECK(bundle_from_json(e6, load_json(R"({"support":[5]})")) == LineBundle(e6, {5}, {0}));
  CHECK_THROWS_AS(bundle_from_json(e6, load_json(R"({"support":[1,4]})")), InvalidInput);
  CHECK_THROWS_AS(bundle_from_json(e6, load_json(R"({"support":[1],"deg":{"2":1}})")), InvalidInput);
  CHECK_THROWS_AS(bundle_from_json(e6, load_json(R"({"deg":{}})")), InvalidInput);
  CHECK_THROWS_AS(bundle_from_json(e6, load_json(R"({"support":"x"})")), InvalidInput);
}

TEST_CASE("presentations") {
  auto j = load_json(R"({"config":"D4",
    "F":[{"support":[1,3],"deg":{"1":1,"3":1}},{"support":[2,3],"deg":{"2":0,"3":1}}],
    "G":[{"support":[4]}]})");
  auto u = presentation_from_json(j);
  CHECK(u.epsilon()(0, 0) == Rational(1));
  CHECK(u.epsilon()(1, 0) == Rational(1));
  j["epsilon"] = Json::array({Json::array({"1/2"}), Json::array({0})});
  auto p = presentation_from_json(j);
  CHECK(p.epsilon()(0, 0) == Rational(1, 2));
  CHECK(p.epsilon()(1, 0).is_zero());
  auto again = presentation_from_json(to_json(p));
  CHECK(again.f() == p.f());
  CHECK(again.g() == p.g());
  CHECK(again.epsilon() == p.epsilon());
  CHECK(to_json(p).at("rank") == 2);

  j["epsilon"] = Json::array({Json::array({1})});
  CHECK_THROWS_AS(presentation_from_json(j), InvalidInput);
  CHECK_THROWS_AS(presentation_from_json(load_json(R"({"F":[]})")), InvalidInput);
  CHECK_THROWS_AS(presentation_from_json(load_json(R"({"config":"Q7"})")), InvalidInput);
  CHECK_THROWS_AS(load_json("{not json"), InvalidInput);
  CHECK_THROWS_AS(load_json("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("hom space export lists node values") {
  const auto d4 = CurveConfig::build("D4");
  LineBundle a(d4, {1, 3}, {1, 1}), b(d4, {1, 2, 3}, {2, 1, 1});
  auto j = to_json(hom0(d4, a, b), d4);
  CHECK(j.at("dim") == 1);
  CHECK(j.at("common") == Json::array({1, 3}));
  CHECK(j.at("twisted_nodes") == Json::array({Node::between(2, 3).name()}));
  CHECK(j.at("basis_values").size() == 1);
  CHECK(j.at("basis_values")[0].size() == j.at("nodes").size());
}

TEST_CASE("serialization is deterministic") {
  const auto d4 = CurveConfig::build("D4");
  auto run = [&] {
    auto pres = universal_extension(d4, {LineBundle(d4, {1, 3}, {1, 1}), LineBundle(d4, {2, 3}, {0, 1})},
                                    {LineBundle(d4, {4}, {0})});
    return to_json(decompose(pres)).dump() + to_json(is_OX_rigid(pres)).dump();
  };
  CHECK(run() == run());
}
