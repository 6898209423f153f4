#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adesheaf/errors.hpp"
#include "adesheaf/verify.hpp"

using namespace ade;

namespace {

const Check* find(const VerificationReport& r, const std::string& claim) {
  for (const auto& c : r.checks)
    if (c.claim == claim) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("status rules") {
  VerificationReport r;
  CHECK(r.status() == Status::Pass);
  Check info;
  info.informational = true;
  r.checks.push_back(info);
  CHECK(r.status() == Status::Pass);
  r.partial = true;
  CHECK(r.status() == Status::Partial);
  Check bad;
  r.checks.push_back(bad);
  CHECK(r.status() == Status::Fail);
  CHECK(exit_code(Status::Pass) == 0);
  CHECK(exit_code(Status::Fail) == 1);
  CHECK(exit_code(Status::Partial) == 2);
}

TEST_CASE("unbounded rank suite") {
  auto r = verify_unbounded_rank(6);
  CHECK(r.status() == Status::Pass);
  const Check* h = find(r, "U_{0..2}: hom1(E,E)");
  REQUIRE(h != nullptr);
  CHECK(h->informational);
  CHECK(h->computed == 4);
  auto one = verify_unbounded_rank(1);
  CHECK(one.status() == Status::Pass);
  CHECK(find(one, "U_{0..0}: indecomposable")->pass);
  CHECK_THROWS_AS(verify_unbounded_rank(0), InvalidInput);
}

TEST_CASE("tables suite") {
  auto r = verify_tables();
  CHECK(r.status() == Status::Pass);
  CHECK(find(r, "D4 branch table: entry count")->computed == 18);
  CHECK(find(r, "E three-stage table: entry count")->computed == 18);
  CHECK(find(r, "E four-stage table: entry count")->computed == 42);
  CHECK(find(r, "D4 branch table: N31 and N22 are incomparable")->pass);
  CHECK(find(r, "E four-stage table: width")->computed == 3);
  CHECK(find(r, "E three-stage table: misprint at row 6, column 1")->informational);
}

TEST_CASE("hom engine suite") {
  auto r = verify_hom_engine();
  CHECK(r.status() == Status::Pass);
  const Check* chi = find(r, "chi(N32, N32)");
  REQUIRE(chi != nullptr);
  CHECK(chi->informational);
  CHECK_FALSE(chi->pass);
  CHECK(chi->computed == 2);
  CHECK(find(r, "closed-form Hom equals the node-local oracle on the corpus")->pass);
}

TEST_CASE("rigid bound suite") {
  const auto d4 = CurveConfig::build("D4");
  auto empty = verify_rigid_bound(d4, EnumerationBounds{0, 0, {}});
  CHECK(empty.status() == Status::Pass);

  auto big = verify_rigid_bound(d4, EnumerationBounds{1, 9, {}});
  CHECK(big.partial);
  REQUIRE_FALSE(big.notes.empty());
  CHECK(big.notes[0].find("clamped") != std::string::npos);

  // Rank-4 rigid indecomposables exist within the default bounds.
  auto r = verify_rigid_bound(d4, EnumerationBounds{});
  CHECK(r.status() == Status::Fail);
  const Check* bound = find(r, "no rigid indecomposable of rank >= 4");
  REQUIRE(bound != nullptr);
  CHECK_FALSE(bound->pass);
  CHECK(bound->computed.at("max_rigid_rank") == 4);
  CHECK(bound->computed.contains("witness"));
  CHECK(find(r, "enumeration finds a rigid indecomposable of rank 3")->pass);
  CHECK(find(r, "rank-3 example on the D4 star: rigid")->pass);

  CHECK_THROWS_AS(verify_rigid_bound(CurveConfig::build("A3"), EnumerationBounds{}), Unsupported);
}

TEST_CASE("rank-3 example moves to E") {
  for (const char* k : {"E6", "E7", "E8", "D6"}) {
    const auto cfg = CurveConfig::build(k);
    auto u = rank3_example(cfg);
    CHECK(u.rank() == 3);
    CHECK(is_OX_rigid(u).rigid);
    CHECK(is_indecomposable(u));
  }
}

TEST_CASE("reports are byte-stable") {
  CHECK(to_json(verify_tables()).dump() == to_json(verify_tables()).dump());
  CHECK(to_json(verify_unbounded_rank(4)).dump() == to_json(verify_unbounded_rank(4)).dump());
}
