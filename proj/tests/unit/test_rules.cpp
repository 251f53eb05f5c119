#include <doctest.h>

#include <algorithm>
#include <set>

#include "blocksieve/rules.hpp"
#include "blocksieve/solver.hpp"

using namespace blocksieve;

namespace {

std::set<RuleId> ids(const std::vector<RuleViolation>& report) {
  std::set<RuleId> out;
  for (const auto& v : report) out.insert(v.rule);
  return out;
}

const RuleViolation* find(const std::vector<RuleViolation>& report, RuleId id) {
  auto it = std::find_if(report.begin(), report.end(), [&](const auto& v) { return v.rule == id; });
  return it == report.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("rule table") {
  CHECK(all_rules().size() == 13);
  CHECK(to_string(RuleId::R11) == "R11");
  CHECK(parse_rule_id("RNC") == RuleId::RNC);
  CHECK_FALSE(parse_rule_id("R10").has_value());
  CHECK(is_active(RuleId::R7, ModeFlags::nsp()));
  CHECK_FALSE(is_active(RuleId::R7, ModeFlags::skew_allowed()));
  CHECK(is_active(RuleId::RNC, ModeFlags::skew_allowed()));
  CHECK_FALSE(is_active(RuleId::RNC, ModeFlags{}));
  CHECK(is_active(RuleId::R6, ModeFlags{}));
}

TEST_CASE("minimal form passes under nsp") {
  CHECK(check(minimal_form(3, 2), ModeFlags::nsp()).empty());
  CHECK(check(minimal_form(2, 2), ModeFlags::nsp()).empty());
}

TEST_CASE("broken symmetry and missing necessary blocks") {
  const BlockSystem s(3, {{{0, 1, 1}, 3}, {{0, 2, 2}, 12}, {{1, 2, 1}, 6}});
  const auto report = check(s, ModeFlags::nsp());
  const auto got = ids(report);
  CHECK(got.contains(RuleId::R3));
  CHECK(got.contains(RuleId::R5));
  CHECK(got.contains(RuleId::R7));

  const auto* r3 = find(report, RuleId::R3);
  REQUIRE(r3 != nullptr);
  CHECK(r3->message.find("B(1,1,2)") != std::string::npos);
}

TEST_CASE("Sweedler table under both regimes") {
  const BlockSystem s(2, {{{0, 1, 1}, 2}, {{1, 1, 1}, 2}});
  CHECK(check(s, ModeFlags::skew_allowed()).empty());
  const auto report = check(s, ModeFlags::nsp());
  const auto* r7 = find(report, RuleId::R7);
  REQUIRE(r7 != nullptr);
  CHECK(r7->message.find("(1,1,1) must be absent") != std::string::npos);
}

TEST_CASE("explain") {
  const BlockSystem s(3, {{{0, 1, 1}, 3}, {{0, 2, 2}, 12}, {{1, 2, 1}, 6}});
  const auto report = check(s, ModeFlags{});
  const auto* r3 = find(report, RuleId::R3);
  REQUIRE(r3 != nullptr);
  CHECK(explain(*r3).starts_with("R3 antipode symmetry: dim B(1,2,1)=6 but dim B(1,1,2)=0"));

  const BlockSystem top(2, {{{0, 1, 1}, 2}, {{1, 1, 1}, 4}});
  const auto report6 = check(top, ModeFlags{});
  const auto* r6 = find(report6, RuleId::R6);
  REQUIRE(r6 != nullptr);
  CHECK(explain(*r6).find("= |G(H)|") != std::string::npos);

  // B(3,2,2) with nothing at level 2 in row 2: chain i=1 has no b
  const BlockSystem chain(1, {{{0, 2, 2}, 4},
                              {{1, 1, 1}, 1},
                              {{1, 2, 2}, 4},
                              {{2, 1, 1}, 1},
                              {{3, 2, 2}, 4}});
  const auto report4 = check(chain, ModeFlags{});
  const auto* r4 = find(report4, RuleId::R4);
  REQUIRE(r4 != nullptr);
  CHECK(r4->missing_witness.has_value());
  CHECK(explain(*r4).find("b with") != std::string::npos);
  CHECK(r4->indices.front() == BlockIndex{3, 2, 2});
}

TEST_CASE("individual rules") {
  SUBCASE("R0") {
    CHECK(ids(check(BlockSystem(2, {{{0, 1, 1}, 4}}), ModeFlags{})).contains(RuleId::R0));
    CHECK(ids(check(BlockSystem(1, {{{0, 2, 2}, 6}}), ModeFlags{})).contains(RuleId::R0));
    CHECK(ids(check(BlockSystem(0, {{{0, 2, 2}, 4}}), ModeFlags{})).contains(RuleId::R0));
  }
  SUBCASE("R1") {
    CHECK(ids(check(BlockSystem(2, {{{1, 1, 1}, 3}}), ModeFlags{})).contains(RuleId::R1));
  }
  SUBCASE("R2 and R12") {
    const BlockSystem s(2, {{{0, 2, 2}, 4}, {{1, 1, 2}, 2}, {{1, 2, 1}, 2},
                            {{2, 2, 2}, 4}, {{2, 1, 1}, 2}});
    CHECK(ids(check(s, ModeFlags{})).contains(RuleId::R2));
    const BlockSystem t(2, {{{0, 3, 3}, 18}, {{1, 3, 3}, 6}});
    CHECK(ids(check(t, ModeFlags{})).contains(RuleId::R12));
  }
  SUBCASE("R9 and R11") {
    CHECK(ids(check(BlockSystem(1, {{{2, 1, 1}, 1}}), ModeFlags{})).contains(RuleId::R9));
    CHECK(ids(check(BlockSystem(1, {{{1, 2, 2}, 4}, {{1, 1, 1}, 1}}), ModeFlags{})).contains(RuleId::R11));
  }
  SUBCASE("RNC") {
    CHECK(ids(check(BlockSystem(3), ModeFlags::skew_allowed())).contains(RuleId::RNC));
    CHECK(check(BlockSystem(3), ModeFlags{}).empty());
  }
  SUBCASE("R8") {
    // l = 2 < m = 3 with no edge block above level 2
    const BlockSystem s(1, {{{0, 2, 2}, 4},
                            {{1, 1, 2}, 2}, {{1, 2, 1}, 2},
                            {{2, 1, 1}, 1}, {{2, 2, 2}, 4},
                            {{3, 1, 1}, 1}});
    const auto got = ids(check(s, ModeFlags::nsp()));
    CHECK(got.contains(RuleId::R8));
    CHECK_FALSE(got.contains(RuleId::R7));
  }
}

TEST_CASE("closure under transpose on a sample") {
  const BlockSystem s(3, {{{0, 1, 1}, 3}, {{0, 2, 2}, 12}, {{1, 2, 1}, 6}});
  CHECK(check(s, ModeFlags::nsp()).empty() == check(transpose(s), ModeFlags::nsp()).empty());
}

TEST_CASE("report json") {
  const BlockSystem s(2, {{{0, 1, 1}, 2}, {{1, 1, 1}, 2}});
  const auto j = report_to_json(check(s, ModeFlags::nsp()));
  REQUIRE(j.is_array());
  REQUIRE_FALSE(j.empty());
  CHECK(j[0].contains("rule"));
  CHECK(j[0].contains("indices"));
  CHECK(j[0].contains("message"));
}
