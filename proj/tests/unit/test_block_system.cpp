#include <doctest.h>

#include "blocksieve/block_json.hpp"
#include "blocksieve/block_system.hpp"
#include "blocksieve/errors.hpp"
#include "blocksieve/solver.hpp"

using namespace blocksieve;

namespace {

BlockSystem sweedler_table() { return BlockSystem(2, {{{0, 1, 1}, 2}, {{1, 1, 1}, 2}}); }

std::string message_of(std::string_view text) {
  try {
    parse_block_system(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("total_dim") {
  CHECK(total_dim(BlockSystem(3, {{{0, 1, 1}, 3}})) == 3);
  CHECK(total_dim(minimal_form(3, 2)) == 42);
  CHECK(total_dim(sweedler_table()) == 4);
  // absent B(0,1,1) reads as r
  CHECK(total_dim(BlockSystem(5, {{{1, 1, 1}, 5}})) == 10);
  CHECK(total_dim(BlockSystem(3)) == 3);
}

TEST_CASE("pointed_levels") {
  auto p = pointed_levels(sweedler_table());
  CHECK(p.l == 1);
  CHECK(p.m == 1);

  p = pointed_levels(minimal_form(3, 2));
  CHECK(p.l == 2);
  CHECK(p.m == 2);

  p = pointed_levels(BlockSystem(3, {{{0, 1, 1}, 3}}));
  CHECK_FALSE(p.l.has_value());
  CHECK(p.m == 0);
}

TEST_CASE("transpose") {
  const BlockSystem pair(3, {{{1, 2, 1}, 6}, {{1, 1, 2}, 6}});
  CHECK(transpose(pair) == pair);

  const BlockSystem single(6, {{{1, 2, 3}, 6}});
  const BlockSystem swapped(6, {{{1, 3, 2}, 6}});
  CHECK(transpose(single) == swapped);
  CHECK(transpose(transpose(single)) == single);
  CHECK(transpose(single).group_order() == 6);
}

TEST_CASE("constructor invariants") {
  CHECK_THROWS_AS(BlockSystem(2, {{{0, 2, 1}, 4}}), InvalidArgument);
  CHECK_THROWS_AS(BlockSystem(2, {{{1, 1, 1}, 0}}), InvalidArgument);
  CHECK_THROWS_AS(BlockSystem(2, {{{1, 1, 1}, -2}}), InvalidArgument);
  CHECK_THROWS_AS(BlockSystem(-1), InvalidArgument);
  CHECK_THROWS_AS(BlockSystem(2, {{{1, 0, 1}, 2}}), InvalidArgument);
}

TEST_CASE("with and merge") {
  const BlockSystem s = sweedler_table();
  CHECK(s.with({1, 1, 1}, 0) == BlockSystem(2, {{{0, 1, 1}, 2}}));
  CHECK(s.with({2, 1, 1}, 2).at({2, 1, 1}) == 2);
  const BlockSystem a(2, {{{1, 1, 1}, 2}});
  const BlockSystem b(2, {{{1, 1, 1}, 4}, {{2, 1, 1}, 2}});
  const BlockSystem m = merge(a, b);
  CHECK(m.at({1, 1, 1}) == 6);
  CHECK(m.at({2, 1, 1}) == 2);
  CHECK(m.effective({0, 1, 1}) == 2);
  CHECK(m.at({0, 1, 1}) == 0);
}

TEST_CASE("serialize and parse") {
  const BlockSystem l32 = minimal_form(3, 2);
  CHECK(parse_block_system(serialize_block_system(l32)) == l32);

  // canonical output sorts entries by (level, d1, d2)
  const auto text = serialize_block_system(l32);
  CHECK(text.find("\"level\":0") < text.find("\"level\":1"));
  CHECK(text.find("\"d1\":1,\"d2\":2") < text.find("\"d1\":2,\"d2\":1"));

  const auto shuffled = parse_block_system(
      R"({"blocks":[{"dim":3,"d2":1,"d1":1,"level":2},{"level":0,"d1":1,"d2":1,"dim":3}],"group_order":3})");
  CHECK(serialize_block_system(shuffled) ==
        R"({"group_order":3,"blocks":[{"level":0,"d1":1,"d2":1,"dim":3},{"level":2,"d1":1,"d2":1,"dim":3}]})");
}

TEST_CASE("parse errors name the entry") {
  auto msg = message_of(R"({"group_order":2,"blocks":[{"level":0,"d1":2,"d2":1,"dim":4}]})");
  CHECK(msg.find("level-0 block must be diagonal") != std::string::npos);
  CHECK(msg.find("blocks[0]") != std::string::npos);

  msg = message_of(R"({"group_order":2,"blocks":[{"level":1,"d1":1,"d2":1,"dim":0}]})");
  CHECK(msg.find("zero blocks must be omitted") != std::string::npos);

  msg = message_of(R"({"group_order":2,"blocks":[{"level":1,"d1":1,"d2":1,"dim":-2}]})");
  CHECK(msg.find("negative dimension") != std::string::npos);

  msg = message_of(
      R"({"group_order":2,"blocks":[{"level":1,"d1":1,"d2":1,"dim":2},{"level":1,"d1":1,"d2":1,"dim":4}]})");
  CHECK(msg.find("duplicate index") != std::string::npos);
  CHECK(msg.find("blocks[1]") != std::string::npos);

  CHECK_FALSE(message_of(R"({"group_order":2,"blocks":[],"extra":1})").empty());
  CHECK_FALSE(message_of(R"({"group_order":2,"blocks":[{"level":1,"d1":1,"d2":1,"dim":2,"x":0}]})").empty());
  CHECK_FALSE(message_of(R"({"blocks":[]})").empty());
  CHECK_FALSE(message_of(R"({"group_order":2,"blocks":[{"level":1,"d1":1,"dim":2}]})").empty());
  CHECK_FALSE(message_of(R"({"group_order":2.5,"blocks":[]})").empty());
  CHECK_FALSE(message_of("not json").empty());
}
