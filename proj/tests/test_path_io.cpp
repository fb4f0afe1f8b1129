
#include <cstdio>  // for remove

#include "doctest.h"

#include "gnk/path_io.hpp"

using namespace gnk;
using nlohmann::json;

namespace {

  SignString signs(std::initializer_list<int> xs) {
    SignString s;
    for (int x : xs) {
      s.signs.push_back(static_cast<std::int8_t>(x));
    }
    return s;
  }

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(format_rational(parse_rational("4/6")) == "2/3");
  CHECK(format_rational(parse_rational("-0")) == "0");
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("--1"));
  CHECK_THROWS(parse_rational("1/"));
}

TEST_CASE("path documents round-trip bit-exactly") {
  auto const  p    = GroupParams::last_level(3);
  PLPath      path = path_from_word(parse_word("b1 b4 b2", p));
  PathFile    f{path, signs({1, 1})};
  std::string text = dump_path(f);
  PathFile    g    = path_from_json(json::parse(text));
  CHECK(g.path == path);
  CHECK(g.base_sign == f.base_sign);
  CHECK(dump_path(g) == text);
  CHECK(word_from_path(g.path) == parse_word("b1 b4 b2", p));

  // Through a file as well.
  std::string const name = "gnk_path_io_test.json";
  write_path_file(name, f);
  PathFile const h = read_path_file(name);
  CHECK(dump_path(h) == text);
  std::remove(name.c_str());
}

TEST_CASE("integers and strings are both accepted") {
  json const doc = json::parse(R"({
    "k": 3, "n": 4,
    "keyframes": [
      [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
      [["1", "0", "0"], [0, 1, 0], [0, 0, 1], ["-1/2", "1/2", "1/2"]]
    ]})");
  PathFile const f = path_from_json(doc);
  CHECK(!f.base_sign);
  CHECK(f.path.keyframes()[1][4][0] == Rational(-1, 2));
  auto const events = detect_events(f.path);
  REQUIRE(events.size() == 1);
  CHECK(events[0].subset == Letter::b(GroupParams::last_level(3), 4));
  // Written back, everything is a string.
  CHECK(path_to_json(f)["keyframes"][0][0][0] == "1");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(path_from_json(json::parse("[]")), Error);
  CHECK_THROWS_AS(path_from_json(json::parse(R"({"k": 3})")), Error);
  CHECK_THROWS_AS(path_from_json(json::parse(R"({"k": 3, "n": 4, "keyframes": 5})")), Error);
  CHECK_THROWS_AS(path_from_json(json::parse(
                      R"({"k": 3, "n": 4, "keyframes": [[[1,0,0],[0,1,0],[0,0,1],[1,1,1]]]})")),
                  GeometryError);
  CHECK_THROWS_AS(path_from_json(json::parse(
                      R"({"k": 3, "n": 4, "keyframes": [[[1,0,0],[0,1,0],[0,0,1],[1.5,1,1]],
                                                        [[1,0,0],[0,1,0],[0,0,1],[1,1,1]]]})")),
                  Error);
  CHECK_THROWS_AS(path_from_json(json::parse(
                      R"({"k": 3, "n": 4, "keyframes": [[[1,0,0],[0,1,0],[0,0,1]],
                                                        [[1,0,0],[0,1,0],[0,0,1]]]})")),
                  GeometryError);
  CHECK_THROWS_AS(path_from_json(json::parse(
                      R"({"k": 3, "n": 4, "base_sign": [1, 2],
                          "keyframes": [[[1,0,0],[0,1,0],[0,0,1],[1,1,1]],
                                        [[1,0,0],[0,1,0],[0,0,1],[1,1,1]]]})")),
                  Error);
  CHECK_THROWS_AS(read_path_file("/nonexistent/gnk.json"), Error);
}

TEST_CASE("event reports") {
  auto const p      = GroupParams::last_level(3);
  auto const events = detect_events(path_from_word(parse_word("b4 b3", p)));
  json const j      = events_to_json(events, p);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["segment"] == 0);
  CHECK(j[0]["t"] == "1/2");
  CHECK(j[0]["subset"] == json::array({2, 3, 4}));
  CHECK(j[0]["letter"] == "b4");
  CHECK(j[1]["letter"] == "b3");
  CHECK(events_to_json({}, p) == json::array());
}
