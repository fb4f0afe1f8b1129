#include "doctest.h"

#include "gnk/report.hpp"

using namespace gnk;

namespace {

  Word w3(char const* text) {
    return parse_word(text, GroupParams::last_level(3));
  }

}  // namespace

TEST_CASE("verdict text") {
  CHECK(format_verdict(solve_k3(w3("b4 b4"))) == "Trivial\nwitness: trace of 1 moves\n");
  CHECK(format_verdict(solve_k3(w3("b4 b4")), true)
        == "Trivial\nwitness: trace of 1 moves\ntrace: cancel 0\n");
  CHECK(format_verdict(solve_k3(w3("b4 b1 b4")))
        == "NonTrivial\nwitness: obstruction c(0,0) c(1,0)\n");
  CHECK(format_verdict(solve_k3(w3("b1")))
        == "NonTrivial\nwitness: residue b1\nassuming: H3-freeness (Karpov, unpublished)\n");
  CHECK(format_verdict(solve_semi(parse_word("b1 b2 b1", GroupParams::last_level(4))))
        == "NonTrivial\nwitness: parity (0,1,0,0,0)\n");
}

TEST_CASE("verdict json") {
  auto const j = verdict_to_json(solve_k3(w3("b4 b1 b2 b3 b4 b1 b2 b3")), true);
  CHECK(j["status"] == "Trivial");
  CHECK(j["witness"]["kind"] == "trace");
  CHECK(j["witness"]["trace"][0] == "reverse 0");
  CHECK(j["assumptions"].empty());

  auto const k = verdict_to_json(solve_k3(w3("b2 b1")));
  CHECK(k["status"] == "NonTrivial");
  CHECK(k["witness"]["value"] == "b2 b1");
  CHECK(k["assumptions"][0] == kH3Freeness);

  auto const o = verdict_to_json(solve_k3(w3("b4")));
  CHECK(o["witness"]["letters"] == nlohmann::json::array({nlohmann::json::array({0, 0})}));
}

TEST_CASE("traces") {
  auto const p = GroupParams::last_level(3);
  EliminationTrace const t{Move::reverse_window(0), Move::insert(2, Letter::b(p, 3)), Move::cancel(1)};
  CHECK(format_trace(t, p) == "reverse 0; insert 2 b3; cancel 1");
  CHECK(trace_to_json(t, p).size() == 3);
  CHECK(format_trace({}, p).empty());
}
