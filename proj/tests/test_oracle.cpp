#include <algorithm>  // for next_permutation, sort
#include <random>     // for mt19937

#include "doctest.h"

#include "gnk/invariants.hpp"
#include "gnk/oracle.hpp"

using namespace gnk;

namespace {

  Word w3(char const* text) {
    return parse_word(text, GroupParams::last_level(3));
  }

  Word replay(Word w, std::vector<Move> const& moves) {
    for (auto const& m : moves) {
      w = apply_move(w, m);
    }
    return w;
  }

}  // namespace

TEST_CASE("oracle on small cases") {
  auto r = bfs_equal_oracle(w3("b4 b4"), w3(""), 8, 100000);
  CHECK(r.equal());
  CHECK(replay(w3("b4 b4"), r.trace).empty());

  r = bfs_equal_oracle(w3("b4 b1 b2 b3 b4"), w3("b3 b2 b1"), 10, 1000000);
  REQUIRE(r.equal());
  CHECK(replay(w3("b4 b1 b2 b3 b4"), r.trace) == w3("b3 b2 b1"));

  r = bfs_equal_oracle(w3("b1"), w3(""), 6, 100000);
  CHECK(!r.equal());
  CHECK(r.status == OracleResult::Status::unknown);
}

TEST_CASE("a word equals itself with an empty trace") {
  std::mt19937 rng(3);
  auto const   alph = alphabet(GroupParams::last_level(3));
  for (int n = 0; n < 20; ++n) {
    Word w(GroupParams::last_level(3));
    for (std::size_t i = rng() % 9; i > 0; --i) {
      w.push_back(alph[rng() % 4]);
    }
    auto r = bfs_equal_oracle(w, w, 12, 1000);
    CHECK(r.equal());
    CHECK(r.trace.empty());
  }
}

TEST_CASE("the square of every once-each arrangement is trivial") {
  for (int k : {3, 4}) {
    auto const p       = GroupParams::last_level(k);
    auto       letters = alphabet(p);
    std::sort(letters.begin(), letters.end());
    do {
      Word const w = concat(Word(p, letters), Word(p, letters));
      auto       r = bfs_equal_oracle(w, Word(p), w.size(), 1000000);
      REQUIRE(r.equal());
      CHECK(replay(w, r.trace).empty());
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
}

TEST_CASE("oracle uses commutation when n > k + 1") {
  auto const p = GroupParams(5, 2);
  Word const u = parse_word("a{1,2} a{3,4} a{1,2} a{3,4}", p);
  auto       r = bfs_equal_oracle(u, Word(p), 4, 100000);
  REQUIRE(r.equal());
  CHECK(replay(u, r.trace).empty());
}

TEST_CASE("oracle respects its bounds") {
  // The bound is inclusive: the derivation never exceeds length 5.
  auto r = bfs_equal_oracle(w3("b4 b1 b2 b3 b4"), w3("b3 b2 b1"), 5, 1000000);
  CHECK(r.equal());
  r = bfs_equal_oracle(w3("b4 b1 b2 b3 b4"), w3("b3 b2 b1"), 4, 1000000);
  CHECK(!r.equal());
  r = bfs_equal_oracle(w3("b1 b2 b3 b4 b1 b2 b3 b4"), w3(""), 8, 3);
  CHECK(!r.equal());
}

TEST_CASE("bounded closure of the identity") {
  auto const     p = GroupParams::last_level(3);
  BoundedClosure c(Word(p), 10, 1000000);
  REQUIRE(c.complete());
  CHECK(c.contains(w3("")));
  CHECK(c.contains(w3("b2 b2")));
  CHECK(c.contains(w3("b1 b2 b3 b4 b1 b2 b3 b4")));
  CHECK(c.contains(w3("b4 b1 b2 b3 b4 b1 b2 b3")));
  CHECK(!c.contains(w3("b1")));
  CHECK(!c.contains(w3("b1 b2")));
  CHECK(!c.contains(w3("b4 b1 b4 b1")));

  auto d = c.derivation(w3("b3 b1 b2 b4 b3 b1 b2 b4"));
  REQUIRE(d);
  CHECK(replay(Word(p), *d) == w3("b3 b1 b2 b4 b3 b1 b2 b4"));
  CHECK(!c.derivation(w3("b1")));

  // Every member has the invariants of the identity.
  std::mt19937 rng(1);
  auto const   alph = alphabet(p);
  int          hits = 0;
  for (int n = 0; n < 3000; ++n) {
    Word w(p);
    for (std::size_t i = 2 * (rng() % 5); i > 0; --i) {
      w.push_back(alph[rng() % 4]);
    }
    if (c.contains(w)) {
      ++hits;
      CHECK(f_image(w).empty());
      CHECK(parity_vector(w).is_zero());
    }
  }
  CHECK(hits > 0);

  BoundedClosure small(Word(p), 10, 50);
  CHECK(!small.complete());
}
