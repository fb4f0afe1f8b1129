#include <algorithm>  // for sort, next_permutation
#include <random>     // for mt19937
#include <vector>     // for vector

#include "doctest.h"

#include "gnk/word.hpp"

using namespace gnk;

namespace {

  Word w3(char const* text) {
    return parse_word(text, GroupParams::last_level(3));
  }

  // All k-subsets of [n] as sorted vectors, in lexicographic order.
  std::vector<std::vector<int>> lex_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<bool>             pick(static_cast<std::size_t>(n), false);
    std::fill(pick.end() - k, pick.end(), true);
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (pick[static_cast<std::size_t>(i)]) {
          s.push_back(i + 1);
        }
      }
      out.push_back(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Cancels one random adjacent equal pair at a time until none is left.
  Word reduce_randomly(Word w, std::mt19937& rng) {
    std::vector<Letter> xs(w.letters());
    while (true) {
      std::vector<std::size_t> pairs;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (xs[i] == xs[i + 1]) {
          pairs.push_back(i);
        }
      }
      if (pairs.empty()) {
        return Word(w.params(), xs);
      }
      std::size_t i = pairs[rng() % pairs.size()];
      xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i),
               xs.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
  }

}  // namespace

TEST_CASE("group parameters") {
  CHECK_THROWS_AS(GroupParams(3, 3), ParameterError);
  CHECK_THROWS_AS(GroupParams(4, 1), ParameterError);
  CHECK(GroupParams::last_level(3).n == 4);
  CHECK(GroupParams(5, 2).num_letters() == 10);
  CHECK_THROWS_AS(GroupParams(5, 3).require_last_level("x"), ParameterError);
}

TEST_CASE("b names follow lexicographic order of subsets") {
  for (int k : {2, 3, 4, 5}) {
    auto const p    = GroupParams::last_level(k);
    auto const subs = lex_subsets(k + 1, k);
    auto const alph = alphabet(p);
    REQUIRE(alph.size() == subs.size());
    for (int j = 1; j <= k + 1; ++j) {
      Letter const x = Letter::b(p, j);
      CHECK(x.elements() == subs[static_cast<std::size_t>(j - 1)]);
      CHECK(x.b_index(p) == j);
      CHECK(x.omitted(p) == k + 2 - j);
      CHECK(alph[static_cast<std::size_t>(j - 1)] == x);
    }
  }
  auto const p = GroupParams::last_level(3);
  CHECK(Letter::b(p, 1) == Letter::from_subset(p, {1, 2, 3}));
  CHECK(Letter::b(p, 4) == Letter::from_subset(p, {2, 3, 4}));
}

TEST_CASE("alphabet is sorted for other n") {
  auto const p    = GroupParams(6, 3);
  auto const subs = lex_subsets(6, 3);
  auto const alph = alphabet(p);
  REQUIRE(alph.size() == 20);
  for (std::size_t i = 0; i < alph.size(); ++i) {
    CHECK(alph[i].elements() == subs[i]);
  }
  CHECK(std::is_sorted(alph.begin(), alph.end()));
}

TEST_CASE("parse_word") {
  auto const p = GroupParams::last_level(3);
  CHECK(parse_word("", p).empty());
  CHECK(parse_word("  \t", p).empty());
  CHECK(parse_word("b1", p) == Word(p, {Letter::from_subset(p, {1, 2, 3})}));
  Word const w = parse_word("a{2,3,4} b4", p);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == w[1]);
  CHECK(w[0].elements() == std::vector<int>{2, 3, 4});
  CHECK(parse_word("a{3,2,4}", p)[0] == w[0]);

  CHECK_THROWS_AS(parse_word("b5", p), ParseError);
  CHECK_THROWS_AS(parse_word("b0", p), ParseError);
  CHECK_THROWS_AS(parse_word("a{1,2}", p), ParseError);
  CHECK_THROWS_AS(parse_word("a{1,2,5}", p), ParseError);
  CHECK_THROWS_AS(parse_word("a{1,1,2}", p), ParseError);
  CHECK_THROWS_AS(parse_word("a{1, 2,3}", p), ParseError);
  CHECK_THROWS_AS(parse_word("c1", p), ParseError);
  CHECK_THROWS_AS(parse_word("b1", GroupParams(5, 3)), ParseError);
  try {
    parse_word("b1 b2 x b3", p);
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.token() == 2);
  }
}

TEST_CASE("format_word") {
  auto const p = GroupParams::last_level(3);
  CHECK(format_word(Word(p)) == "");
  CHECK(format_word(w3("b1"), WordStyle::b_index) == "b1");
  CHECK(format_word(w3("b4 b1")) == "a{2,3,4} a{1,2,3}");
  CHECK(to_string(w3("a{1,2,4} b3")) == "b2 b3");
  CHECK(to_string(parse_word("a{1,2} a{3,4}", GroupParams(5, 2))) == "a{1,2} a{3,4}");
  CHECK_THROWS(format_word(parse_word("a{1,2}", GroupParams(5, 2)), WordStyle::b_index));
}

TEST_CASE("parse and format are inverse") {
  std::mt19937 rng(5);
  for (int k : {2, 3, 4}) {
    auto const p    = GroupParams::last_level(k);
    auto const alph = alphabet(p);
    for (int n = 0; n < 50; ++n) {
      Word w(p);
      for (std::size_t i = rng() % 10; i > 0; --i) {
        w.push_back(alph[rng() % alph.size()]);
      }
      CHECK(parse_word(format_word(w), p) == w);
      CHECK(parse_word(format_word(w, WordStyle::b_index), p) == w);
    }
  }
}

TEST_CASE("free_reduce and inverse") {
  CHECK(free_reduce(w3("b4 b4")).empty());
  CHECK(free_reduce(w3("b1 b2 b2 b1")).empty());
  CHECK(free_reduce(w3("b1 b2 b1")) == w3("b1 b2 b1"));
  CHECK(inverse(Word(GroupParams::last_level(3))).empty());
  CHECK(inverse(w3("b1 b2 b3")) == w3("b3 b2 b1"));
  CHECK(free_reduce(concat(w3("b1 b2"), inverse(w3("b1 b2")))).empty());
  CHECK_THROWS(concat(w3("b1"), parse_word("b1", GroupParams::last_level(4))));
}

TEST_CASE("free reduction does not depend on cancellation order") {
  std::mt19937 rng(11);
  auto const   p    = GroupParams::last_level(3);
  auto const   alph = alphabet(p);
  for (int n = 0; n < 300; ++n) {
    Word w(p);
    for (std::size_t i = rng() % 16; i > 0; --i) {
      // Small effective alphabet so that cancellations cascade.
      w.push_back(alph[rng() % 2]);
    }
    Word const r = free_reduce(w);
    CHECK(reduce_randomly(w, rng) == r);
    CHECK(free_reduce(r) == r);
    CHECK(inverse(inverse(w)) == w);
    CHECK(free_reduce(concat(w, inverse(w))).empty());
  }
}

TEST_CASE("relation (3) windows") {
  auto const p = GroupParams::last_level(3);
  CHECK(apply_relation3_at(w3("b4 b1 b2 b3"), 0) == w3("b3 b2 b1 b4"));
  CHECK(apply_relation3_at(w3("b1 b4 b1 b2 b3"), 1) == w3("b1 b3 b2 b1 b4"));
  CHECK_THROWS_AS(apply_relation3_at(w3("b1 b1 b2 b3"), 0), RelationError);
  CHECK_THROWS_AS(apply_relation3_at(w3("b1 b2 b3"), 0), RelationError);
  CHECK_THROWS_AS(apply_relation3_at(w3("b1 b2 b3 b4"), 1), RelationError);

  // Every once-each arrangement is a window.
  auto letters = alphabet(p);
  std::sort(letters.begin(), letters.end());
  int count = 0;
  do {
    CHECK(is_relation3_window(p, letters));
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  CHECK(count == 24);

  // For n > k + 1, the k-subsets of {1,2,4,5} with k = 3 form a window but a
  // mixture of two 4-sets does not.
  auto const q = GroupParams(5, 3);
  CHECK(is_relation3_window(q, parse_word("a{1,2,4} a{1,2,5} a{1,4,5} a{2,4,5}", q).letters()));
  CHECK(!is_relation3_window(q, parse_word("a{1,2,3} a{1,2,5} a{1,4,5} a{2,4,5}", q).letters()));
}

TEST_CASE("relation (2) commutation") {
  auto const p = GroupParams(5, 2);
  Word const w = parse_word("a{1,2} a{3,4}", p);
  CHECK(apply_relation2_at(w, 0) == parse_word("a{3,4} a{1,2}", p));
  CHECK_THROWS_AS(apply_relation2_at(parse_word("a{1,2} a{1,3}", p), 0), RelationError);
  CHECK(commutes(GroupParams(6, 3),
                 Letter::from_subset(GroupParams(6, 3), {1, 2, 3}),
                 Letter::from_subset(GroupParams(6, 3), {1, 5, 6})));
  CHECK(!commutes(GroupParams(6, 3),
                  Letter::from_subset(GroupParams(6, 3), {1, 2, 3}),
                  Letter::from_subset(GroupParams(6, 3), {1, 2, 6})));
  // Void when n = k + 1: any two distinct k-subsets of a (k+1)-set meet in k-1.
  auto const q = GroupParams::last_level(3);
  for (Letter x : alphabet(q)) {
    for (Letter y : alphabet(q)) {
      CHECK(!commutes(q, x, y));
    }
  }
  CHECK_THROWS_AS(apply_relation2_at(w3("b1 b2"), 0), RelationError);
}

TEST_CASE("moves and their inverses") {
  auto const p = GroupParams::last_level(3);
  Word const w = w3("b4 b1 b2 b3");
  for (Move m : {Move::insert(2, Letter::b(p, 2)), Move::reverse_window(0),
                 Move::insert(0, Letter::b(p, 4)), Move::insert(4, Letter::b(p, 1))}) {
    Word const v = apply_move(w, m);
    CHECK(apply_move(v, invert_move(w, m)) == w);
  }
  Word const v = w3("b2 b2 b3");
  CHECK(apply_move(apply_move(v, Move::cancel(0)), invert_move(v, Move::cancel(0))) == v);
  CHECK_THROWS_AS(apply_move(v, Move::cancel(1)), RelationError);
  CHECK_THROWS_AS(apply_move(v, Move::cancel(2)), RelationError);
  CHECK_THROWS_AS(apply_move(v, Move::insert(4, Letter::b(p, 1))), RelationError);
  CHECK(format_move(Move::insert(1, Letter::b(p, 3)), p) == "insert 1 b3");
  CHECK(format_move(Move::reverse_window(2), p) == "reverse 2");
  CHECK(format_move(Move::cancel(0), p) == "cancel 0");
}
