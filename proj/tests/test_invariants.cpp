#include <algorithm>  // for shuffle
#include <random>     // for mt19937
#include <set>     // for set

#include "doctest.h"

#include "gnk/invariants.hpp"

using namespace gnk;

namespace {

  Word w3(char const* text) {
    return parse_word(text, GroupParams::last_level(3));
  }

  IndexString idx(std::initializer_list<int> bits) {
    IndexString x;
    for (int b : bits) {
      x.bits.push_back(static_cast<std::uint8_t>(b));
    }
    return x;
  }

  SignString signs(std::initializer_list<int> xs) {
    SignString s;
    for (int x : xs) {
      s.signs.push_back(static_cast<std::int8_t>(x));
    }
    return s;
  }

  // f straight from its definition, on b indices, with a stack reduction.
  std::vector<std::vector<int>> f_by_hand(Word const& w) {
    int const                     k = w.params().k;
    std::vector<int>              counts(static_cast<std::size_t>(k + 1), 0);
    std::vector<std::vector<int>> out;
    for (Letter x : w) {
      int const j = x.b_index(w.params());
      if (j == k + 1) {
        std::vector<int> bits;
        for (int i = 0; i < k; ++i) {
          bits.push_back(counts[static_cast<std::size_t>(i)] % 2);
        }
        if (bits.back() == 1) {
          for (auto& b : bits) {
            b ^= 1;
          }
        }
        bits.pop_back();
        if (!out.empty() && out.back() == bits) {
          out.pop_back();
        } else {
          out.push_back(bits);
        }
      }
      ++counts[static_cast<std::size_t>(j - 1)];
    }
    return out;
  }

  Word random_word(GroupParams const& p, std::size_t max_len, std::mt19937& rng) {
    auto const alph = alphabet(p);
    Word       w(p);
    for (std::size_t i = rng() % (max_len + 1); i > 0; --i) {
      w.push_back(alph[rng() % alph.size()]);
    }
    return w;
  }

}  // namespace

TEST_CASE("occurrence_index") {
  CHECK(occurrence_index(w3("b4"), 0) == idx({0, 0}));
  CHECK(occurrence_index(w3("b4 b1 b4"), 2) == idx({1, 0}));
  CHECK(occurrence_index(w3("b4 b1 b2 b3 b4"), 4) == idx({0, 0}));
  CHECK(occurrence_index(w3("b2 b3 b4"), 2) == idx({1, 0}));  // (0,1,1) flipped
  CHECK_THROWS(occurrence_index(w3("b4 b1"), 1));
  CHECK_THROWS(occurrence_index(w3("b4"), 3));
}

TEST_CASE("f_image") {
  CHECK(f_image(w3("b1 b2 b3")).empty());
  ObstructionWord const o = f_image(w3("b4 b1 b4"));
  CHECK(o.letters == std::vector<IndexString>{idx({0, 0}), idx({1, 0})});
  CHECK(to_string(o) == "c(0,0) c(1,0)");
  CHECK(f_image(w3("b4 b1 b2 b3 b4")).empty());
  CHECK(f_image_unreduced(w3("b4 b1 b2 b3 b4")).letters.size() == 2);
  CHECK(to_string(f_image(w3("b4"))) == "c(0,0)");
  CHECK_THROWS(f_image(parse_word("a{1,2,3}", GroupParams(5, 3))));
}

TEST_CASE("free_product_reduce") {
  CHECK(free_product_reduce({{idx({0, 0}), idx({0, 0})}}).empty());
  CHECK(free_product_reduce({{idx({1, 0}), idx({0, 0}), idx({0, 0}), idx({1, 0})}}).empty());
  ObstructionWord const r{{idx({0, 0}), idx({1, 0})}};
  CHECK(free_product_reduce(r) == r);
}

TEST_CASE("f_image agrees with a direct computation") {
  std::mt19937 rng(17);
  for (int k : {2, 3, 4, 5}) {
    auto const p = GroupParams::last_level(k);
    for (int n = 0; n < 300; ++n) {
      Word const w = random_word(p, 24, rng);
      auto const o = f_image(w);
      auto const e = f_by_hand(w);
      REQUIRE(o.letters.size() == e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        std::vector<int> bits(o.letters[i].bits.begin(), o.letters[i].bits.end());
        CHECK(bits == e[i]);
      }
    }
  }
}

TEST_CASE("parity_vector") {
  CHECK(to_string(parity_vector(w3(""))) == "(0,0,0,0)");
  CHECK(to_string(parity_vector(w3("b1 b2 b1"))) == "(0,1,0,0)");
  CHECK(parity_vector(w3("b1 b2 b3 b4 b1 b2 b3 b4")).is_zero());
}

TEST_CASE("sign_action") {
  auto const p = GroupParams::last_level(3);
  CHECK(sign_action(w3(""), signs({1, 1})) == signs({1, 1}));
  CHECK(sign_action(w3("b4"), signs({1, 1})) == signs({-1, 1}));
  CHECK(to_string(sign_action(w3("b4"), signs({1, 1}))) == "(-,+)");
  CHECK(sign_action(w3("b3"), signs({1, 1})) == signs({1, -1}));
  CHECK(sign_action(w3("b2"), signs({1, -1})) == signs({-1, 1}));
  CHECK(sign_action(w3("b1"), signs({-1, 1})) == signs({1, -1}));
  for (auto const& s : {signs({1, 1}), signs({1, -1}), signs({-1, 1}), signs({-1, -1})}) {
    CHECK(sign_action(w3("b1 b2"), s) == s);
    for (Letter x : alphabet(p)) {
      // Every letter acts as an involution.
      CHECK(sign_action(p, x, sign_action(p, x, s)) == s);
    }
  }
  CHECK_THROWS(sign_action(w3("b1"), signs({1, 1, 1})));
}

TEST_CASE("in_tilde_subgroup") {
  CHECK(in_tilde_subgroup(w3("")));
  CHECK(!in_tilde_subgroup(w3("b4")));
  CHECK(in_tilde_subgroup(w3("b1 b2")));
  CHECK(in_tilde_subgroup(w3("b4 b3 b4 b3")));
}

TEST_CASE("sign orbit has 2^(k-1) elements") {
  for (int k : {2, 3, 4, 5, 6}) {
    auto const           orbit = sign_orbit(GroupParams::last_level(k));
    std::set<SignString> distinct(orbit.begin(), orbit.end());
    CHECK(orbit.size() == (std::size_t(1) << (k - 1)));
    CHECK(distinct.size() == orbit.size());
    CHECK(orbit.front() == SignString::all_plus(k));
  }
}

TEST_CASE("invariants survive every relation move") {
  std::mt19937 rng(23);
  for (int k : {3, 4}) {
    auto const p    = GroupParams::last_level(k);
    auto const alph = alphabet(p);
    for (int n = 0; n < 200; ++n) {
      Word const w = random_word(p, 12, rng);
      std::vector<Move> moves;
      for (std::size_t i = 0; i <= w.size(); ++i) {
        for (Letter x : alph) {
          moves.push_back(Move::insert(i, x));
        }
        if (i + 1 < w.size() && w[i] == w[i + 1]) {
          moves.push_back(Move::cancel(i));
        }
        if (i + static_cast<std::size_t>(k) < w.size()
            && is_relation3_window(p, std::span(w.letters()).subspan(i, std::size_t(k) + 1))) {
          moves.push_back(Move::reverse_window(i));
        }
      }
      for (auto const& m : moves) {
        Word const v = apply_move(w, m);
        CHECK(f_image(v) == f_image(w));
        CHECK(parity_vector(v) == parity_vector(w));
        for (auto const& s : sign_orbit(p)) {
          CHECK(sign_action(v, s) == sign_action(w, s));
        }
      }
    }
  }
}

TEST_CASE("reversing a once-each window keeps invariants") {
  // Random words rarely contain windows, so build them in.
  std::mt19937 rng(29);
  auto const   p = GroupParams::last_level(4);
  for (int n = 0; n < 200; ++n) {
    auto window = alphabet(p);
    std::shuffle(window.begin(), window.end(), rng);
    Word const  prefix = random_word(p, 6, rng);
    Word const  suffix = random_word(p, 6, rng);
    Word const  w      = concat(concat(prefix, Word(p, window)), suffix);
    Word const  v      = apply_relation3_at(w, prefix.size());
    CHECK(f_image(v) == f_image(w));
    CHECK(parity_vector(v) == parity_vector(w));
    CHECK(sign_action(v, SignString::all_plus(4)) == sign_action(w, SignString::all_plus(4)));
  }
}
