#include <algorithm>  // for count_if
#include <random>     // for mt19937

#include "doctest.h"

#include "gnk/polynomial.hpp"

using namespace gnk;

namespace {

  Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
  }

  Polynomial from_roots(std::vector<Rational> const& roots, Rational lead = 1) {
    Polynomial p({lead});
    for (auto const& r : roots) {
      p = p * Polynomial({-r, Rational(1)});
    }
    return p;
  }

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  Polynomial const p({q(1), q(-3), q(2)});  // 2t^2 - 3t + 1
  CHECK(p.degree() == 2);
  CHECK(p(q(1, 2)) == 0);
  CHECK(p(q(1)) == 0);
  CHECK(p(q(3)) == 10);
  CHECK(p.derivative() == Polynomial({q(-3), q(4)}));
  CHECK((p - p).is_zero());
  CHECK((p + Polynomial({q(0), q(3)})) == Polynomial({q(1), q(0), q(2)}));
  CHECK(Polynomial({q(0), q(0)}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(p.monic().leading() == 1);
}

TEST_CASE("interpolation recovers the polynomial") {
  std::mt19937 rng(2);
  for (int n = 0; n < 50; ++n) {
    std::vector<Rational> c;
    for (int i = 0; i < 5; ++i) {
      c.push_back(q(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1));
    }
    Polynomial const      p(c);
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 5; ++i) {
      xs.push_back(q(i));
      ys.push_back(p(q(i)));
    }
    CHECK(Polynomial::interpolate(xs, ys) == p);
  }
  // All-zero samples give the zero polynomial.
  std::vector<Rational> xs{q(0), q(1)}, ys{q(0), q(0)};
  CHECK(Polynomial::interpolate(xs, ys).is_zero());
}

TEST_CASE("division and gcd") {
  Polynomial const a = from_roots({q(1), q(2)});
  Polynomial const b = from_roots({q(2), q(3)});
  CHECK(gcd(a, b) == from_roots({q(2)}));
  CHECK(gcd(a, from_roots({q(5)})).degree() == 0);
  Polynomial quot, rem;
  divmod(from_roots({q(1), q(2), q(3)}), a, quot, rem);
  CHECK(quot == from_roots({q(3)}));
  CHECK(rem.is_zero());
  CHECK_THROWS(divmod(a, Polynomial(), quot, rem));
  CHECK(squarefree_part(from_roots({q(1), q(1), q(2)}, q(3))).monic() == a);
}

TEST_CASE("Sturm counts match known roots") {
  std::mt19937 rng(8);
  for (int n = 0; n < 200; ++n) {
    std::vector<Rational> roots;
    for (std::size_t i = 1 + rng() % 5; i > 0; --i) {
      Rational r = q(static_cast<long>(rng() % 17), 16);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
        roots.push_back(r);
      }
    }
    Polynomial const    p = from_roots(roots, q(static_cast<long>(rng() % 5) + 1));
    SturmSequence const s(p);
    for (int m = 0; m < 10; ++m) {
      Rational a = q(static_cast<long>(rng() % 33) - 8, 16);
      Rational b = q(static_cast<long>(rng() % 33) - 8, 16);
      if (b < a) {
        std::swap(a, b);
      }
      auto const in_half_open = std::count_if(
          roots.begin(), roots.end(), [&](Rational const& r) { return a < r && r <= b; });
      auto const in_open = std::count_if(
          roots.begin(), roots.end(), [&](Rational const& r) { return a < r && r < b; });
      CHECK(s.count_roots(a, b) == static_cast<std::size_t>(in_half_open));
      CHECK(s.count_open(a, b) == static_cast<std::size_t>(in_open));
    }
  }
}

TEST_CASE("root isolation") {
  // Dyadic roots land on bisection points.
  Polynomial const p = from_roots({q(1, 4), q(1, 2), q(3, 4), q(5, 8)});
  auto const       iv = isolate_roots(p, q(0), q(1));
  REQUIRE(iv.size() == 4);
  std::vector<Rational> expect{q(1, 4), q(1, 2), q(5, 8), q(3, 4)};
  for (std::size_t i = 0; i < iv.size(); ++i) {
    CHECK(iv[i].lo <= expect[i]);
    CHECK(expect[i] <= iv[i].hi);
    if (!iv[i].exact()) {
      CHECK(p(iv[i].lo) != 0);
      CHECK(p(iv[i].hi) != 0);
      CHECK(SturmSequence(p).count_open(iv[i].lo, iv[i].hi) == 1);
    }
    if (i > 0) {
      CHECK(iv[i - 1].hi <= iv[i].lo);
    }
  }

  // Non-dyadic roots come back as open intervals that refine.
  Polynomial const r  = from_roots({q(1, 3), q(2, 3)});
  auto             jv = isolate_roots(r, q(0), q(1));
  REQUIRE(jv.size() == 2);
  for (auto& x : jv) {
    CHECK(!x.exact());
    for (int i = 0; i < 30; ++i) {
      refine(r, x);
    }
    CHECK(x.hi - x.lo < q(1, 1000000));
  }
  CHECK(jv[0].lo < q(1, 3));
  CHECK(q(1, 3) < jv[0].hi);

  // An irrational root.
  Polynomial const two({q(-2), q(0), q(1)});
  auto             kv = isolate_roots(two, q(1), q(2));
  REQUIRE(kv.size() == 1);
  for (int i = 0; i < 40; ++i) {
    refine(two, kv[0]);
  }
  CHECK(kv[0].lo * kv[0].lo < 2);
  CHECK(kv[0].hi * kv[0].hi > 2);

  CHECK(isolate_roots(Polynomial({q(1)}), q(0), q(1)).empty());
  CHECK_THROWS(isolate_roots(Polynomial(), q(0), q(1)));
}

TEST_CASE("has_root_in is closed") {
  Polynomial const p = from_roots({q(1, 3)});
  CHECK(has_root_in(p, q(0), q(1)));
  CHECK(has_root_in(p, q(1, 3), q(1)));
  CHECK(has_root_in(p, q(0), q(1, 3)));
  CHECK(!has_root_in(p, q(1, 2), q(1)));
  CHECK(has_root_in(p, q(1, 3), q(1, 3)));
  CHECK(!has_root_in(p, q(1, 2), q(1, 2)));
}
