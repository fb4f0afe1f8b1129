// Univariate polynomials over the rationals and exact real-root isolation
// with Sturm sequences.

#ifndef GNK_POLYNOMIAL_HPP_
#define GNK_POLYNOMIAL_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "gnk/rational.hpp"

namespace gnk {

  class Polynomial {
   public:
    Polynomial() = default;

    // Coefficients from the constant term upwards; trailing zeros dropped.
    explicit Polynomial(std::vector<Rational> coeffs);

    // The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
    static Polynomial interpolate(std::span<Rational const> xs,
                                  std::span<Rational const> ys);

    // -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(_c.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _c.empty();
    }
    std::vector<Rational> const& coeffs() const noexcept {
      return _c;
    }
    Rational const& leading() const {
      return _c.back();
    }

    Rational   operator()(Rational const& t) const;
    Polynomial derivative() const;

    // Same roots, leading coefficient 1. The zero polynomial stays zero.
    Polynomial monic() const;

    friend Polynomial operator+(Polynomial const& a, Polynomial const& b);
    friend Polynomial operator-(Polynomial const& a, Polynomial const& b);
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b);

    bool operator==(Polynomial const&) const = default;

   private:
    void                  trim();
    std::vector<Rational> _c;
  };

  // Quotient and remainder; b must be nonzero.
  void divmod(Polynomial const& a,
              Polynomial const& b,
              Polynomial&       quot,
              Polynomial&       rem);

  // Monic greatest common divisor; gcd(0, 0) = 0.
  Polynomial gcd(Polynomial a, Polynomial b);

  // p / gcd(p, p'): the same roots, each simple.
  Polynomial squarefree_part(Polynomial const& p);

  class SturmSequence {
   public:
    explicit SturmSequence(Polynomial const& p);

    // Sign variations at t, zeros skipped.
    std::size_t variations(Rational const& t) const;

    // Distinct real roots in the half-open interval (a, b], a < b.
    std::size_t count_roots(Rational const& a, Rational const& b) const;

    // Distinct real roots in the open interval (a, b), a < b.
    std::size_t count_open(Rational const& a, Rational const& b) const;

    Polynomial const& polynomial() const noexcept {
      return _seq.front();
    }

   private:
    std::vector<Polynomial> _seq;
  };

  // A real root located exactly (lo == hi) or in an open interval (lo, hi)
  // containing exactly one root of the owning squarefree polynomial, which
  // has opposite nonzero signs at lo and hi.
  struct RootInterval {
    Rational lo;
    Rational hi;

    bool exact() const {
      return lo == hi;
    }
    bool operator==(RootInterval const&) const = default;
  };

  // Isolating intervals of the distinct roots of the squarefree polynomial p
  // in the open interval (a, b), in increasing order.
  std::vector<RootInterval> isolate_roots(Polynomial const& p,
                                          Rational const&   a,
                                          Rational const&   b);

  // Halves an open isolating interval (or lands exactly on the root).
  void refine(Polynomial const& p, RootInterval& r);

  // True iff p has a root in the closed interval [a, b].
  bool has_root_in(Polynomial const& p, Rational const& a, Rational const& b);

}  // namespace gnk

#endif  // GNK_POLYNOMIAL_HPP_
