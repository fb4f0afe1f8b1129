#include "gnk/polynomial.hpp"

#include <algorithm>  // for max
#include <stdexcept>  // for invalid_argument

namespace gnk {

  Polynomial::Polynomial(std::vector<Rational> coeffs) : _c(std::move(coeffs)) {
    trim();
  }

  void Polynomial::trim() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
  }

  Polynomial Polynomial::interpolate(std::span<Rational const> xs,
                                     std::span<Rational const> ys) {
    if (xs.size() != ys.size()) {
      throw std::invalid_argument("interpolate: size mismatch");
    }
    // Newton divided differences, then expansion of the Newton form.
    std::size_t const     m = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < m; ++j) {
      for (std::size_t i = m - 1; i >= j; --i) {
        dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      }
    }
    Polynomial result;
    for (std::size_t i = m; i-- > 0;) {
      // result = result * (t - xs[i]) + dd[i]
      result = result * Polynomial({-xs[i], Rational(1)}) + Polynomial({dd[i]});
    }
    return result;
  }

  Rational Polynomial::operator()(Rational const& t) const {
    Rational r = 0;
    for (std::size_t i = _c.size(); i-- > 0;) {
      r = r * t + _c[i];
    }
    return r;
  }

  Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < _c.size(); ++i) {
      d.push_back(_c[i] * static_cast<unsigned long>(i));
    }
    return Polynomial(std::move(d));
  }

  Polynomial Polynomial::monic() const {
    if (is_zero()) {
      return *this;
    }
    std::vector<Rational> c(_c);
    Rational const        lead = c.back();
    for (auto& x : c) {
      x /= lead;
    }
    return Polynomial(std::move(c));
  }

  Polynomial operator+(Polynomial const& a, Polynomial const& b) {
    std::vector<Rational> c(std::max(a._c.size(), b._c.size()));
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      c[i] += a._c[i];
    }
    for (std::size_t i = 0; i < b._c.size(); ++i) {
      c[i] += b._c[i];
    }
    return Polynomial(std::move(c));
  }

  Polynomial operator-(Polynomial const& a, Polynomial const& b) {
    std::vector<Rational> c(std::max(a._c.size(), b._c.size()));
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      c[i] += a._c[i];
    }
    for (std::size_t i = 0; i < b._c.size(); ++i) {
      c[i] -= b._c[i];
    }
    return Polynomial(std::move(c));
  }

  Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    if (a.is_zero() || b.is_zero()) {
      return Polynomial();
    }
    std::vector<Rational> c(a._c.size() + b._c.size() - 1);
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        c[i + j] += a._c[i] * b._c[j];
      }
    }
    return Polynomial(std::move(c));
  }

  void divmod(Polynomial const& a,
              Polynomial const& b,
              Polynomial&       quot,
              Polynomial&       rem) {
    if (b.is_zero()) {
      throw std::invalid_argument("polynomial division by zero");
    }
    std::vector<Rational> r(a.coeffs());
    int const             db = b.degree();
    std::vector<Rational> q(
        static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
    for (int i = a.degree(); i >= db; --i) {
      Rational f = r[i] / b.leading();
      if (f == 0) {
        continue;
      }
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) {
        r[i - db + j] -= f * b.coeffs()[j];
      }
    }
    quot = Polynomial(std::move(q));
    rem  = Polynomial(std::move(r));
  }

  Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Polynomial squarefree_part(Polynomial const& p) {
    if (p.degree() < 1) {
      return p;
    }
    Polynomial q, r;
    divmod(p, gcd(p, p.derivative()), q, r);
    return q;
  }

  SturmSequence::SturmSequence(Polynomial const& p) {
    _seq.push_back(p);
    if (p.is_zero()) {
      return;
    }
    _seq.push_back(p.derivative());
    while (!_seq.back().is_zero()) {
      Polynomial q, r;
      divmod(_seq[_seq.size() - 2], _seq.back(), q, r);
      _seq.push_back(Polynomial() - r);
    }
    _seq.pop_back();
  }

  std::size_t SturmSequence::variations(Rational const& t) const {
    std::size_t v    = 0;
    int         last = 0;
    for (auto const& p : _seq) {
      int s = sign(p(t));
      if (s == 0) {
        continue;
      }
      if (last != 0 && s != last) {
        ++v;
      }
      last = s;
    }
    return v;
  }

  std::size_t SturmSequence::count_roots(Rational const& a,
                                         Rational const& b) const {
    return variations(a) - variations(b);
  }

  std::size_t SturmSequence::count_open(Rational const& a,
                                        Rational const& b) const {
    if (!(a < b)) {
      return 0;
    }
    std::size_t n = count_roots(a, b);
    if (polynomial()(b) == 0) {
      --n;
    }
    return n;
  }

  namespace {
    void isolate(SturmSequence const&       s,
                 Rational const&            lo,
                 Rational const&            hi,
                 std::vector<RootInterval>& out) {
      std::size_t const n = s.count_open(lo, hi);
      if (n == 0) {
        return;
      }
      Polynomial const& p = s.polynomial();
      if (n == 1) {
        // Pull endpoints that are roots themselves inwards.
        Rational a = lo, b = hi, step = (hi - lo) / 2;
        while (p(a) == 0 || s.count_open(a, b) != 1) {
          a = lo + step;
          step /= 2;
        }
        step = (b - a) / 2;
        Rational const b0 = b;
        while (p(b) == 0 || s.count_open(a, b) != 1) {
          b = b0 - step;
          step /= 2;
        }
        out.push_back({a, b});
        return;
      }
      Rational mid = (lo + hi) / 2;
      isolate(s, lo, mid, out);
      if (p(mid) == 0) {
        out.push_back({mid, mid});
      }
      isolate(s, mid, hi, out);
    }
  }  // namespace

  std::vector<RootInterval> isolate_roots(Polynomial const& p,
                                          Rational const&   a,
                                          Rational const&   b) {
    if (p.is_zero()) {
      throw std::invalid_argument("isolate_roots: zero polynomial");
    }
    std::vector<RootInterval> out;
    isolate(SturmSequence(p), a, b, out);
    return out;
  }

  void refine(Polynomial const& p, RootInterval& r) {
    if (r.exact()) {
      return;
    }
    Rational mid = (r.lo + r.hi) / 2;
    int      sm  = sign(p(mid));
    if (sm == 0) {
      r.lo = r.hi = mid;
    } else if (sm == sign(p(r.lo))) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }

  bool has_root_in(Polynomial const& p, Rational const& a, Rational const& b) {
    if (p.is_zero()) {
      return true;
    }
    if (p(a) == 0) {
      return true;
    }
    if (a == b || p.degree() < 1) {
      return false;
    }
    return SturmSequence(squarefree_part(p)).count_roots(a, b) > 0;
  }

}  // namespace gnk
