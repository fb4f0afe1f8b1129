#include "gnk/realization.hpp"

#include <algorithm>  // for max, min

namespace gnk {

  using Kind = GeometryError::Kind;

  ////////////////////////////////////////////////////////////////////////
  // PLPath
  ////////////////////////////////////////////////////////////////////////

  PLPath::PLPath(GroupParams const& p, std::vector<Configuration> keyframes)
      : _params(p), _keyframes(std::move(keyframes)) {
    if (_keyframes.size() < 2) {
      throw GeometryError(Kind::degenerate_input,
                          "a path needs at least two keyframes");
    }
    for (auto const& c : _keyframes) {
      if (!(c.params == p)) {
        throw GeometryError(Kind::degenerate_input,
                            "keyframe parameters differ from the path's");
      }
    }
  }

  PLPath PLPath::constant(Configuration const& c) {
    return PLPath(c.params, {c, c});
  }

  void PLPath::append(PLPath const& other) {
    if (!(other._params == _params)) {
      throw GeometryError(Kind::degenerate_input,
                          "appending a path with different parameters");
    }
    Configuration const& joint = other.front();
    if (!projectively_equal(back(), joint)) {
      throw GeometryError(Kind::degenerate_input,
                          "appended path does not start where this one ends");
    }
    std::vector<Rational> scale;
    for (std::size_t i = 0; i < joint.points.size(); ++i) {
      HVector const& from = joint.points[i];
      std::size_t    j    = 0;
      while (from[j] == 0) {
        ++j;
      }
      scale.push_back(back().points[i][j] / from[j]);
    }
    for (std::size_t f = 1; f < other._keyframes.size(); ++f) {
      Configuration c = other._keyframes[f];
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        for (auto& a : c.points[i]) {
          a *= scale[i];
        }
      }
      _keyframes.push_back(std::move(c));
    }
  }

  void validate_path(PLPath const& path) {
    auto const& frames = path.keyframes();
    for (std::size_t f = 0; f < frames.size(); ++f) {
      if (auto bad = general_position_violation(frames[f])) {
        std::string pts;
        for (int i : *bad) {
          pts += (pts.empty() ? "" : ",") + std::to_string(i);
        }
        throw GeometryError(Kind::degenerate_keyframe,
                            "keyframe " + std::to_string(f) + ": points {" + pts
                                + "} are not in general position");
      }
      auto sing = singular_subsets(frames[f]);
      if (!sing.empty()) {
        throw GeometryError(Kind::degenerate_keyframe,
                            "keyframe " + std::to_string(f) + ": subset "
                                + format_letter(sing.front(), path.params())
                                + " is singular");
      }
    }
    for (std::size_t s = 0; s + 1 < frames.size(); ++s) {
      for (std::size_t i = 0; i < frames[s].points.size(); ++i) {
        HVector const& x = frames[s].points[i];
        HVector const& y = frames[s + 1].points[i];
        if (!proportional(x, y)) {
          continue;
        }
        std::size_t j = 0;
        while (x[j] == 0) {
          ++j;
        }
        if (sign(y[j]) != sign(x[j])) {
          throw GeometryError(Kind::zero_crossing,
                              "segment " + std::to_string(s) + ": point "
                                  + std::to_string(i + 1)
                                  + " passes through the zero vector");
        }
      }
    }
  }

  Polynomial segment_determinant(PLPath const& path,
                                 std::size_t   segment,
                                 Letter        m) {
    Configuration const& a = path.keyframes().at(segment);
    Configuration const& b = path.keyframes().at(segment + 1);
    int const            k = path.params().k;
    // The determinant has degree <= k in t; sample at t = 0..k.
    std::vector<Rational> ts, vals;
    for (int s = 0; s <= k; ++s) {
      Rational const       t = s;
      std::vector<HVector> rows;
      for (int i : m.elements()) {
        HVector r(a[i].size());
        for (std::size_t j = 0; j < r.size(); ++j) {
          r[j] = (1 - t) * a[i][j] + t * b[i][j];
        }
        rows.push_back(std::move(r));
      }
      ts.push_back(t);
      vals.push_back(RationalMatrix(rows).determinant());
    }
    return Polynomial::interpolate(ts, vals);
  }

  std::string to_string(RootInterval const& t) {
    if (t.exact()) {
      return format_rational(t.lo);
    }
    return "[" + format_rational(t.lo) + "," + format_rational(t.hi) + "]";
  }

  namespace {

    struct Candidate {
      Polynomial   poly;  // squarefree
      RootInterval t;
      Letter       subset;
    };

    std::string describe(std::size_t seg, GroupParams const& p, Letter m) {
      return "segment " + std::to_string(seg) + ", subset "
             + format_letter(m, p);
    }

    // Refines both roots until they are separated; throws if they coincide.
    bool earlier(Candidate&         a,
                 Candidate&         b,
                 std::size_t        seg,
                 GroupParams const& p) {
      Polynomial common;
      bool       have_common = false;
      while (true) {
        if (a.t.exact() && b.t.exact()) {
          if (a.t.lo == b.t.lo) {
            break;
          }
          return a.t.lo < b.t.lo;
        }
        if (a.t.hi <= b.t.lo) {
          return true;
        }
        if (b.t.hi <= a.t.lo) {
          return false;
        }
        if (!have_common) {
          common      = gcd(a.poly, b.poly);
          have_common = true;
        }
        if (common.degree() >= 1
            && has_root_in(common,
                           std::max(a.t.lo, b.t.lo),
                           std::min(a.t.hi, b.t.hi))) {
          break;
        }
        refine(a.poly, a.t);
        refine(b.poly, b.t);
      }
      throw GeometryError(Kind::simultaneous_events,
                          describe(seg, p, a.subset) + " and subset "
                              + format_letter(b.subset, p)
                              + " degenerate at the same moment");
    }

    Rational const& report_width() {
      static Rational const w(1, 1u << 20);
      return w;
    }

  }  // namespace

  std::vector<SingularEvent> detect_events(PLPath const& path) {
    validate_path(path);
    GroupParams const&         p       = path.params();
    auto const                 letters = alphabet(p);
    std::vector<SingularEvent> out;
    for (std::size_t seg = 0; seg < path.num_segments(); ++seg) {
      std::vector<Candidate> cands;
      for (Letter m : letters) {
        Polynomial const d = segment_determinant(path, seg, m);
        if (d.is_zero()) {
          throw GeometryError(Kind::identically_singular_segment,
                              describe(seg, p, m) + " is singular throughout");
        }
        if (d(Rational(0)) == 0 || d(Rational(1)) == 0) {
          throw GeometryError(Kind::degenerate_keyframe,
                              describe(seg, p, m) + " is singular at an end");
        }
        if (d.degree() < 1) {
          continue;
        }
        Polynomial const g = gcd(d, d.derivative());
        if (g.degree() >= 1 && has_root_in(g, Rational(0), Rational(1))) {
          throw GeometryError(Kind::tangential_event,
                              describe(seg, p, m)
                                  + " has a non-simple determinant root");
        }
        Polynomial sq = squarefree_part(d);
        for (auto const& iv : isolate_roots(sq, Rational(0), Rational(1))) {
          cands.push_back({sq, iv, m});
        }
      }
      // Insertion sort: the comparison refines intervals as it goes.
      for (std::size_t i = 1; i < cands.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
          if (earlier(cands[j], cands[j - 1], seg, p)) {
            std::swap(cands[j], cands[j - 1]);
          } else {
            break;
          }
        }
      }
      // Every pair must be separable, not only neighbours after sorting.
      for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
          earlier(cands[i], cands[j], seg, p);
        }
      }
      for (auto& c : cands) {
        while (!c.t.exact() && c.t.hi - c.t.lo > report_width()) {
          refine(c.poly, c.t);
        }
        out.push_back({seg, c.t, c.subset});
      }
    }
    return out;
  }

  Word word_from_path(PLPath const& path) {
    Word w(path.params());
    for (auto const& e : detect_events(path)) {
      w.push_back(e.subset);
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Letter paths
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Configuration with_point(Configuration c, int i, HVector v) {
      c.points[static_cast<std::size_t>(i - 1)] = std::move(v);
      return c;
    }
  }  // namespace

  LetterPath letter_path(GroupParams const& p,
                         Letter             letter,
                         SignString const&  s) {
    p.require_last_level("letter_path");
    int const k = p.k;
    if (s.signs.size() != static_cast<std::size_t>(k - 1)) {
      throw ParameterError("sign string must have length k - 1");
    }
    Configuration const base = base_configuration(s);
    int const           c    = letter.omitted(p);
    std::vector<Configuration> frames{base};

    if (c <= k - 1) {
      // Point k + 1 crosses the hyperplane a_c = 0.
      HVector y = base[k + 1];
      y[c - 1]  = -y[c - 1];
      frames.push_back(with_point(base, k + 1, std::move(y)));
    } else if (c == k) {
      // Point k + 1 crosses a_k = 0; (s, -1) ~ (-s, 1).
      HVector y = base[k + 1];
      y[k - 1]  = -1;
      frames.push_back(with_point(base, k + 1, std::move(y)));
    } else {
      // Point k moves from e_k to (-2 s, -1), crossing the hyperplane of
      // points 1..k-1; the shear then brings it back to the line of e_k and
      // carries point k + 1 to (-s, 1).
      HVector x(static_cast<std::size_t>(k));
      for (int j = 0; j < k - 1; ++j) {
        x[j] = -2 * s.signs[j];
      }
      x[k - 1] = -1;
      frames.push_back(with_point(base, k, std::move(x)));
      frames.push_back(shear_family(frames.back()).end);
    }

    PLPath path(p, std::move(frames));
    if (auto snap = sign_snap_geodesic(path.back());
        !(snap.start == snap.end)) {
      path.append(PLPath(p, {snap.start, snap.end}));
    }

    SignString const expected = sign_action(p, letter, s);
    auto const       events   = detect_events(path);
    if (events.size() != 1 || events[0].subset != letter) {
      throw GeometryError(Kind::certification_failure,
                          "letter path for " + format_letter(letter, p)
                              + " does not have exactly that one event");
    }
    SignString const end = sign_string_of(path.back());
    if (end != expected) {
      throw GeometryError(Kind::certification_failure,
                          "letter path for " + format_letter(letter, p)
                              + " ends at " + to_string(end) + ", expected "
                              + to_string(expected));
    }
    return {std::move(path), end};
  }

  PLPath path_from_word(Word const& w) {
    GroupParams const& p = w.params();
    p.require_last_level("path_from_word");
    SignString s = SignString::all_plus(p.k);
    if (w.empty()) {
      return PLPath::constant(base_configuration(s));
    }
    std::optional<PLPath> path;
    for (Letter x : w) {
      LetterPath lp = letter_path(p, x, s);
      if (path) {
        path->append(lp.path);
      } else {
        path.emplace(std::move(lp.path));
      }
      s = std::move(lp.end_sign);
    }
    return std::move(*path);
  }

  LetterPath void_path_to_base(Configuration const& c) {
    GroupParams const& p = c.params;
    p.require_last_level("void_path_to_base");
    int const k = p.k;
    if (!is_general_position(c) || !singular_subsets(c).empty()) {
      throw PreconditionError(
          "void_path_to_base: configuration is not in general position or is "
          "singular");
    }
    std::vector<Configuration> frames{c};
    HVector                    ek(static_cast<std::size_t>(k));
    ek[k - 1] = 1;
    if (!proportional(c[k], ek)) {
      frames.push_back(shear_family(c).end);
    }
    std::optional<PLPath> path;
    if (frames.size() > 1) {
      path.emplace(p, std::move(frames));
    }
    Configuration const& here = path ? path->back() : c;
    Segment              snap = sign_snap_geodesic(here);
    if (!(snap.start == snap.end)) {
      PLPath tail(p, {snap.start, snap.end});
      if (path) {
        path->append(tail);
      } else {
        path.emplace(std::move(tail));
      }
    }
    if (!path) {
      path.emplace(PLPath::constant(c));
    }
    if (!detect_events(*path).empty()) {
      throw GeometryError(Kind::certification_failure,
                          "void path has a singular moment");
    }
    SignString end = sign_string_of(path->back());
    return {std::move(*path), std::move(end)};
  }

  RoundtripReport certify_roundtrip(Word const& w) {
    PLPath     path      = path_from_word(w);
    Word       recovered = word_from_path(path);
    SignString endpoint  = sign_string_of(path.back());
    SignString expected  = sign_action(w, SignString::all_plus(w.params().k));
    bool       ok        = recovered == w && endpoint == expected;
    return {w, std::move(recovered), std::move(endpoint), std::move(expected), ok};
  }

  PLPath apply_transform_to_path(ProjectiveTransform const& a,
                                 PLPath const&              path) {
    std::vector<Configuration> frames;
    for (auto const& c : path.keyframes()) {
      std::vector<HVector> pts;
      for (auto const& x : c.points) {
        pts.push_back(a.apply(x));
      }
      frames.emplace_back(c.params, std::move(pts));
    }
    return PLPath(path.params(), std::move(frames));
  }

}  // namespace gnk
