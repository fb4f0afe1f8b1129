#include "gnk/selftest.hpp"

#include <algorithm>  // for shuffle, find, reverse
#include <random>     // for mt19937_64, uniform_int_distribution
#include <set>        // for set
#include <sstream>    // for ostringstream

#include "gnk/oracle.hpp"
#include "gnk/realization.hpp"
#include "gnk/solver.hpp"

namespace gnk {

  namespace {

    using Rng = std::mt19937_64;

    std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    Word random_word(GroupParams const& p, std::size_t max_len, Rng& rng) {
      auto const  letters = alphabet(p);
      std::size_t len     = uniform(rng, 0, max_len);
      Word        w(p);
      for (std::size_t i = 0; i < len; ++i) {
        w.push_back(letters[uniform(rng, 0, letters.size() - 1)]);
      }
      return w;
    }

    // Every word of length <= max_len, in length-then-lex order.
    template <typename Fn>
    void for_each_word(GroupParams const& p, std::size_t max_len, Fn&& fn) {
      auto const letters = alphabet(p);
      for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
          Word w(p);
          for (auto i : idx) {
            w.push_back(letters[i]);
          }
          fn(w);
          std::size_t i = len;
          while (i > 0 && ++idx[i - 1] == letters.size()) {
            idx[--i] = 0;
          }
          if (i == 0) {
            break;
          }
        }
      }
    }

    std::vector<SignString> all_signs(int k) {
      std::vector<SignString> out;
      for (unsigned bits = 0; bits < (1u << (k - 1)); ++bits) {
        SignString s;
        for (int j = 0; j < k - 1; ++j) {
          s.signs.push_back((bits >> j) & 1u ? -1 : 1);
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    bool same_invariants(Word const& u, Word const& v) {
      if (f_image(u) != f_image(v) || parity_vector(u) != parity_vector(v)) {
        return false;
      }
      for (auto const& s : all_signs(u.params().k)) {
        if (sign_action(u, s) != sign_action(v, s)) {
          return false;
        }
      }
      return true;
    }

    ////////////////////////////////////////////////////////////////////////
    // 1
    ////////////////////////////////////////////////////////////////////////

    CriterionResult well_defined(SelftestOptions const& opts, Rng& rng) {
      std::size_t const samples = opts.quick ? 200 : 1000;
      std::size_t       tried = 0, failed = 0, kinds[3] = {0, 0, 0};
      for (auto [k, max_len] : {std::pair{3, std::size_t{30}}, std::pair{4, std::size_t{20}}}) {
        auto const p       = GroupParams::last_level(k);
        auto const letters = alphabet(p);
        for (std::size_t n = 0; n < samples; ++n) {
          Word const        w = random_word(p, max_len, rng);
          std::vector<Move> cancels, reverses;
          for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) {
              cancels.push_back(Move::cancel(i));
            }
          }
          for (std::size_t i = 0; i + k < w.size(); ++i) {
            if (is_relation3_window(
                    p, std::span(w.letters()).subspan(i, std::size_t(k) + 1))) {
              reverses.push_back(Move::reverse_window(i));
            }
          }
          // Pick a kind among those available, then a move of that kind.
          std::vector<int> kinds_available{1};
          if (!cancels.empty()) {
            kinds_available.push_back(0);
          }
          if (!reverses.empty()) {
            kinds_available.push_back(2);
          }
          int  kind = kinds_available[uniform(rng, 0, kinds_available.size() - 1)];
          Move m    = Move::insert(uniform(rng, 0, w.size()),
                                letters[uniform(rng, 0, letters.size() - 1)]);
          if (kind == 0) {
            m = cancels[uniform(rng, 0, cancels.size() - 1)];
          } else if (kind == 2) {
            m = reverses[uniform(rng, 0, reverses.size() - 1)];
          }
          ++kinds[kind];
          ++tried;
          if (!same_invariants(w, apply_move(w, m))) {
            ++failed;
          }
        }
      }
      std::ostringstream d;
      d << (tried - failed) << "/" << tried << " moves preserve invariants ("
        << kinds[0] << " cancel, " << kinds[1] << " insert, " << kinds[2]
        << " reverse)";
      return {1, "relation moves preserve f, parity and sign action",
              failed == 0, d.str()};
    }

    ////////////////////////////////////////////////////////////////////////
    // 2
    ////////////////////////////////////////////////////////////////////////

    CriterionResult elimination_sound(SelftestOptions const& opts) {
      auto const        p       = GroupParams::last_level(3);
      Letter const      last    = Letter::b(p, 4);
      std::size_t const max_len = opts.quick ? 7 : 8;
      std::size_t       words = 0, failed = 0;
      std::string       first_failure;
      for_each_word(p, max_len, [&](Word const& w) {
        if (!f_image(w).empty()) {
          return;
        }
        ++words;
        bool ok = false;
        try {
          Elimination e = eliminate_last(w);
          ok = std::find(e.word.begin(), e.word.end(), last) == e.word.end()
               && check_trace(w, e.trace, e.word)
               && bfs_equal_oracle(w, e.word, 14, 1000000).equal();
        } catch (Error const&) {
          ok = false;
        }
        if (!ok) {
          if (failed++ == 0) {
            first_failure = to_string(w);
          }
        }
      });
      std::ostringstream d;
      d << (words - failed) << "/" << words << " words with trivial f, length <= "
        << max_len;
      if (failed != 0) {
        d << "; first failure: " << first_failure;
      }
      return {2, "elimination of the last letter", failed == 0, d.str()};
    }

    ////////////////////////////////////////////////////////////////////////
    // 3
    ////////////////////////////////////////////////////////////////////////

    bool has_witness(Verdict const& v) {
      if (auto const* o = std::get_if<ObstructionWord>(&v.witness)) {
        return !o->empty();
      }
      if (auto const* r = std::get_if<Word>(&v.witness)) {
        return !r->empty();
      }
      if (auto const* q = std::get_if<ParityVector>(&v.witness)) {
        return !q->is_zero();
      }
      return false;
    }

    CriterionResult solver_agrees(SelftestOptions const& opts) {
      auto const        p         = GroupParams::last_level(3);
      std::size_t const max_len   = opts.quick ? 6 : 7;
      std::size_t const bound     = opts.quick ? 12 : 14;
      std::size_t const max_state = 20000000;
      BoundedClosure    identity(Word(p), bound, max_state);

      std::set<std::vector<Letter>> seen;
      std::size_t words = 0, trivial = 0, failed = 0;
      std::string first_failure;
      for_each_word(p, max_len, [&](Word const& raw) {
        Word w = free_reduce(raw);
        if (!seen.insert(w.letters()).second) {
          return;
        }
        ++words;
        Verdict const v  = solve_k3(w);
        bool          ok = false;
        if (v.status == Status::trivial) {
          ++trivial;
          ok = bfs_equal_oracle(w, Word(p), bound, max_state).equal();
        } else if (v.status == Status::nontrivial) {
          ok = has_witness(v) && identity.complete() && !identity.contains(w);
        }
        if (!ok && failed++ == 0) {
          first_failure = to_string(w);
        }
      });
      std::ostringstream d;
      d << (words - failed) << "/" << words
        << " free-reduced words of length <= " << max_len << " agree ("
        << trivial << " trivial; search length " << bound << ", "
        << identity.size() << " states)";
      if (failed != 0) {
        d << "; first disagreement: " << first_failure;
      }
      return {3, "solver agrees with bounded search", failed == 0, d.str()};
    }

    ////////////////////////////////////////////////////////////////////////
    // 4
    ////////////////////////////////////////////////////////////////////////

    CriterionResult orbit_sizes() {
      bool        ok = true;
      std::string d;
      for (int k : {3, 4}) {
        auto const p     = GroupParams::last_level(k);
        auto const orbit = sign_orbit(p);
        std::set<SignString> distinct(orbit.begin(), orbit.end());

        // The same orbit, read off the endpoints of realized letter paths.
        std::vector<SignString> geometric{SignString::all_plus(k)};
        for (std::size_t i = 0; i < geometric.size(); ++i) {
          for (Letter x : alphabet(p)) {
            SignString t = sign_string_of(letter_path(p, x, geometric[i]).path.back());
            if (std::find(geometric.begin(), geometric.end(), t) == geometric.end()) {
              geometric.push_back(std::move(t));
            }
          }
        }
        std::set<SignString> geo(geometric.begin(), geometric.end());
        std::size_t const    expected = std::size_t(1) << (k - 1);
        ok = ok && orbit.size() == expected && distinct.size() == expected
             && geo == distinct;
        d += (d.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + ": "
             + std::to_string(distinct.size()) + " (geometric "
             + std::to_string(geo.size()) + ")";
      }
      return {4, "sign orbit sizes", ok, d};
    }

    ////////////////////////////////////////////////////////////////////////
    // 5
    ////////////////////////////////////////////////////////////////////////

    CriterionResult roundtrip(SelftestOptions const& opts, Rng& rng) {
      std::size_t tried = 0, failed = 0;
      std::string first_failure;
      for (auto [k, count, max_len] :
           {std::tuple{3, opts.quick ? std::size_t{40} : std::size_t{200}, std::size_t{12}},
            std::tuple{4, opts.quick ? std::size_t{10} : std::size_t{50}, std::size_t{6}}}) {
        auto const p = GroupParams::last_level(k);
        for (std::size_t i = 0; i < count; ++i) {
          Word const w  = random_word(p, max_len, rng);
          bool       ok = false;
          try {
            ok = certify_roundtrip(w).ok;
          } catch (Error const&) {
            ok = false;
          }
          ++tried;
          if (!ok && failed++ == 0) {
            first_failure = to_string(w);
          }
        }
      }
      std::string d = std::to_string(tried - failed) + "/" + std::to_string(tried)
                      + " words recovered letter-exact with expected endpoint";
      if (failed != 0) {
        d += "; first failure: " + first_failure;
      }
      return {5, "word -> path -> word roundtrip", failed == 0, d};
    }

    ////////////////////////////////////////////////////////////////////////
    // 6
    ////////////////////////////////////////////////////////////////////////

    CriterionResult letter_paths() {
      std::size_t tried = 0, failed = 0;
      std::string first_failure;
      for (int k : {3, 4}) {
        auto const p = GroupParams::last_level(k);
        for (auto const& s : all_signs(k)) {
          for (Letter x : alphabet(p)) {
            ++tried;
            bool ok = false;
            try {
              LetterPath lp     = letter_path(p, x, s);
              auto       events = detect_events(lp.path);
              ok = events.size() == 1 && events[0].subset == x
                   && projectively_equal(lp.path.front(), base_configuration(s))
                   && sign_string_of(lp.path.back()) == sign_action(p, x, s);
            } catch (Error const&) {
              ok = false;
            }
            if (!ok && failed++ == 0) {
              first_failure = "k=" + std::to_string(k) + " " + format_letter(x, p)
                              + " from " + to_string(s);
            }
          }
        }
      }
      std::string d = std::to_string(tried - failed) + "/" + std::to_string(tried)
                      + " (letter, sign) pairs certified";
      if (failed != 0) {
        d += "; first failure: " + first_failure;
      }
      return {6, "letter path certification", failed == 0, d};
    }

    ////////////////////////////////////////////////////////////////////////
    // 7
    ////////////////////////////////////////////////////////////////////////

    Rational random_rational(Rng& rng) {
      long num = static_cast<long>(uniform(rng, 0, 18)) - 9;
      long den = static_cast<long>(uniform(rng, 1, 5));
      Rational r(num, den);
      r.canonicalize();
      return r;
    }

    // Points 1..k-1 at e_1..e_{k-1}, the rest random, no degeneracy.
    Configuration random_pinned(GroupParams const& p, Rng& rng) {
      int const k = p.k;
      while (true) {
        std::vector<HVector> pts;
        for (int i = 1; i <= p.n; ++i) {
          HVector v(static_cast<std::size_t>(k));
          if (i < k) {
            v[i - 1] = 1;
          } else {
            for (auto& x : v) {
              x = random_rational(rng);
            }
          }
          pts.push_back(std::move(v));
        }
        bool nonzero = std::all_of(pts.begin(), pts.end(), [](HVector const& v) {
          return std::any_of(v.begin(), v.end(), [](Rational const& x) { return x != 0; });
        });
        if (!nonzero) {
          continue;
        }
        Configuration c(p, std::move(pts));
        if (is_general_position(c) && singular_subsets(c).empty()) {
          return c;
        }
      }
    }

    CriterionResult void_paths(SelftestOptions const& opts, Rng& rng) {
      std::size_t const count = opts.quick ? 20 : 100;
      std::size_t       tried = 0, failed = 0;
      for (std::size_t i = 0; i < count; ++i) {
        auto const    p = GroupParams::last_level(i % 2 == 0 ? 3 : 4);
        Configuration c = random_pinned(p, rng);
        bool          ok = false;
        try {
          LetterPath vp = void_path_to_base(c);
          ok = detect_events(vp.path).empty()
               && projectively_equal(vp.path.front(), c)
               && projectively_equal(vp.path.back(), base_configuration(vp.end_sign));
        } catch (Error const&) {
          ok = false;
        }
        ++tried;
        failed += ok ? 0 : 1;
      }
      return {7, "void paths to base", failed == 0,
              std::to_string(tried - failed) + "/" + std::to_string(tried)
                  + " random configurations reach a base point without events"};
    }

    ////////////////////////////////////////////////////////////////////////
    // 8
    ////////////////////////////////////////////////////////////////////////

    CriterionResult reversed_orderings(Rng& rng) {
      auto const  p = GroupParams::last_level(3);
      std::size_t tried = 0, failed = 0;
      std::string detail;
      std::set<std::vector<Letter>> used;
      while (used.size() < 5) {
        auto letters = alphabet(p);
        std::shuffle(letters.begin(), letters.end(), rng);
        if (!used.insert(letters).second) {
          continue;
        }
        Word const forward(p, letters);
        std::reverse(letters.begin(), letters.end());
        Word const backward(p, letters);

        PLPath const pf = path_from_word(forward);
        PLPath const pb = path_from_word(backward);
        Word const   wf = word_from_path(pf);
        Word const   wb = word_from_path(pb);
        bool const   ok = wf == forward && wb == backward
                        && equal_k3(wf, wb).status == Status::trivial
                        && sign_string_of(pf.back()) == sign_string_of(pb.back());
        ++tried;
        failed += ok ? 0 : 1;
        detail += (detail.empty() ? "" : ", ") + format_word(forward, WordStyle::b_index);
      }
      return {8, "reversed once-each words", failed == 0,
              std::to_string(tried - failed) + "/" + std::to_string(tried)
                  + " orderings equal to their reverse (" + detail + ")"};
    }

    ////////////////////////////////////////////////////////////////////////
    // 9
    ////////////////////////////////////////////////////////////////////////

    CriterionResult transform_invariance(SelftestOptions const& opts, Rng& rng) {
      std::size_t const count = opts.quick ? 10 : 50;
      std::size_t       tried = 0, failed = 0;
      for (std::size_t i = 0; i < count; ++i) {
        int const  k = i % 2 == 0 ? 3 : 4;
        auto const p = GroupParams::last_level(k);
        RationalMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        do {
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
              a(r, c) = random_rational(rng);
            }
          }
        } while (a.determinant() == 0);
        PLPath const path = path_from_word(random_word(p, k == 3 ? 8 : 5, rng));
        bool         ok   = false;
        try {
          ok = detect_events(path)
               == detect_events(apply_transform_to_path(ProjectiveTransform(a), path));
        } catch (Error const&) {
          ok = false;
        }
        ++tried;
        failed += ok ? 0 : 1;
      }
      return {9, "events invariant under projective transforms", failed == 0,
              std::to_string(tried - failed) + "/" + std::to_string(tried)
                  + " transformed paths with identical events"};
    }

  }  // namespace

  CriterionResult run_criterion(int id, SelftestOptions const& opts) {
    // Each criterion gets its own stream so they can be run one at a time.
    Rng rng(opts.seed * 1000003u + static_cast<std::uint64_t>(id));
    try {
      switch (id) {
        case 1:
          return well_defined(opts, rng);
        case 2:
          return elimination_sound(opts);
        case 3:
          return solver_agrees(opts);
        case 4:
          return orbit_sizes();
        case 5:
          return roundtrip(opts, rng);
        case 6:
          return letter_paths();
        case 7:
          return void_paths(opts, rng);
        case 8:
          return reversed_orderings(rng);
        case 9:
          return transform_invariance(opts, rng);
        default:
          throw ParameterError("no criterion " + std::to_string(id));
      }
    } catch (ParameterError const&) {
      throw;
    } catch (std::exception const& e) {
      return {id, "criterion " + std::to_string(id), false,
              std::string("exception: ") + e.what()};
    }
  }

  std::vector<CriterionResult> run_selftest(SelftestOptions const& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kNumCriteria; ++id) {
      out.push_back(run_criterion(id, opts));
    }
    return out;
  }

  std::string format_result(CriterionResult const& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": "
        << r.detail;
    return out.str();
  }

}  // namespace gnk
