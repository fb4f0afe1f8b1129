#include "gnk/solver.hpp"

#include <random>  // for mt19937_64, uniform_int_distribution

namespace gnk {

  namespace {

    // A word under rewriting; every change goes through a checked Move.
    class Rewriter {
     public:
      explicit Rewriter(Word const& w) : _p(w.params()), _w(w.letters()) {}

      void apply(Move const& m) {
        apply_move(_w, _p, m);
        _trace.push_back(m);
      }

      int b(std::size_t i) const {
        return _w[i].b_index(_p);
      }
      std::size_t size() const {
        return _w.size();
      }
      GroupParams const& params() const {
        return _p;
      }
      Word word() const {
        return Word(_p, _w);
      }
      EliminationTrace& trace() {
        return _trace;
      }

      std::size_t next_last(std::size_t from) const {
        for (std::size_t i = from; i < _w.size(); ++i) {
          if (b(i) == _p.k + 1) {
            return i;
          }
        }
        return _w.size();
      }

      // Cancels adjacent pairs inside [lo, hi) until none is left; returns the
      // new hi.
      std::size_t reduce_range(std::size_t lo, std::size_t hi) {
        std::size_t i = lo;
        while (i + 1 < hi) {
          if (_w[i] == _w[i + 1]) {
            apply(Move::cancel(i));
            hi -= 2;
            if (i > lo) {
              --i;
            }
          } else {
            ++i;
          }
        }
        return hi;
      }

     private:
      GroupParams         _p;
      std::vector<Letter> _w;
      EliminationTrace    _trace;
    };

    // Removes the b_{k+1} at `first` together with the next one. The letters
    // strictly between them must have a common parity per b_1..b_k.
    void eliminate_pair(Rewriter&                 r,
                        std::size_t               first,
                        std::vector<std::size_t>* gaps) {
      GroupParams const& p = r.params();
      int const          k = p.k;
      while (true) {
        std::size_t second = r.next_last(first + 1);
        if (second == r.size()) {
          throw PreconditionError("no second occurrence of the last letter");
        }
        second = r.reduce_range(first + 1, second);
        std::size_t const gap = second - first - 1;
        if (gaps != nullptr) {
          gaps->push_back(gap);
        }

        // Minimal p such that the p-th letter of B repeats an earlier one.
        std::uint32_t seen  = 0;
        std::size_t   rep   = second;
        for (std::size_t j = first + 1; j < second; ++j) {
          std::uint32_t bit = 1u << r.b(j);
          if (seen & bit) {
            rep = j;
            break;
          }
          seen |= bit;
        }

        if (rep == second) {
          // All letters distinct: B is empty or a once-each arrangement of
          // b_1..b_k, and b_{k+1} B = B^-1 b_{k+1}.
          if (gap == 0) {
            r.apply(Move::cancel(first));
            return;
          }
          if (gap != static_cast<std::size_t>(k)) {
            throw PreconditionError(
                "letters between the two occurrences have mixed parities");
          }
          r.apply(Move::reverse_window(first));
          r.apply(Move::cancel(first + static_cast<std::size_t>(k)));
          return;
        }

        std::size_t const s_len = rep - first - 1;  // i_1 .. i_{p-1}
        int const         x     = r.b(rep);         // i_p = i_q
        std::vector<int>  P, Q;
        for (int j = 1; j <= k; ++j) {
          if (!(seen & (1u << j))) {
            P.push_back(j);
          } else if (j != x) {
            Q.push_back(j);
          }
        }

        // b_{k+1} S x B'  ->  P^-1 P b_{k+1} S x B'
        for (std::size_t j = 0; j < P.size(); ++j) {
          r.apply(Move::insert(first + j, Letter::b(p, P[P.size() - 1 - j])));
        }
        // P b_{k+1} S  ->  S^-1 b_{k+1} P^-1
        r.apply(Move::reverse_window(first + P.size()));
        std::size_t const f = first + P.size() + s_len;
        // b_{k+1}  ->  Q^-1 Q b_{k+1}
        for (std::size_t j = 0; j < Q.size(); ++j) {
          r.apply(Move::insert(f + j, Letter::b(p, Q[Q.size() - 1 - j])));
        }
        // Q b_{k+1} P^-1 x  ->  x P b_{k+1} Q^-1
        r.apply(Move::reverse_window(f + Q.size()));
        first = f + Q.size() + 1 + P.size();
      }
    }

    std::vector<std::size_t> last_positions(Word const& w) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].b_index(w.params()) == w.params().k + 1) {
          out.push_back(i);
        }
      }
      return out;
    }

    void require_k3(GroupParams const& p) {
      if (p.k != 3 || p.n != 4) {
        throw ParameterError("the decision procedure requires k = 3, n = 4");
      }
    }

  }  // namespace

  Elimination inner_eliminate(Word const& B) {
    GroupParams const& p = B.params();
    p.require_last_level("inner_eliminate");
    std::vector<int> counts(static_cast<std::size_t>(p.k), 0);
    for (Letter x : B) {
      int j = x.b_index(p);
      if (j == p.k + 1) {
        throw PreconditionError("inner_eliminate: B contains b"
                                + std::to_string(p.k + 1));
      }
      ++counts[j - 1];
    }
    for (int c : counts) {
      if ((c - counts[0]) % 2 != 0) {
        std::string msg = "inner_eliminate: letter counts of B have mixed parities (";
        for (std::size_t j = 0; j < counts.size(); ++j) {
          msg += (j == 0 ? "" : ",") + std::to_string(counts[j]);
        }
        throw PreconditionError(msg + ")");
      }
    }
    Word w(p);
    w.push_back(Letter::b(p, p.k + 1));
    for (Letter x : B) {
      w.push_back(x);
    }
    w.push_back(Letter::b(p, p.k + 1));

    Rewriter    r(w);
    Elimination out{Word(p), {}, {}};
    eliminate_pair(r, 0, &out.progress);
    out.word  = r.word();
    out.trace = std::move(r.trace());
    return out;
  }

  Elimination eliminate_last(Word const& w, EliminationOptions const& opts) {
    GroupParams const& p = w.params();
    p.require_last_level("eliminate_last");
    if (auto o = f_image(w); !o.empty()) {
      throw NotInH(std::move(o));
    }
    std::optional<std::mt19937_64> rng;
    if (opts.seed) {
      rng.emplace(*opts.seed);
    }

    Rewriter    r(w);
    Elimination out{Word(p), {}, {}};
    while (true) {
      Word current = r.word();
      auto pos     = last_positions(current);
      out.progress.push_back(pos.size());
      if (pos.empty()) {
        break;
      }
      auto idx = f_image_unreduced(current);
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        if (idx.letters[i] == idx.letters[i + 1]) {
          candidates.push_back(i);
        }
      }
      if (candidates.empty()) {
        // Unreachable when f(w) = 1: a nonempty word reducing to 1 in F_k has
        // an adjacent equal pair.
        throw PreconditionError("eliminate_last: no admissible pair");
      }
      std::size_t pick = 0;
      if (rng) {
        std::uniform_int_distribution<std::size_t> d(0, candidates.size() - 1);
        pick = d(*rng);
      }
      eliminate_pair(r, pos[candidates[pick]], nullptr);
    }
    out.word  = r.word();
    out.trace = std::move(r.trace());
    return out;
  }

  HMembership is_in_H(Word const& w) {
    w.params().require_last_level("is_in_H");
    if (auto o = f_image(w); !o.empty()) {
      return {false, Word(w.params()), std::move(o), {}};
    }
    auto e = eliminate_last(w);
    return {true, std::move(e.word), {}, std::move(e.trace)};
  }

  std::string to_string(Status s) {
    switch (s) {
      case Status::trivial:
        return "Trivial";
      case Status::nontrivial:
        return "NonTrivial";
      default:
        return "Unknown";
    }
  }

  namespace {
    // Elimination followed by free reduction, with the joint trace.
    std::pair<Word, EliminationTrace> eliminate_and_reduce(Word const& w) {
      auto     e = eliminate_last(w);
      Rewriter r(e.word);
      r.reduce_range(0, e.word.size());
      EliminationTrace trace = std::move(e.trace);
      trace.insert(trace.end(), r.trace().begin(), r.trace().end());
      return {r.word(), std::move(trace)};
    }
  }  // namespace

  Verdict solve_k3(Word const& w) {
    require_k3(w.params());
    if (auto o = f_image(w); !o.empty()) {
      return {Status::nontrivial, w, std::move(o), {}};
    }
    auto [residue, trace] = eliminate_and_reduce(w);
    if (residue.empty()) {
      return {Status::trivial, w, std::move(trace), {}};
    }
    return {Status::nontrivial, w, std::move(residue), {kH3Freeness}};
  }

  Verdict equal_k3(Word const& w1, Word const& w2) {
    require_k3(w1.params());
    require_k3(w2.params());
    return solve_k3(free_reduce(concat(w1, inverse(w2))));
  }

  Verdict solve_semi(Word const& w) {
    GroupParams const& p = w.params();
    p.require_last_level("solve_semi");
    if (p.k < 3) {
      throw ParameterError("solve_semi requires k >= 3");
    }
    if (auto o = f_image(w); !o.empty()) {
      return {Status::nontrivial, w, std::move(o), {}};
    }
    if (auto v = parity_vector(w); !v.is_zero()) {
      return {Status::nontrivial, w, std::move(v), {}};
    }
    auto [residue, trace] = eliminate_and_reduce(w);
    if (residue.empty()) {
      return {Status::trivial, w, std::move(trace), {}};
    }
    return {Status::unknown, w, std::move(residue), {}};
  }

  bool check_trace(Word const&             input,
                   EliminationTrace const& trace,
                   Word const&             output) {
    std::vector<Letter> w(input.letters());
    for (std::size_t i = 0; i < trace.size(); ++i) {
      try {
        apply_move(w, input.params(), trace[i]);
      } catch (RelationError const& e) {
        throw IllegalMove(i, e.what());
      }
    }
    return input.params() == output.params() && w == output.letters();
  }

}  // namespace gnk
