#include "gnk/oracle.hpp"

#include <algorithm>  // for reverse
#include <bit>        // for popcount

namespace gnk {

  namespace {

    // Words are encoded as strings of letter ids (positions in the alphabet)
    // so that short words stay in the small-string buffer.
    class Encoding {
     public:
      explicit Encoding(GroupParams const& p) : _p(p), _alphabet(alphabet(p)) {
        for (std::size_t i = 0; i < _alphabet.size(); ++i) {
          _masks.push_back(_alphabet[i].mask());
        }
      }

      std::string encode(Word const& w) const {
        std::string s;
        s.reserve(w.size());
        for (Letter x : w) {
          s.push_back(static_cast<char>(id(x)));
        }
        return s;
      }

      Word decode(std::string const& s) const {
        std::vector<Letter> out;
        out.reserve(s.size());
        for (char c : s) {
          out.push_back(_alphabet[static_cast<unsigned char>(c)]);
        }
        return Word(_p, std::move(out));
      }

      Letter letter(char c) const {
        return _alphabet[static_cast<unsigned char>(c)];
      }

      // Calls f(neighbour, move) for every word one move away from s.
      template <typename F>
      void for_each_neighbour(std::string const& s,
                              std::size_t        max_len,
                              F&&                f) const {
        std::size_t const L = s.size();
        for (std::size_t i = 0; i + 1 < L; ++i) {
          if (s[i] == s[i + 1]) {
            std::string t = s;
            t.erase(i, 2);
            f(std::move(t), Move::cancel(i));
          }
        }
        std::size_t const w = static_cast<std::size_t>(_p.k + 1);
        for (std::size_t i = 0; i + w <= L; ++i) {
          if (is_window(s, i)) {
            std::string t = s;
            std::reverse(t.begin() + i, t.begin() + i + w);
            f(std::move(t), Move::reverse_window(i));
          }
        }
        if (!_p.is_last_level()) {
          for (std::size_t i = 0; i + 1 < L; ++i) {
            if (std::popcount(mask(s[i]) & mask(s[i + 1])) < _p.k - 1) {
              std::string t = s;
              std::swap(t[i], t[i + 1]);
              f(std::move(t), Move::commute(i));
            }
          }
        }
        if (L + 2 <= max_len) {
          for (std::size_t i = 0; i <= L; ++i) {
            for (std::size_t x = 0; x < _alphabet.size(); ++x) {
              char c = static_cast<char>(x);
              // Inserting cc right after a c equals inserting it one earlier.
              if (i > 0 && s[i - 1] == c) {
                continue;
              }
              std::string t = s;
              t.insert(i, 2, c);
              f(std::move(t), Move::insert(i, _alphabet[x]));
            }
          }
        }
      }

     private:
      std::uint32_t mask(char c) const {
        return _masks[static_cast<unsigned char>(c)];
      }

      bool is_window(std::string const& s, std::size_t i) const {
        std::size_t const w   = static_cast<std::size_t>(_p.k + 1);
        std::uint32_t     uni = 0;
        for (std::size_t a = i; a < i + w; ++a) {
          for (std::size_t b = i; b < a; ++b) {
            if (s[a] == s[b]) {
              return false;
            }
          }
          uni |= mask(s[a]);
        }
        return std::popcount(uni) == _p.k + 1;
      }

      std::size_t id(Letter x) const {
        for (std::size_t i = 0; i < _masks.size(); ++i) {
          if (_masks[i] == x.mask()) {
            return i;
          }
        }
        throw ParameterError("letter not in alphabet");
      }

      GroupParams                _p;
      std::vector<Letter>        _alphabet;
      std::vector<std::uint32_t> _masks;
    };

    struct Side {
      std::vector<std::string>                       states;
      std::vector<std::uint32_t>                     parent;
      std::vector<Move>                              move;
      std::unordered_map<std::string, std::uint32_t> index;
      std::size_t                                    layer_begin = 0;

      explicit Side(std::string root) {
        index.emplace(root, 0);
        states.push_back(std::move(root));
        parent.push_back(0);
        move.push_back(Move::cancel(0));
      }

      bool frontier_empty() const {
        return layer_begin == states.size();
      }
      std::size_t frontier_size() const {
        return states.size() - layer_begin;
      }

      // Moves taking the root to states[i].
      std::vector<Move> path_to(std::uint32_t i) const {
        std::vector<Move> out;
        while (i != 0) {
          out.push_back(move[i]);
          i = parent[i];
        }
        std::reverse(out.begin(), out.end());
        return out;
      }

      // Moves taking states[i] back to the root.
      std::vector<Move> path_from(std::uint32_t      i,
                                  Encoding const& enc) const {
        std::vector<Move> out;
        while (i != 0) {
          out.push_back(invert_move(enc.decode(states[parent[i]]), move[i]));
          i = parent[i];
        }
        return out;
      }
    };

  }  // namespace

  OracleResult bfs_equal_oracle(Word const& w1,
                                Word const& w2,
                                std::size_t max_len,
                                std::size_t max_states) {
    if (!(w1.params() == w2.params())) {
      throw ParameterError("oracle words have different parameters");
    }
    OracleResult result;
    if (w1 == w2) {
      result.status = OracleResult::Status::equal;
      result.states = 1;
      return result;
    }
    if (w1.size() > max_len || w2.size() > max_len) {
      return result;
    }
    Encoding enc(w1.params());
    Side     a(enc.encode(w1)), b(enc.encode(w2));

    while (!a.frontier_empty() && !b.frontier_empty()) {
      bool        forward = a.frontier_size() <= b.frontier_size();
      Side&       me      = forward ? a : b;
      Side const& other   = forward ? b : a;
      std::size_t const end = me.states.size();
      for (std::size_t i = me.layer_begin; i < end; ++i) {
        bool              met = false;
        std::string const s   = me.states[i];
        enc.for_each_neighbour(s, max_len, [&](std::string&& t, Move m) {
          if (met) {
            return;
          }
          auto hit = other.index.find(t);
          if (hit != other.index.end()) {
            met = true;
            auto src = static_cast<std::uint32_t>(i);
            if (forward) {
              result.trace = a.path_to(src);
              result.trace.push_back(m);
              auto tail = b.path_from(hit->second, enc);
              result.trace.insert(result.trace.end(), tail.begin(), tail.end());
            } else {
              // Here m goes from b's state s to t, which a already holds.
              result.trace = a.path_to(hit->second);
              result.trace.push_back(invert_move(enc.decode(s), m));
              auto tail = b.path_from(src, enc);
              result.trace.insert(result.trace.end(), tail.begin(), tail.end());
            }
            return;
          }
          if (me.index.contains(t)) {
            return;
          }
          me.index.emplace(t, static_cast<std::uint32_t>(me.states.size()));
          me.states.push_back(std::move(t));
          me.parent.push_back(static_cast<std::uint32_t>(i));
          me.move.push_back(m);
        });
        if (met) {
          result.status = OracleResult::Status::equal;
          result.states = a.states.size() + b.states.size();
          return result;
        }
        if (a.states.size() + b.states.size() > max_states) {
          result.states = a.states.size() + b.states.size();
          return result;
        }
      }
      me.layer_begin = end;
    }
    result.states = a.states.size() + b.states.size();
    return result;
  }

  BoundedClosure::BoundedClosure(Word const& root,
                                 std::size_t max_len,
                                 std::size_t max_states)
      : _params(root.params()), _max_len(max_len) {
    Encoding enc(_params);
    _alphabet = alphabet(_params);
    if (root.size() > max_len) {
      _complete = true;
      return;
    }
    std::string r = enc.encode(root);
    _index.emplace(r, 0);
    _states.push_back(std::move(r));
    _parent.push_back(0);
    _move.push_back(Move::cancel(0));
    for (std::size_t i = 0; i < _states.size(); ++i) {
      if (_states.size() > max_states) {
        return;
      }
      std::string const s = _states[i];
      enc.for_each_neighbour(s, max_len, [&](std::string&& t, Move m) {
        if (_index.contains(t)) {
          return;
        }
        _index.emplace(t, static_cast<std::uint32_t>(_states.size()));
        _states.push_back(std::move(t));
        _parent.push_back(static_cast<std::uint32_t>(i));
        _move.push_back(m);
      });
    }
    _complete = true;
  }

  bool BoundedClosure::contains(Word const& w) const {
    if (!(w.params() == _params) || w.size() > _max_len) {
      return false;
    }
    return _index.contains(Encoding(_params).encode(w));
  }

  std::optional<std::vector<Move>>
  BoundedClosure::derivation(Word const& target) const {
    if (!(target.params() == _params) || target.size() > _max_len) {
      return std::nullopt;
    }
    auto it = _index.find(Encoding(_params).encode(target));
    if (it == _index.end()) {
      return std::nullopt;
    }
    std::vector<Move> out;
    for (std::uint32_t i = it->second; i != 0; i = _parent[i]) {
      out.push_back(_move[i]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

}  // namespace gnk
