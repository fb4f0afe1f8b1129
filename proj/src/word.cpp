#include "gnk/word.hpp"

#include <algorithm>  // for reverse, sort
#include <bit>        // for popcount, countr_zero
#include <cctype>     // for isdigit, isspace
#include <sstream>    // for ostringstream

namespace gnk {

  ////////////////////////////////////////////////////////////////////////
  // GroupParams
  ////////////////////////////////////////////////////////////////////////

  GroupParams::GroupParams(int n_, int k_) : n(n_), k(k_) {
    if (!(k >= 2 && n > k)) {
      throw ParameterError("expected n > k >= 2, found n = " + std::to_string(n)
                           + ", k = " + std::to_string(k));
    }
    if (n > 31) {
      throw ParameterError("n > 31 is not supported");
    }
  }

  void GroupParams::require_last_level(std::string_view what) const {
    if (!is_last_level()) {
      throw ParameterError(std::string(what) + " requires n = k + 1, found n = "
                           + std::to_string(n) + ", k = " + std::to_string(k));
    }
  }

  std::size_t GroupParams::num_letters() const {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) {
      r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Letter
  ////////////////////////////////////////////////////////////////////////

  Letter Letter::from_subset(GroupParams const& p, std::span<int const> elts) {
    std::uint32_t mask = 0;
    for (int i : elts) {
      if (i < 1 || i > p.n) {
        throw ParameterError("subset element " + std::to_string(i)
                             + " out of range 1.." + std::to_string(p.n));
      }
      std::uint32_t bit = 1u << (i - 1);
      if (mask & bit) {
        throw ParameterError("repeated subset element " + std::to_string(i));
      }
      mask |= bit;
    }
    if (static_cast<int>(elts.size()) != p.k) {
      throw ParameterError("subset has " + std::to_string(elts.size())
                           + " elements, expected k = " + std::to_string(p.k));
    }
    return Letter(mask);
  }

  Letter Letter::b(GroupParams const& p, int j) {
    p.require_last_level("b-index letters");
    if (j < 1 || j > p.k + 1) {
      throw ParameterError("b" + std::to_string(j) + " out of range b1..b"
                           + std::to_string(p.k + 1));
    }
    std::uint32_t full = (1u << (p.k + 1)) - 1;
    int           c    = p.k + 2 - j;
    return Letter(full & ~(1u << (c - 1)));
  }

  std::vector<int> Letter::elements() const {
    std::vector<int> out;
    for (std::uint32_t m = _mask; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  int Letter::omitted(GroupParams const& p) const {
    p.require_last_level("omitted index");
    std::uint32_t full = (1u << (p.k + 1)) - 1;
    return std::countr_zero(full & ~_mask) + 1;
  }

  int Letter::b_index(GroupParams const& p) const {
    return p.k + 2 - omitted(p);
  }

  std::strong_ordering Letter::operator<=>(Letter const& that) const noexcept {
    if (_mask == that._mask) {
      return std::strong_ordering::equal;
    }
    // The lowest differing element decides; whoever owns it is smaller.
    std::uint32_t low = (_mask ^ that._mask) & (~(_mask ^ that._mask) + 1);
    return (_mask & low) ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  }

  std::vector<Letter> alphabet(GroupParams const& p) {
    std::vector<Letter> out;
    std::vector<int>    sub(p.k);
    for (int i = 0; i < p.k; ++i) {
      sub[i] = i + 1;
    }
    while (true) {
      out.push_back(Letter::from_subset(p, sub));
      int i = p.k - 1;
      while (i >= 0 && sub[i] == p.n - p.k + i + 1) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++sub[i];
      for (int j = i + 1; j < p.k; ++j) {
        sub[j] = sub[j - 1] + 1;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(GroupParams const& p, std::vector<Letter> letters)
      : _params(p), _letters(std::move(letters)) {
    std::uint32_t const universe = (1u << p.n) - 1;
    for (Letter x : _letters) {
      if (std::popcount(x.mask()) != p.k || (x.mask() & ~universe) != 0) {
        throw ParameterError("letter inconsistent with parameters");
      }
    }
  }

  Word Word::from_b(GroupParams const& p, std::initializer_list<int> js) {
    Word w(p);
    for (int j : js) {
      w.push_back(Letter::b(p, j));
    }
    return w;
  }

  namespace {
    bool parse_uint(std::string_view s, int& out) {
      if (s.empty() || s.size() > 9) {
        return false;
      }
      out = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
        out = out * 10 + (c - '0');
      }
      return true;
    }

    Letter parse_token(std::string_view tok,
                       std::size_t      pos,
                       GroupParams const& p) {
      if (tok.size() >= 2 && tok[0] == 'b') {
        int j;
        if (!parse_uint(tok.substr(1), j)) {
          throw ParseError(pos, "malformed token '" + std::string(tok) + "'");
        }
        if (!p.is_last_level()) {
          throw ParseError(pos, "b-index letters require n = k + 1");
        }
        if (j < 1 || j > p.k + 1) {
          throw ParseError(pos,
                           "index out of range in '" + std::string(tok) + "'");
        }
        return Letter::b(p, j);
      }
      if (tok.size() >= 4 && tok.substr(0, 2) == "a{" && tok.back() == '}') {
        std::string_view body = tok.substr(2, tok.size() - 3);
        std::vector<int> elts;
        while (true) {
          auto comma = body.find(',');
          int  v;
          if (!parse_uint(body.substr(0, comma), v)) {
            throw ParseError(pos,
                             "malformed token '" + std::string(tok) + "'");
          }
          elts.push_back(v);
          if (comma == std::string_view::npos) {
            break;
          }
          body.remove_prefix(comma + 1);
        }
        for (int v : elts) {
          if (v < 1 || v > p.n) {
            throw ParseError(
                pos, "index out of range in '" + std::string(tok) + "'");
          }
        }
        try {
          return Letter::from_subset(p, elts);
        } catch (ParameterError const& e) {
          throw ParseError(pos, e.what());
        }
      }
      throw ParseError(pos, "malformed token '" + std::string(tok) + "'");
    }
  }  // namespace

  Word parse_word(std::string_view text, GroupParams const& p) {
    Word        w(p);
    std::size_t i = 0, pos = 0;
    auto        space
        = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
      if (space(text[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !space(text[j])) {
        ++j;
      }
      w.push_back(parse_token(text.substr(i, j - i), pos++, p));
      i = j;
    }
    return w;
  }

  std::string format_letter(Letter x, GroupParams const& p, WordStyle style) {
    if (style == WordStyle::b_index) {
      return "b" + std::to_string(x.b_index(p));
    }
    std::string out = "a{";
    bool        first = true;
    for (int i : x.elements()) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

  std::string format_word(Word const& w, WordStyle style) {
    if (style == WordStyle::b_index) {
      w.params().require_last_level("b-index formatting");
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += format_letter(w[i], w.params(), style);
    }
    return out;
  }

  std::string to_string(Word const& w) {
    return format_word(w,
                       w.params().is_last_level() ? WordStyle::b_index
                                                  : WordStyle::subset);
  }

  Word concat(Word const& u, Word const& v) {
    if (!(u.params() == v.params())) {
      throw ParameterError("concatenating words with different parameters");
    }
    std::vector<Letter> out(u.letters());
    out.insert(out.end(), v.begin(), v.end());
    return Word(u.params(), std::move(out));
  }

  Word inverse(Word const& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    return Word(w.params(), std::move(out));
  }

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    for (Letter x : w) {
      if (!stack.empty() && stack.back() == x) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return Word(w.params(), std::move(stack));
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  bool is_relation3_window(GroupParams const& p, std::span<Letter const> xs) {
    if (static_cast<int>(xs.size()) != p.k + 1) {
      return false;
    }
    std::uint32_t uni = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (xs[i] == xs[j]) {
          return false;
        }
      }
      uni |= xs[i].mask();
    }
    // k+1 distinct k-subsets inside a (k+1)-set are all of its k-subsets.
    return std::popcount(uni) == p.k + 1;
  }

  bool commutes(GroupParams const& p, Letter x, Letter y) {
    return std::popcount(x.mask() & y.mask()) < p.k - 1;
  }

  namespace {
    std::string at(std::size_t i) {
      return " at index " + std::to_string(i);
    }
  }  // namespace

  void apply_move(std::vector<Letter>& w, GroupParams const& p, Move const& m) {
    std::size_t const i = m.index;
    switch (m.kind) {
      case Move::Kind::cancel:
        if (i + 1 >= w.size() || w[i] != w[i + 1]) {
          throw RelationError("no cancellable pair" + at(i));
        }
        w.erase(w.begin() + i, w.begin() + i + 2);
        return;
      case Move::Kind::insert:
        if (i > w.size()) {
          throw RelationError("insertion position out of range" + at(i));
        }
        if (std::popcount(m.letter.mask()) != p.k
            || (m.letter.mask() >> p.n) != 0) {
          throw RelationError("inserted letter inconsistent with parameters");
        }
        w.insert(w.begin() + i, 2, m.letter);
        return;
      case Move::Kind::reverse_window: {
        std::size_t const len = static_cast<std::size_t>(p.k + 1);
        if (i + len > w.size()
            || !is_relation3_window(p, std::span(w).subspan(i, len))) {
          throw RelationError("not a relation-(3') window" + at(i));
        }
        std::reverse(w.begin() + i, w.begin() + i + len);
        return;
      }
      case Move::Kind::commute:
        if (i + 1 >= w.size() || !commutes(p, w[i], w[i + 1])) {
          throw RelationError("letters do not commute" + at(i));
        }
        std::swap(w[i], w[i + 1]);
        return;
    }
  }

  Word apply_move(Word const& w, Move const& m) {
    std::vector<Letter> out(w.letters());
    apply_move(out, w.params(), m);
    return Word(w.params(), std::move(out));
  }

  Move invert_move(Word const& w, Move const& m) {
    switch (m.kind) {
      case Move::Kind::cancel:
        return Move::insert(m.index, w[m.index]);
      case Move::Kind::insert:
        return Move::cancel(m.index);
      default:
        return m;
    }
  }

  Word apply_relation3_at(Word const& w, std::size_t start) {
    return apply_move(w, Move::reverse_window(start));
  }

  Word apply_relation2_at(Word const& w, std::size_t i) {
    return apply_move(w, Move::commute(i));
  }

  std::string format_move(Move const& m, GroupParams const& p) {
    std::ostringstream os;
    switch (m.kind) {
      case Move::Kind::cancel:
        os << "cancel " << m.index;
        break;
      case Move::Kind::insert:
        os << "insert " << m.index << ' '
           << format_letter(m.letter,
                            p,
                            p.is_last_level() ? WordStyle::b_index
                                              : WordStyle::subset);
        break;
      case Move::Kind::reverse_window:
        os << "reverse " << m.index;
        break;
      case Move::Kind::commute:
        os << "commute " << m.index;
        break;
    }
    return os.str();
  }

}  // namespace gnk
