#include "gnk/invariants.hpp"

#include <algorithm>  // for find

namespace gnk {

  std::string to_string(IndexString const& x) {
    std::string out = "c(";
    for (std::size_t i = 0; i < x.bits.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += static_cast<char>('0' + x.bits[i]);
    }
    return out + ")";
  }

  std::string to_string(ObstructionWord const& o) {
    std::string out;
    for (std::size_t i = 0; i < o.letters.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += to_string(o.letters[i]);
    }
    return out;
  }

  bool ParityVector::is_zero() const noexcept {
    return std::find(bits.begin(), bits.end(), 1) == bits.end();
  }

  std::string to_string(ParityVector const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.bits.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += static_cast<char>('0' + v.bits[i]);
    }
    return out + ")";
  }

  SignString SignString::all_plus(int k) {
    return SignString{std::vector<std::int8_t>(static_cast<std::size_t>(k - 1), 1)};
  }

  std::string to_string(SignString const& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.signs.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += s.signs[i] > 0 ? '+' : '-';
    }
    return out + ")";
  }

  namespace {
    // Length-k vector of parities of b_1..b_k strictly before pos.
    std::vector<std::uint8_t> prefix_parities(Word const& w, std::size_t pos) {
      GroupParams const&        p = w.params();
      std::vector<std::uint8_t> x(static_cast<std::size_t>(p.k), 0);
      for (std::size_t i = 0; i < pos; ++i) {
        int j = w[i].b_index(p);
        if (j <= p.k) {
          x[j - 1] ^= 1;
        }
      }
      return x;
    }

    IndexString normalise(std::vector<std::uint8_t> x) {
      if (x.back() == 1) {
        for (auto& b : x) {
          b ^= 1;
        }
      }
      x.pop_back();
      return IndexString{std::move(x)};
    }
  }  // namespace

  IndexString occurrence_index(Word const& w, std::size_t pos) {
    GroupParams const& p = w.params();
    p.require_last_level("occurrence_index");
    if (pos >= w.size()) {
      throw PreconditionError("occurrence_index: position "
                              + std::to_string(pos) + " out of range");
    }
    if (w[pos].b_index(p) != p.k + 1) {
      throw PreconditionError("occurrence_index: letter at position "
                              + std::to_string(pos) + " is not b"
                              + std::to_string(p.k + 1));
    }
    return normalise(prefix_parities(w, pos));
  }

  ObstructionWord f_image_unreduced(Word const& w) {
    GroupParams const& p = w.params();
    p.require_last_level("f_image");
    ObstructionWord           out;
    std::vector<std::uint8_t> x(static_cast<std::size_t>(p.k), 0);
    for (Letter letter : w) {
      int j = letter.b_index(p);
      if (j <= p.k) {
        x[j - 1] ^= 1;
      } else {
        out.letters.push_back(normalise(x));
      }
    }
    return out;
  }

  ObstructionWord f_image(Word const& w) {
    return free_product_reduce(f_image_unreduced(w));
  }

  ObstructionWord free_product_reduce(ObstructionWord const& o) {
    ObstructionWord out;
    for (auto const& c : o.letters) {
      if (!out.letters.empty() && out.letters.back() == c) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(c);
      }
    }
    return out;
  }

  ParityVector parity_vector(Word const& w) {
    GroupParams const& p = w.params();
    p.require_last_level("parity_vector");
    ParityVector v{std::vector<std::uint8_t>(static_cast<std::size_t>(p.k + 1), 0)};
    for (Letter x : w) {
      v.bits[x.b_index(p) - 1] ^= 1;
    }
    return v;
  }

  SignString sign_action(GroupParams const& p, Letter x, SignString s) {
    int const c = x.omitted(p);
    if (c <= p.k - 1) {
      s.signs[c - 1] = static_cast<std::int8_t>(-s.signs[c - 1]);
    } else {
      for (auto& v : s.signs) {
        v = static_cast<std::int8_t>(-v);
      }
    }
    return s;
  }

  SignString sign_action(Word const& w, SignString s) {
    GroupParams const& p = w.params();
    p.require_last_level("sign_action");
    if (s.signs.size() != static_cast<std::size_t>(p.k - 1)) {
      throw PreconditionError("sign string must have length k - 1");
    }
    for (Letter x : w) {
      s = sign_action(p, x, std::move(s));
    }
    return s;
  }

  bool in_tilde_subgroup(Word const& w) {
    auto s = SignString::all_plus(w.params().k);
    return sign_action(w, s) == s;
  }

  std::vector<SignString> sign_orbit(GroupParams const& p) {
    p.require_last_level("sign_orbit");
    std::vector<SignString> orbit{SignString::all_plus(p.k)};
    auto const              letters = alphabet(p);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Letter x : letters) {
        SignString t = sign_action(p, x, orbit[i]);
        if (std::find(orbit.begin(), orbit.end(), t) == orbit.end()) {
          orbit.push_back(std::move(t));
        }
      }
    }
    return orbit;
  }

}  // namespace gnk
