// Computable invariants of words in G_{k+1}^k.
//
//  * The obstruction map f into F_k, the free product of copies of Z_2
//    indexed by index strings (bit strings of length k - 1). Each occurrence
//    of the last letter b_{k+1} contributes the generator named by the
//    parities of the letters b_1..b_k preceding it, with a string identified
//    with its complement.
//  * The parity vector: the abelianisation modulo 2.
//  * The sign action on strings s in {+1,-1}^{k-1} (base points of the
//    configuration space), whose stabiliser is the subgroup G~.

#ifndef GNK_INVARIANTS_HPP_
#define GNK_INVARIANTS_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t, int8_t
#include <string>   // for string
#include <vector>   // for vector

#include "gnk/word.hpp"

namespace gnk {

  struct IndexString {
    std::vector<std::uint8_t> bits;  // length k - 1, entries 0 or 1

    auto operator<=>(IndexString const&) const = default;
  };

  // Rendered as c(0,1).
  std::string to_string(IndexString const& x);

  struct ObstructionWord {
    std::vector<IndexString> letters;

    bool empty() const noexcept {
      return letters.empty();
    }
    bool operator==(ObstructionWord const&) const = default;
  };

  // Space separated, e.g. "c(0,0) c(1,0)"; the empty word renders as "".
  std::string to_string(ObstructionWord const& o);

  struct ParityVector {
    std::vector<std::uint8_t> bits;  // entry j - 1 is the parity of b_j

    bool is_zero() const noexcept;
    bool operator==(ParityVector const&) const = default;
  };

  std::string to_string(ParityVector const& v);

  struct SignString {
    std::vector<std::int8_t> signs;  // length k - 1, entries +1 or -1

    static SignString all_plus(int k);

    auto operator<=>(SignString const&) const = default;
  };

  // Rendered as (+,-).
  std::string to_string(SignString const& s);

  // Index of the occurrence of b_{k+1} at `pos`. Throws PreconditionError if
  // pos is out of range or w[pos] is not b_{k+1}.
  IndexString occurrence_index(Word const& w, std::size_t pos);

  // The obstruction letters of every occurrence of b_{k+1}, left to right,
  // without cancellation.
  ObstructionWord f_image_unreduced(Word const& w);

  // The reduced image f(w).
  ObstructionWord f_image(Word const& w);

  // Cancels adjacent equal letters (c_m^2 = 1) to a fixed point.
  ObstructionWord free_product_reduce(ObstructionWord const& o);

  ParityVector parity_vector(Word const& w);

  // The action of a single letter: with c the index omitted by the letter,
  // flip s_c when c <= k - 1 and flip every entry when c is k or k + 1.
  SignString sign_action(GroupParams const& p, Letter x, SignString s);

  // Letters act left to right.
  SignString sign_action(Word const& w, SignString s);

  bool in_tilde_subgroup(Word const& w);

  // The orbit of (+,...,+) under all words, in breadth-first discovery order.
  std::vector<SignString> sign_orbit(GroupParams const& p);

}  // namespace gnk

#endif  // GNK_INVARIANTS_HPP_
