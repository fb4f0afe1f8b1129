// Words in the groups G_n^k.
//
// G_n^k is generated by involutions a_m, one for each k-element subset m of
// {1, ..., n}, subject to
//
//   (1)  a_m a_m = 1,
//   (2)  a_m a_m' = a_m' a_m            whenever |m & m'| < k - 1,
//   (3') a_m1 ... a_m(k+1) = a_m(k+1) ... a_m1
//                                       whenever m1, ..., m(k+1) are the k+1
//                                       k-subsets of one (k+1)-set, in any
//                                       order.
//
// When n = k + 1 the generators are also named b_1, ..., b_{k+1} in
// lexicographic order of their subsets, so b_1 = a_{1..k} and
// b_{k+1} = a_{2..k+1}. That naming is only a view: letters are always stored
// as subsets.

#ifndef GNK_WORD_HPP_
#define GNK_WORD_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

#include "gnk/error.hpp"

namespace gnk {

  struct GroupParams {
    int n;
    int k;

    // Throws ParameterError unless n > k >= 2 and n <= 31.
    GroupParams(int n, int k);

    // The parameters (k + 1, k).
    static GroupParams last_level(int k) {
      return GroupParams(k + 1, k);
    }

    bool is_last_level() const noexcept {
      return n == k + 1;
    }

    // Throws ParameterError naming `what` unless n = k + 1.
    void require_last_level(std::string_view what) const;

    // Number of generators, i.e. binomial(n, k).
    std::size_t num_letters() const;

    bool operator==(GroupParams const&) const = default;
  };

  class Letter {
   public:
    Letter() = default;

    // Elements may be given in any order; throws ParameterError unless they
    // form a k-subset of {1..n}.
    static Letter from_subset(GroupParams const& p, std::span<int const> elts);
    static Letter from_subset(GroupParams const& p,
                              std::initializer_list<int> elts) {
      return from_subset(p, std::span<int const>(elts.begin(), elts.size()));
    }

    // b_j, 1 <= j <= k + 1; requires n = k + 1.
    static Letter b(GroupParams const& p, int j);

    // Bit i - 1 is set iff i is in the subset.
    std::uint32_t mask() const noexcept {
      return _mask;
    }

    bool contains(int i) const noexcept {
      return (_mask >> (i - 1)) & 1u;
    }

    // Ascending.
    std::vector<int> elements() const;

    // The unique i in {1..k+1} not in the subset; requires n = k + 1.
    int omitted(GroupParams const& p) const;

    // j such that this letter is b_j; requires n = k + 1.
    int b_index(GroupParams const& p) const;

    bool operator==(Letter const&) const = default;

    // Lexicographic order of the sorted subsets.
    std::strong_ordering operator<=>(Letter const& that) const noexcept;

   private:
    explicit Letter(std::uint32_t mask) : _mask(mask) {}
    std::uint32_t _mask = 0;
  };

  // All generators in lexicographic order; for n = k + 1 entry j - 1 is b_j.
  std::vector<Letter> alphabet(GroupParams const& p);

  class Word {
   public:
    explicit Word(GroupParams const& p) : _params(p) {}
    Word(GroupParams const& p, std::vector<Letter> letters);

    // Convenience for n = k + 1: the word b_{j1} b_{j2} ...
    static Word from_b(GroupParams const& p, std::initializer_list<int> js);

    GroupParams const& params() const noexcept {
      return _params;
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    void push_back(Letter x) {
      _letters.push_back(x);
    }

    bool operator==(Word const&) const = default;

   private:
    GroupParams         _params;
    std::vector<Letter> _letters;
  };

  enum class WordStyle { subset, b_index };

  Word        parse_word(std::string_view text, GroupParams const& p);
  std::string format_word(Word const& w, WordStyle style = WordStyle::subset);
  std::string format_letter(Letter x,
                            GroupParams const& p,
                            WordStyle style = WordStyle::subset);

  // b-index style when n = k + 1, subset style otherwise.
  std::string to_string(Word const& w);

  Word concat(Word const& u, Word const& v);

  // Generators are involutions, so the inverse is the reversal.
  Word inverse(Word const& w);

  // Deletes adjacent equal letters until none are left.
  Word free_reduce(Word const& w);

  // True iff the k+1 letters are pairwise distinct and are the k-subsets of
  // one (k+1)-set.
  bool is_relation3_window(GroupParams const& p, std::span<Letter const> xs);

  // True iff |m & m'| < k - 1.
  bool commutes(GroupParams const& p, Letter x, Letter y);

  // Reverses the length-(k+1) window at `start`; throws RelationError unless
  // the window is a relation-(3') window.
  Word apply_relation3_at(Word const& w, std::size_t start);

  // Swaps the letters at i and i + 1; throws RelationError unless they
  // commute by relation (2). Never legal when n = k + 1.
  Word apply_relation2_at(Word const& w, std::size_t i);

  // One primitive rewriting step. Every step instantiates relation (1), (2)
  // or (3').
  struct Move {
    enum class Kind {
      cancel,          // delete w[index] w[index + 1] (equal letters)
      insert,          // insert `letter` `letter` before position `index`
      reverse_window,  // reverse w[index .. index + k]
      commute          // swap w[index] and w[index + 1]
    };

    Kind        kind;
    std::size_t index;
    Letter      letter{};  // insert only

    static Move cancel(std::size_t i) {
      return {Kind::cancel, i, {}};
    }
    static Move insert(std::size_t i, Letter x) {
      return {Kind::insert, i, x};
    }
    static Move reverse_window(std::size_t i) {
      return {Kind::reverse_window, i, {}};
    }
    static Move commute(std::size_t i) {
      return {Kind::commute, i, {}};
    }

    bool operator==(Move const&) const = default;
  };

  // In-place application; throws RelationError when the move is illegal.
  void apply_move(std::vector<Letter>& letters,
                  GroupParams const& p,
                  Move const& m);
  Word apply_move(Word const& w, Move const& m);

  // The move undoing `m` when applied to the word produced by `m` from `w`.
  Move invert_move(Word const& w, Move const& m);

  std::string format_move(Move const& m, GroupParams const& p);

}  // namespace gnk

#endif  // GNK_WORD_HPP_
