// Bounded breadth-first search over the defining relations of G_n^k.
//
// The search graph has one vertex per word of length at most `max_len`; edges
// are the primitive moves (cancel or insert an adjacent equal pair, reverse a
// relation-(3') window, commute by relation (2)). Two words are equal in the
// group iff they are connected for some length bound, so a successful search
// is a proof of equality while a failed one proves nothing: it is reported as
// Unknown, never as "not equal".

#ifndef GNK_ORACLE_HPP_
#define GNK_ORACLE_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "gnk/word.hpp"

namespace gnk {

  struct OracleResult {
    enum class Status { equal, unknown };

    Status status = Status::unknown;
    // From the first word to the second; replayable with apply_move.
    std::vector<Move> trace;
    std::size_t       states = 0;

    bool equal() const noexcept {
      return status == Status::equal;
    }
  };

  // Bidirectional search between w1 and w2. Stops with Unknown once more than
  // `max_states` words have been visited or both words' components (within
  // `max_len`) are exhausted.
  OracleResult bfs_equal_oracle(Word const& w1,
                                Word const& w2,
                                std::size_t max_len,
                                std::size_t max_states);

  // The connected component of one word in the length-bounded search graph,
  // computed once and queried many times.
  class BoundedClosure {
   public:
    BoundedClosure(Word const& root, std::size_t max_len, std::size_t max_states);

    // False when exploration stopped at `max_states` before exhausting the
    // component.
    bool complete() const noexcept {
      return _complete;
    }
    std::size_t size() const noexcept {
      return _states.size();
    }
    std::size_t max_len() const noexcept {
      return _max_len;
    }

    bool contains(Word const& w) const;

    // Moves transforming the root into `target`, if `target` was reached.
    std::optional<std::vector<Move>> derivation(Word const& target) const;

   private:
    GroupParams                                  _params;
    std::size_t                                  _max_len;
    bool                                         _complete = false;
    std::vector<std::string>                     _states;
    std::vector<std::uint32_t>                   _parent;
    std::vector<Move>                            _move;
    std::unordered_map<std::string, std::uint32_t> _index;
    std::vector<Letter>                          _alphabet;
  };

}  // namespace gnk

#endif  // GNK_ORACLE_HPP_
