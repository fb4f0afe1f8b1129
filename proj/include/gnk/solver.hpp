// The word problem in G_{k+1}^k.
//
// A word w whose obstruction f(w) is trivial can be rewritten, using only
// relations (1) and (3'), into a word with no occurrence of the last letter
// b_{k+1}, i.e. into the subgroup H_k generated by b_1..b_k. Every rewrite
// emitted here is recorded as a primitive Move so that the result can be
// replayed and checked independently by check_trace.
//
// For k = 3 the subgroup H_3 is taken to be the free product of three copies
// of Z_2 (an unpublished result of A. B. Karpov), which makes the procedure
// a decision procedure. Verdicts relying on this carry kH3Freeness in their
// assumption flags.

#ifndef GNK_SOLVER_HPP_
#define GNK_SOLVER_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <variant>   // for variant
#include <vector>    // for vector

#include "gnk/invariants.hpp"
#include "gnk/word.hpp"

namespace gnk {

  using EliminationTrace = std::vector<Move>;

  inline constexpr char const* kH3Freeness
      = "H3-freeness (Karpov, unpublished)";

  struct Elimination {
    Word             word;
    EliminationTrace trace;
    // inner_eliminate: the gap between the two b_{k+1} after each free
    // reduction; eliminate_last: the number of b_{k+1} after each outer step,
    // starting with the input count.
    std::vector<std::size_t> progress;
  };

  // Thrown by eliminate_last when f(w) is nontrivial, i.e. w is not in H_k.
  class NotInH : public PreconditionError {
   public:
    explicit NotInH(ObstructionWord o)
        : PreconditionError("word is not in H_k: obstruction " + to_string(o)),
          _obstruction(std::move(o)) {}

    ObstructionWord const& obstruction() const noexcept {
      return _obstruction;
    }

   private:
    ObstructionWord _obstruction;
  };

  // Rewrites b_{k+1} B b_{k+1} into a word without b_{k+1}. The trace starts
  // from b_{k+1} B b_{k+1}. Requires that B has no b_{k+1} and that b_1..b_k
  // occur in B with a common parity.
  Elimination inner_eliminate(Word const& B);

  struct EliminationOptions {
    // When set, the pair of b_{k+1} occurrences eliminated at each outer step
    // is drawn at random from all admissible pairs; otherwise the leftmost.
    std::optional<std::uint64_t> seed;
  };

  // Rewrites w into an equal word without b_{k+1}; the trace starts from w.
  // Throws NotInH if f(w) is nontrivial.
  Elimination eliminate_last(Word const& w, EliminationOptions const& opts = {});

  struct HMembership {
    bool             member;
    Word             representative;  // b_{k+1}-free, when member
    ObstructionWord  obstruction;     // nonempty, when not member
    EliminationTrace trace;           // from w to representative
  };

  HMembership is_in_H(Word const& w);

  enum class Status { trivial, nontrivial, unknown };

  std::string to_string(Status s);

  struct Verdict {
    // EliminationTrace: a derivation of the empty word (trivial);
    // ParityVector or ObstructionWord: a nonzero invariant (nontrivial);
    // Word: the reduced b_{k+1}-free residue (nontrivial for k = 3 under
    // kH3Freeness, unknown otherwise).
    using Witness = std::variant<EliminationTrace, ParityVector, ObstructionWord, Word>;

    Status                status;
    Word                  input;
    Witness               witness;
    std::set<std::string> assumptions;
  };

  // Decides whether w = 1 in G_4^3.
  Verdict solve_k3(Word const& w);

  // Decides w1 = w2 in G_4^3 via the triviality of free_reduce(w1 w2^-1).
  Verdict equal_k3(Word const& w1, Word const& w2);

  // For any k >= 3: trivial or nontrivial when the invariants or the
  // elimination settle it, unknown otherwise.
  Verdict solve_semi(Word const& w);

  // Thrown by check_trace at the first illegal step.
  class IllegalMove : public Error {
   public:
    IllegalMove(std::size_t step, std::string const& why)
        : Error("illegal move at step " + std::to_string(step) + ": " + why),
          _step(step) {}

    std::size_t step() const noexcept {
      return _step;
    }

   private:
    std::size_t _step;
  };

  // Replays the trace from `input`; true iff it ends at `output`.
  bool check_trace(Word const&             input,
                   EliminationTrace const& trace,
                   Word const&             output);

}  // namespace gnk

#endif  // GNK_SOLVER_HPP_
