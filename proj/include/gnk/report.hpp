// Text and JSON renderings of solver verdicts, shared by the command line
// tool and the tests.

#ifndef GNK_REPORT_HPP_
#define GNK_REPORT_HPP_

#include <string>  // for string

#include "json.hpp"

#include "gnk/solver.hpp"

namespace gnk {

  std::string format_trace(EliminationTrace const& trace, GroupParams const& p);

  // One line with the status, then one line describing the witness, then any
  // assumptions. With show_trace, a Trivial verdict also lists its moves.
  std::string format_verdict(Verdict const& v, bool show_trace = false);

  nlohmann::json verdict_to_json(Verdict const& v, bool show_trace = false);

  nlohmann::json trace_to_json(EliminationTrace const& trace,
                               GroupParams const&      p);

}  // namespace gnk

#endif  // GNK_REPORT_HPP_
