#include "gnk/report.hpp"

namespace gnk {

  using nlohmann::json;

  std::string format_trace(EliminationTrace const& trace, GroupParams const& p) {
    std::string out;
    for (auto const& m : trace) {
      out += (out.empty() ? "" : "; ") + format_move(m, p);
    }
    return out;
  }

  namespace {

    struct WitnessText {
      GroupParams const& p;
      bool               show_trace;

      std::string operator()(EliminationTrace const& t) const {
        std::string s = "witness: trace of " + std::to_string(t.size()) + " moves";
        if (show_trace && !t.empty()) {
          s += "\ntrace: " + format_trace(t, p);
        }
        return s;
      }
      std::string operator()(ParityVector const& v) const {
        return "witness: parity " + to_string(v);
      }
      std::string operator()(ObstructionWord const& o) const {
        return "witness: obstruction " + to_string(o);
      }
      std::string operator()(Word const& w) const {
        return "witness: residue " + to_string(w);
      }
    };

    struct WitnessJson {
      GroupParams const& p;
      bool               show_trace;

      json operator()(EliminationTrace const& t) const {
        json j = {{"kind", "trace"}, {"moves", t.size()}};
        if (show_trace) {
          j["trace"] = trace_to_json(t, p);
        }
        return j;
      }
      json operator()(ParityVector const& v) const {
        return {{"kind", "parity"}, {"value", v.bits}};
      }
      json operator()(ObstructionWord const& o) const {
        json letters = json::array();
        for (auto const& x : o.letters) {
          letters.push_back(x.bits);
        }
        return {{"kind", "obstruction"}, {"value", to_string(o)}, {"letters", letters}};
      }
      json operator()(Word const& w) const {
        return {{"kind", "residue"}, {"value", to_string(w)}};
      }
    };

  }  // namespace

  std::string format_verdict(Verdict const& v, bool show_trace) {
    std::string out = to_string(v.status) + "\n";
    out += std::visit(WitnessText{v.input.params(), show_trace}, v.witness);
    out += "\n";
    for (auto const& a : v.assumptions) {
      out += "assuming: " + a + "\n";
    }
    return out;
  }

  json verdict_to_json(Verdict const& v, bool show_trace) {
    json j;
    j["status"]      = to_string(v.status);
    j["input"]       = to_string(v.input);
    j["witness"]     = std::visit(WitnessJson{v.input.params(), show_trace}, v.witness);
    j["assumptions"] = v.assumptions;
    return j;
  }

  json trace_to_json(EliminationTrace const& trace, GroupParams const& p) {
    json out = json::array();
    for (auto const& m : trace) {
      out.push_back(format_move(m, p));
    }
    return out;
  }

}  // namespace gnk
