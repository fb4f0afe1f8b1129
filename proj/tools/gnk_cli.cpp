// gnk: command line front end for the word problem solver and the path
// realization of G_{k+1}^k.
//
// Exit codes: solve / equal / oracle give 0 for Trivial (Equal), 1 for
// NonTrivial, 2 for Unknown; in-h, in-tilde and selftest give 0 for yes and 1
// for no. 3 is a usage or parse error, 4 any other failure.

#include <cstdint>   // for uint64_t
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string

#include "CLI11.hpp"
#include "json.hpp"

#include "gnk/invariants.hpp"
#include "gnk/oracle.hpp"
#include "gnk/path_io.hpp"
#include "gnk/realization.hpp"
#include "gnk/report.hpp"
#include "gnk/selftest.hpp"
#include "gnk/solver.hpp"

namespace {

  using nlohmann::json;
  using namespace gnk;

  enum Exit : int {
    kYes     = 0,
    kNo      = 1,
    kUnknown = 2,
    kUsage   = 3,
    kFailure = 4
  };

  struct Config {
    int           k = 3;
    int           n = 0;  // 0 means k + 1
    std::string   format = "text";
    std::uint64_t seed   = 1;
    std::size_t   max_len    = 14;
    std::size_t   max_states = 1000000;

    GroupParams params() const {
      return GroupParams(n == 0 ? k + 1 : n, k);
    }
    bool json() const {
      return format == "json";
    }
  };

  void emit(Config const& cfg, json const& j, std::string const& text) {
    if (cfg.json()) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  int status_exit(Status s) {
    switch (s) {
      case Status::trivial:
        return kYes;
      case Status::nontrivial:
        return kNo;
      default:
        return kUnknown;
    }
  }

  SignString parse_signs(std::string const& text, int k) {
    SignString s;
    for (char c : text) {
      if (c == '+') {
        s.signs.push_back(1);
      } else if (c == '-') {
        s.signs.push_back(-1);
      } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
        throw ParameterError("bad sign string \"" + text + "\"");
      }
    }
    if (s.signs.size() != static_cast<std::size_t>(k - 1)) {
      throw ParameterError("sign string must have k - 1 = " + std::to_string(k - 1)
                           + " entries");
    }
    return s;
  }

  std::string events_text(std::vector<SingularEvent> const& events,
                          GroupParams const&                p) {
    std::string out;
    for (auto const& e : events) {
      out += "  segment " + std::to_string(e.segment) + " t=" + to_string(e.t) + " "
             + format_letter(e.subset, p, p.is_last_level() ? WordStyle::b_index : WordStyle::subset) + "\n";
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Commands
  //////////////////////////////////////////////////////////////////////////

  int cmd_solve(Config const& cfg, std::string const& text, bool trace) {
    GroupParams const p = cfg.params();
    Word const        w = parse_word(text, p);
    Verdict const     v = p.k == 3 ? solve_k3(w) : solve_semi(w);
    emit(cfg, verdict_to_json(v, trace), format_verdict(v, trace));
    return status_exit(v.status);
  }

  int cmd_equal(Config const& cfg, std::string const& t1, std::string const& t2) {
    GroupParams const p  = cfg.params();
    Word const        w1 = parse_word(t1, p);
    Word const        w2 = parse_word(t2, p);
    Verdict const     v  = p.k == 3 ? equal_k3(w1, w2)
                                    : solve_semi(free_reduce(concat(w1, inverse(w2))));
    emit(cfg, verdict_to_json(v), format_verdict(v));
    return status_exit(v.status);
  }

  int cmd_f_image(Config const& cfg, std::string const& text) {
    GroupParams const     p = cfg.params();
    ObstructionWord const o = f_image(parse_word(text, p));
    emit(cfg, {{"f_image", to_string(o)}, {"length", o.letters.size()}},
         to_string(o) + "\n");
    return kYes;
  }

  int cmd_parity(Config const& cfg, std::string const& text) {
    ParityVector const v = parity_vector(parse_word(text, cfg.params()));
    emit(cfg, {{"parity", v.bits}}, to_string(v) + "\n");
    return kYes;
  }

  int cmd_sign_action(Config const& cfg,
                      std::string const& text,
                      std::string const& from) {
    GroupParams const p = cfg.params();
    Word const        w = parse_word(text, p);
    SignString const  s = from.empty() ? SignString::all_plus(p.k) : parse_signs(from, p.k);
    SignString const  t = sign_action(w, s);
    emit(cfg, {{"from", to_string(s)}, {"to", to_string(t)}},
         to_string(s) + " -> " + to_string(t) + "\n");
    return kYes;
  }

  int cmd_eliminate(Config const& cfg, std::string const& text, bool seeded) {
    GroupParams const  p = cfg.params();
    Word const         w = parse_word(text, p);
    EliminationOptions opts;
    if (seeded) {
      opts.seed = cfg.seed;
    }
    Elimination const e  = eliminate_last(w, opts);
    bool const        ok = check_trace(w, e.trace, e.word);
    emit(cfg,
         {{"word", to_string(e.word)},
          {"trace", trace_to_json(e.trace, p)},
          {"trace_ok", ok}},
         to_string(e.word) + "\n" + format_trace(e.trace, p) + "\n"
             + (ok ? "trace-ok" : "trace-FAILED") + "\n");
    return ok ? kYes : kFailure;
  }

  int cmd_in_h(Config const& cfg, std::string const& text) {
    GroupParams const p = cfg.params();
    HMembership const m = is_in_H(parse_word(text, p));
    if (m.member) {
      emit(cfg, {{"member", true}, {"representative", to_string(m.representative)}},
           "yes\nrepresentative: " + to_string(m.representative) + "\n");
      return kYes;
    }
    emit(cfg, {{"member", false}, {"obstruction", to_string(m.obstruction)}},
         "no\nobstruction: " + to_string(m.obstruction) + "\n");
    return kNo;
  }

  int cmd_in_tilde(Config const& cfg, std::string const& text) {
    GroupParams const p   = cfg.params();
    Word const        w   = parse_word(text, p);
    bool const        yes = in_tilde_subgroup(w);
    SignString const  end = sign_action(w, SignString::all_plus(p.k));
    emit(cfg, {{"member", yes}, {"endpoint", to_string(end)}},
         std::string(yes ? "yes" : "no") + "\nendpoint: " + to_string(end) + "\n");
    return yes ? kYes : kNo;
  }

  int cmd_orbit(Config const& cfg) {
    auto const  orbit = sign_orbit(cfg.params());
    json        j     = json::array();
    std::string text;
    for (auto const& s : orbit) {
      j.push_back(to_string(s));
      text += to_string(s) + "\n";
    }
    emit(cfg, {{"orbit", j}, {"size", orbit.size()}}, text);
    return kYes;
  }

  int cmd_oracle(Config const& cfg, std::string const& t1, std::string const& t2) {
    GroupParams const  p = cfg.params();
    OracleResult const r = bfs_equal_oracle(parse_word(t1, p), parse_word(t2, p),
                                            cfg.max_len, cfg.max_states);
    std::string const status = r.equal() ? "Equal" : "Unknown";
    emit(cfg,
         {{"status", status},
          {"states", r.states},
          {"trace", trace_to_json(r.trace, p)}},
         status + "\nstates: " + std::to_string(r.states) + "\n"
             + (r.equal() ? "trace: " + format_trace(r.trace, p) + "\n" : ""));
    return r.equal() ? kYes : kUnknown;
  }

  int cmd_realize(Config const& cfg, std::string const& text, std::string const& out) {
    GroupParams const p    = cfg.params();
    Word const        w    = parse_word(text, p);
    PLPath            path = path_from_word(w);
    SignString const  end  = sign_string_of(path.back());
    write_path_file(out, {std::move(path), SignString::all_plus(p.k)});
    emit(cfg, {{"file", out}, {"endpoint", to_string(end)}},
         "wrote " + out + "\nendpoint: " + to_string(end) + "\n");
    return kYes;
  }

  int cmd_certify(Config const& cfg, std::string const& file) {
    PathFile const f      = read_path_file(file);
    auto const     events = detect_events(f.path);
    Word           w(f.path.params());
    for (auto const& e : events) {
      w.push_back(e.subset);
    }
    emit(cfg,
         {{"word", to_string(w)}, {"events", events_to_json(events, f.path.params())}},
         "word: " + to_string(w) + "\nevents: " + std::to_string(events.size()) + "\n"
             + events_text(events, f.path.params()));
    return kYes;
  }

  int cmd_selftest(Config const& cfg, std::string const& scale) {
    SelftestOptions opts;
    opts.quick = scale == "quick";
    opts.seed  = cfg.seed;
    bool        all = true;
    json        j   = json::array();
    std::string text;
    for (int id = 1; id <= kNumCriteria; ++id) {
      CriterionResult const r = run_criterion(id, opts);
      all                     = all && r.passed;
      j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      text += format_result(r) + "\n";
    }
    emit(cfg, {{"scale", scale}, {"seed", cfg.seed}, {"results", j}, {"passed", all}},
         text);
    return all ? kYes : kNo;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem and path realization for the groups G_n^k"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--k", cfg.k, "subset size k")->capture_default_str();
  app.add_option("--n", cfg.n, "number of points n (default k + 1)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "oracle word length bound")
      ->capture_default_str();
  app.add_option("--max-states", cfg.max_states, "oracle state bound")
      ->capture_default_str();

  std::string w1, w2, file, from, scale = "quick";
  bool        trace = false;

  auto* solve = app.add_subcommand("solve", "decide whether a word is trivial");
  solve->add_option("word", w1)->required();
  solve->add_flag("--trace", trace, "print the elimination trace");

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  equal->add_option("w1", w1)->required();
  equal->add_option("w2", w2)->required();

  auto* fimg = app.add_subcommand("f-image", "reduced obstruction word");
  fimg->add_option("word", w1)->required();

  auto* parity = app.add_subcommand("parity", "letter count parities");
  parity->add_option("word", w1)->required();

  auto* sign = app.add_subcommand("sign-action", "action on base point signs");
  sign->add_option("word", w1)->required();
  sign->add_option("--from", from, "starting sign string, e.g. \"+-\"");

  bool seeded = false;
  auto* elim  = app.add_subcommand("eliminate", "remove the last letter");
  elim->add_option("word", w1)->required();
  elim->add_flag("--random", seeded, "random pair choice, driven by --seed");

  auto* inh = app.add_subcommand("in-h", "membership in the subgroup H_k");
  inh->add_option("word", w1)->required();

  auto* intilde = app.add_subcommand("in-tilde", "membership in the sign kernel");
  intilde->add_option("word", w1)->required();

  auto* realize = app.add_subcommand("realize", "write a path realizing a word");
  realize->add_option("word", w1)->required();
  realize->add_option("out", file)->required();

  auto* certify = app.add_subcommand("certify", "read a path and list its events");
  certify->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* orbit = app.add_subcommand("orbit", "orbit of (+,...,+) under the sign action");

  auto* oracle = app.add_subcommand("oracle", "bounded search for equality");
  oracle->add_option("w1", w1)->required();
  oracle->add_option("w2", w2)->required();

  auto* selftest = app.add_subcommand("selftest", "run the end-to-end checks");
  selftest->add_option("scale", scale)
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*solve) {
      return cmd_solve(cfg, w1, trace);
    }
    if (*equal) {
      return cmd_equal(cfg, w1, w2);
    }
    if (*fimg) {
      return cmd_f_image(cfg, w1);
    }
    if (*parity) {
      return cmd_parity(cfg, w1);
    }
    if (*sign) {
      return cmd_sign_action(cfg, w1, from);
    }
    if (*elim) {
      return cmd_eliminate(cfg, w1, seeded);
    }
    if (*inh) {
      return cmd_in_h(cfg, w1);
    }
    if (*intilde) {
      return cmd_in_tilde(cfg, w1);
    }
    if (*realize) {
      return cmd_realize(cfg, w1, file);
    }
    if (*certify) {
      return cmd_certify(cfg, file);
    }
    if (*orbit) {
      return cmd_orbit(cfg);
    }
    if (*oracle) {
      return cmd_oracle(cfg, w1, w2);
    }
    if (*selftest) {
      return cmd_selftest(cfg, scale);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (ParameterError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (NotInH const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNo;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
