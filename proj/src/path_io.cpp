#include "gnk/path_io.hpp"

#include <fstream>  // for ifstream, ofstream

namespace gnk {

  using nlohmann::json;

  namespace {

    Rational read_coordinate(json const& v) {
      if (v.is_number_integer()) {
        return Rational(v.get<long>());
      }
      if (v.is_string()) {
        return parse_rational(v.get<std::string>());
      }
      throw Error("path file: coordinate must be an integer or a \"p/q\" string");
    }

    json const& field(json const& doc, char const* name) {
      auto it = doc.find(name);
      if (it == doc.end()) {
        throw Error(std::string("path file: missing field \"") + name + "\"");
      }
      return *it;
    }

  }  // namespace

  PathFile path_from_json(json const& doc) {
    if (!doc.is_object()) {
      throw Error("path file: top level must be an object");
    }
    json const& jk = field(doc, "k");
    json const& jn = field(doc, "n");
    if (!jk.is_number_integer() || !jn.is_number_integer()) {
      throw Error("path file: k and n must be integers");
    }
    GroupParams const p(jn.get<int>(), jk.get<int>());

    json const& frames = field(doc, "keyframes");
    if (!frames.is_array()) {
      throw Error("path file: keyframes must be an array");
    }
    std::vector<Configuration> keyframes;
    for (json const& frame : frames) {
      if (!frame.is_array()) {
        throw Error("path file: a keyframe must be an array of points");
      }
      std::vector<HVector> pts;
      for (json const& pt : frame) {
        if (!pt.is_array()) {
          throw Error("path file: a point must be an array of coordinates");
        }
        HVector v;
        for (json const& x : pt) {
          v.push_back(read_coordinate(x));
        }
        pts.push_back(std::move(v));
      }
      keyframes.emplace_back(p, std::move(pts));
    }

    std::optional<SignString> base;
    if (auto it = doc.find("base_sign"); it != doc.end()) {
      if (!it->is_array()) {
        throw Error("path file: base_sign must be an array");
      }
      SignString s;
      for (json const& x : *it) {
        if (!x.is_number_integer() || (x.get<int>() != 1 && x.get<int>() != -1)) {
          throw Error("path file: base_sign entries must be 1 or -1");
        }
        s.signs.push_back(static_cast<std::int8_t>(x.get<int>()));
      }
      if (s.signs.size() != static_cast<std::size_t>(p.k - 1)) {
        throw Error("path file: base_sign must have k - 1 entries");
      }
      base = std::move(s);
    }
    return {PLPath(p, std::move(keyframes)), std::move(base)};
  }

  json path_to_json(PathFile const& f) {
    json frames = json::array();
    for (auto const& c : f.path.keyframes()) {
      json frame = json::array();
      for (auto const& v : c.points) {
        json pt = json::array();
        for (auto const& x : v) {
          pt.push_back(format_rational(x));
        }
        frame.push_back(std::move(pt));
      }
      frames.push_back(std::move(frame));
    }
    json doc;
    doc["k"]         = f.path.params().k;
    doc["n"]         = f.path.params().n;
    doc["keyframes"] = std::move(frames);
    if (f.base_sign) {
      json s = json::array();
      for (auto x : f.base_sign->signs) {
        s.push_back(static_cast<int>(x));
      }
      doc["base_sign"] = std::move(s);
    }
    return doc;
  }

  std::string dump_path(PathFile const& f) {
    return path_to_json(f).dump();
  }

  PathFile read_path_file(std::string const& filename) {
    std::ifstream in(filename);
    if (!in) {
      throw Error("cannot open " + filename);
    }
    json doc;
    try {
      doc = json::parse(in);
    } catch (json::parse_error const& e) {
      throw Error(filename + ": " + e.what());
    }
    return path_from_json(doc);
  }

  void write_path_file(std::string const& filename, PathFile const& f) {
    std::ofstream out(filename);
    if (!out) {
      throw Error("cannot write " + filename);
    }
    out << dump_path(f) << '\n';
  }

  json events_to_json(std::vector<SingularEvent> const& events,
                      GroupParams const&                p) {
    json out = json::array();
    for (auto const& e : events) {
      json t;
      if (e.t.exact()) {
        t = format_rational(e.t.lo);
      } else {
        t = {{"lo", format_rational(e.t.lo)}, {"hi", format_rational(e.t.hi)}};
      }
      out.push_back({{"segment", e.segment},
                     {"t", std::move(t)},
                     {"subset", e.subset.elements()},
                     {"letter", format_letter(e.subset, p, p.is_last_level() ? WordStyle::b_index : WordStyle::subset)}});
    }
    return out;
  }

}  // namespace gnk
