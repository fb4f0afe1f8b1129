// JSON path files and event reports.
//
// A path file looks like
//
//   {"k": 3, "n": 4,
//    "keyframes": [[["1","0","0"], ["0","1","0"], ...], ...],
//    "base_sign": [1, -1]}
//
// with coordinates as "p/q" strings or integers; base_sign is optional.
// Writing always uses strings, so reading and writing again is bit-exact.

#ifndef GNK_PATH_IO_HPP_
#define GNK_PATH_IO_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "json.hpp"

#include "gnk/invariants.hpp"
#include "gnk/realization.hpp"

namespace gnk {

  struct PathFile {
    PLPath                    path;
    std::optional<SignString> base_sign;
  };

  // Throws Error on malformed documents and GeometryError on invalid
  // configurations.
  PathFile       path_from_json(nlohmann::json const& doc);
  nlohmann::json path_to_json(PathFile const& f);

  PathFile    read_path_file(std::string const& filename);
  void        write_path_file(std::string const& filename, PathFile const& f);
  std::string dump_path(PathFile const& f);

  nlohmann::json events_to_json(std::vector<SingularEvent> const& events,
                                GroupParams const&                p);

}  // namespace gnk

#endif  // GNK_PATH_IO_HPP_
