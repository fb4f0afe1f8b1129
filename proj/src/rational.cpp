#include "gnk/rational.hpp"

#include <cctype>  // for isdigit

#include "gnk/error.hpp"

namespace gnk {

  namespace {
    bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Rational parse_rational(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && body[0] == '-') {
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    bool ok    = slash == std::string_view::npos
                  ? all_digits(body)
                  : all_digits(body.substr(0, slash))
                        && all_digits(body.substr(slash + 1));
    if (!ok) {
      throw Error("malformed rational '" + std::string(s) + "'");
    }
    Rational x;
    x.set_str(std::string(s), 10);
    if (x.get_den() == 0) {
      throw Error("zero denominator in '" + std::string(s) + "'");
    }
    x.canonicalize();
    return x;
  }

  std::string format_rational(Rational const& x) {
    return x.get_str(10);
  }

}  // namespace gnk
