#ifndef GNK_RATIONAL_HPP_
#define GNK_RATIONAL_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include <gmpxx.h>  // for mpq_class

namespace gnk {

  using Rational = mpq_class;

  // Accepts "p" or "p/q" with an optional leading '-', q > 0; the result is
  // canonical. Throws Error on anything else.
  Rational parse_rational(std::string_view s);

  // "p" for integers, "p/q" otherwise, in lowest terms.
  std::string format_rational(Rational const& x);

  inline int sign(Rational const& x) {
    return sgn(x);
  }

}  // namespace gnk

#endif  // GNK_RATIONAL_HPP_
