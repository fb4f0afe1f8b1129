#ifndef GNK_ERROR_HPP_
#define GNK_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace gnk {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Invalid (n, k), or an operation that needs n = k + 1 (or k = 3) was
  // called with other parameters.
  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  // Malformed word text. `token()` is the 0-based index of the bad token.
  class ParseError : public Error {
   public:
    ParseError(std::size_t token, std::string const& msg)
        : Error("token " + std::to_string(token) + ": " + msg), token_(token) {}

    std::size_t token() const noexcept {
      return token_;
    }

   private:
    std::size_t token_;
  };

  // A relation was applied where it does not hold.
  class RelationError : public Error {
   public:
    using Error::Error;
  };

  // A precondition on the input word failed.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace gnk

#endif  // GNK_ERROR_HPP_
