#ifndef LIEEXP_ERRORS_HPP
#define LIEEXP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieexp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureViolation : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct MissingDerivationSlot : Error { using Error::Error; };
struct DomainUnderflow : Error { using Error::Error; };
struct EmptyElement : Error { using Error::Error; };
struct CapTooLarge : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct TacticFailed : Error { using Error::Error; };
struct TraceInvalid : Error { using Error::Error; };
struct OutOfWindow : Error { using Error::Error; };

struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), column(col_) {}
};

} // namespace lieexp

#endif
