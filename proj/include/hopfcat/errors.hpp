// Exception types shared by all hopfcat modules.

#ifndef HOPFCAT_ERRORS_HPP_
#define HOPFCAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HOPFCAT_DEFINE_ERROR(Name)                       \
  struct Name : Error {                                  \
    explicit Name(const std::string& msg)                \
      : Error(std::string(#Name ": ") + msg) {}          \
  }

HOPFCAT_DEFINE_ERROR(DivisionByZero);
HOPFCAT_DEFINE_ERROR(NotAGroup);
HOPFCAT_DEFINE_ERROR(UnknownName);
HOPFCAT_DEFINE_ERROR(BoundExceeded);
HOPFCAT_DEFINE_ERROR(NoIntegral);
HOPFCAT_DEFINE_ERROR(NotFactorizable);
HOPFCAT_DEFINE_ERROR(InvariantViolation);
HOPFCAT_DEFINE_ERROR(PreconditionViolated);
HOPFCAT_DEFINE_ERROR(InconsistentCharacters);
HOPFCAT_DEFINE_ERROR(InternalMismatch);
HOPFCAT_DEFINE_ERROR(NonIntegerMultiplicity);
HOPFCAT_DEFINE_ERROR(NotClosed);
HOPFCAT_DEFINE_ERROR(OracleMismatch);
HOPFCAT_DEFINE_ERROR(MethodPreconditionViolated);
HOPFCAT_DEFINE_ERROR(NotMonomial);

#undef HOPFCAT_DEFINE_ERROR

// Grammar violation in a group spec or triple; offset is a character index
// into the parsed text.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
    : Error("ParseError at offset " + std::to_string(off) + ": " + msg),
      offset(off) {}
};

} // namespace hopfcat

#endif
