#pragma once

#include <stdexcept>
#include <string>

namespace invcoef {

// Base for every error raised by the library. Each subclass names the
// violated precondition so callers can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INVCOEF_DEFINE_ERROR(Name)                     \
  class Name : public Error {                          \
   public:                                             \
    explicit Name(const std::string& what_arg)         \
        : Error(std::string(#Name ": ") + what_arg) {} \
  }

INVCOEF_DEFINE_ERROR(ZeroConstantTerm);
INVCOEF_DEFINE_ERROR(NonzeroInnerConstant);
INVCOEF_DEFINE_ERROR(DomainError);
INVCOEF_DEFINE_ERROR(NotNormalized);
INVCOEF_DEFINE_ERROR(ZeroIndex);
INVCOEF_DEFINE_ERROR(OrderError);
INVCOEF_DEFINE_ERROR(InvalidSpec);
INVCOEF_DEFINE_ERROR(NonSchwarz);
INVCOEF_DEFINE_ERROR(ParameterOutOfRange);
INVCOEF_DEFINE_ERROR(RegimeError);
INVCOEF_DEFINE_ERROR(ConditionNotMet);
INVCOEF_DEFINE_ERROR(RouteMismatch);
INVCOEF_DEFINE_ERROR(ParseError);
INVCOEF_DEFINE_ERROR(ConfigError);

#undef INVCOEF_DEFINE_ERROR

}  // namespace invcoef
