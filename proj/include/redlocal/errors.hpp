#pragma once

#include <stdexcept>
#include <string>

namespace redlocal {

// Base of every error thrown by the library. Inconclusive outcomes
// (bounds exhausted, no reduction found) are reported through return
// values, not exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define REDLOCAL_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string &what) : Error(what) {}                   \
  }

REDLOCAL_DEFINE_ERROR(InvalidInput);
REDLOCAL_DEFINE_ERROR(NonPrimeModulus);
REDLOCAL_DEFINE_ERROR(DivisionByZero);
REDLOCAL_DEFINE_ERROR(ContextMismatch);
REDLOCAL_DEFINE_ERROR(VarSetMismatch);
REDLOCAL_DEFINE_ERROR(LengthMismatch);
REDLOCAL_DEFINE_ERROR(ParseError);
REDLOCAL_DEFINE_ERROR(NotHomogeneous);
REDLOCAL_DEFINE_ERROR(NotPrimary);
REDLOCAL_DEFINE_ERROR(NotContained);
REDLOCAL_DEFINE_ERROR(ZeroIdeal);
REDLOCAL_DEFINE_ERROR(NotMonomial);
REDLOCAL_DEFINE_ERROR(ContainmentFailure);
REDLOCAL_DEFINE_ERROR(DimensionMismatch);
REDLOCAL_DEFINE_ERROR(FieldTooSmall);
REDLOCAL_DEFINE_ERROR(EscalateSamples);

#undef REDLOCAL_DEFINE_ERROR

} // namespace redlocal
