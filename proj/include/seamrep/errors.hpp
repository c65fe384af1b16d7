#pragma once

#include <stdexcept>
#include <string>

namespace seamrep {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SEAMREP_ERROR(Name)                                         \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

SEAMREP_ERROR(DenominatorVanishes)
SEAMREP_ERROR(QNumberVanishes)
SEAMREP_ERROR(BackendMismatch)
SEAMREP_ERROR(NotDivisible)
SEAMREP_ERROR(ShapeMismatch)
SEAMREP_ERROR(IndexOutOfRange)
SEAMREP_ERROR(ParityMismatch)
SEAMREP_ERROR(ParseError)
SEAMREP_ERROR(ParameterConstraint)
SEAMREP_ERROR(NotInDelta)
SEAMREP_ERROR(CriticalD)
SEAMREP_ERROR(ConstructionFailed)
SEAMREP_ERROR(NotMirrorPair)
SEAMREP_ERROR(NoConsistentSigns)
SEAMREP_ERROR(AmbiguousSigns)
SEAMREP_ERROR(VerificationFailed)

#undef SEAMREP_ERROR

}  // namespace seamrep
