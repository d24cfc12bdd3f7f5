#ifndef FQSYM_ERROR_HPP
#define FQSYM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fqsym {

enum class ErrorCode {
  NotPrime,
  SizeExceeded,
  ZeroElement,
  DoesNotDivide,
  DivisionByZeroPoly,
  FieldMismatch,
  BothZero,
  ConstantPolynomial,
  ZeroPolynomial,
  NotIrreducible,
  NotMonic,
  NotCoprime,
  NotRootOfUnity,
  ZeroModulus,
  ZeroInput,
  CharacteristicDividesN,
  IndexMismatch,
  ZeroAtIndex,
  EmptyAtIndex,
  BothZeroAtIndex,
  UnknownProperty,
  ParseError,
  BadConfig,
};

const char* error_code_name(ErrorCode c);

// Single exception type; the code carries the contract violation so tests
// and the CLI can react without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace fqsym

#endif
