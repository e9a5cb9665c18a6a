#pragma once

#include <stdexcept>
#include <string>

namespace flseq {

// Every failure the library can report, one code per contract violation.
enum class ErrorCode {
    NotPrime,
    ReduciblePolynomial,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    LogOfZero,
    FieldTooLarge,
    SingularMap,
    NotFound,
    OrderDoesNotDivide,
    PsiNotFullCycle,
    LengthMismatch,
    ZeroDenominator,
    OddM,
    NonPrimeModulus,
    SeedLengthMismatch,
    CompositeCharacterOrder,
    BadInput,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace flseq
