#ifndef LGB_ERRORS_HPP
#define LGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lgb {

enum class ErrorCode {
    ParseError,
    UnknownVariable,
    BadExponent,
    VariableMismatch,
    FieldMismatch,
    ZeroDivisor,
    ReducibleModulus,
    NotQuasihomogeneous,
    NonUniqueWeights,
    WeightOutOfRange,
    NotAdmissible,
    InfiniteDimensional,
    InfiniteGroup,
    NotASymmetry,
    NotInSL,
    DegenerateSector,
    GammaNotDivisible,
    HessianZero,
    NotWellBehaved,
    PreconditionFailed,
    SectorImageMismatch,
    BasisMismatch,
    NotBinomialSolvable,
    SearchInconclusive,
    WeightMismatch,
    BadInput,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lgb

#endif
