#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ngsemi {

enum class ErrorCode {
    EmptyGenerators,
    GcdNotOne,
    Overflow,
    NotInSemigroup,
    ZeroElement,
    LimitExceeded,
    IndexOutOfRange,
    AmbientMismatch,
    InvalidNGVector,
    NotPseudoFrobenius,
    MatrixMismatch,
    IsMinimalGenerator,
    NotCoprime,
    NotMinimal,
    EmbeddingDimensionTooSmall,
    ResourceLimit,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this exception; the code
// is what callers (and the CLI exit-code mapping) branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ngsemi
