#pragma once

#include <cstdint>
#include <string>

#include "ngsemi/error.hpp"

namespace ngsemi::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

// Least nonnegative residue, valid for negative a.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace ngsemi::checked
