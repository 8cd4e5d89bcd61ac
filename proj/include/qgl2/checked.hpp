#pragma once

#include <cstdint>

#include "qgl2/errors.hpp"

namespace qgl2 {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every exponent and multiplicity in the
// library goes through these.

inline Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace qgl2
