#pragma once

#include <stdexcept>

namespace crystal {

// 64-bit integer arithmetic that throws std::overflow_error instead of
// wrapping. Coefficients ([n], P_{m,i}) grow exponentially in ab, so every
// arithmetic step on them goes through these.

inline long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline long long checked_neg(long long x) { return checked_sub(0, x); }

}  // namespace crystal
