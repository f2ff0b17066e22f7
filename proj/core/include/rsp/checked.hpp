#pragma once

#include "rsp/errors.hpp"

namespace rsp {

// Overflow-checked integer arithmetic.  Works for the built-in integer
// types and for __int128.

template <typename T>
inline T checked_add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in addition");
    }
    return r;
}

template <typename T>
inline T checked_sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in subtraction");
    }
    return r;
}

template <typename T>
inline T checked_mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in multiplication");
    }
    return r;
}

}  // namespace rsp
