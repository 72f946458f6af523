#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhgr {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// All coefficient and window arithmetic is 64-bit signed and checked:
// overflow throws instead of wrapping.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

// Division rounding toward -infinity (b > 0).
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, rem = a % b;
    return (rem != 0 && (rem < 0) != (b < 0)) ? q - 1 : q;
}

// Representative of a mod b in [0, b) (b > 0).
inline i64 pos_mod(i64 a, i64 b) {
    i64 r = a % b;
    return r < 0 ? r + b : r;
}

[[noreturn]] inline void fail(const std::string& msg) { throw std::invalid_argument(msg); }

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

}  // namespace qhgr
