#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polysum {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value exceeds 64 bits");
    return static_cast<i64>(v);
}

// floor(sqrt(n)) for n >= 0, exact.
inline u64 isqrt(u64 n) {
    if (n < 2) return n;
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n, i64* root = nullptr) {
    if (n < 0) return false;
    u64 r = isqrt(static_cast<u64>(n));
    if (static_cast<i64>(r * r) != n) return false;
    if (root) *root = static_cast<i64>(r);
    return true;
}

inline i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 lcm64(i64 a, i64 b) { return checked_mul(a / std::gcd(a, b), b); }

}  // namespace polysum
