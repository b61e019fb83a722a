#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircase {

/// Thrown when an operation needs a finite staircase but some variable has
/// no pure-power generator.
struct NotArtinianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by the ideal text parser.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a computation would exceed a hard resource cap
/// (staircase cells, matrix size, census colength).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on integer overflow in exact arithmetic.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an identity that must hold by construction fails;
/// indicates a bug, never bad input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantViolation(msg);
}

// Staircase bitmaps refuse to materialize more lattice cells than this.
inline constexpr long long kStaircaseCellCap = 100'000'000;

// Dense finite-field matrices refuse to allocate more entries than this.
inline constexpr long long kMatrixEntryCap = 100'000'000;

inline long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiply");
    return out;
}

inline long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in add");
    return out;
}

/// Binomial coefficient in exact 64-bit arithmetic; throws OverflowError
/// rather than wrapping.
inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

}  // namespace staircase
