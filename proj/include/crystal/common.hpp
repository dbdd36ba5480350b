#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

// All invariants live in checked 64-bit arithmetic: every add/mul that could
// wrap goes through add_ck/mul_ck below and throws instead of wrapping.
using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Common base so callers can catch every library failure in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRank : Error { using Error::Error; };
struct InvalidWeight : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct IterationLimitExceeded : Error { using Error::Error; };
struct SearchLimitExceeded : Error { using Error::Error; };
struct LevelMismatch : Error { using Error::Error; };
struct NotAMember : Error { using Error::Error; };
struct VertexNotFound : Error { using Error::Error; };
struct DegenerateSimplex : Error { using Error::Error; };
struct CapTooLow : Error { using Error::Error; };

// A postcondition the math guarantees failed at runtime; always a bug.
struct InternalCheckFailure : Error { using Error::Error; };

inline Int add_ck(Int x, Int y) {
    Int out;
    if (__builtin_add_overflow(x, y, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

inline Int sub_ck(Int x, Int y) {
    Int out;
    if (__builtin_sub_overflow(x, y, &out))
        throw OverflowError("integer overflow in subtraction");
    return out;
}

inline Int mul_ck(Int x, Int y) {
    Int out;
    if (__builtin_mul_overflow(x, y, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalCheckFailure(std::string("internal check failed: ") + what);
}

// "(1,0)" / "[-4,7]" style rendering used by reports and error messages.
std::string bracketed(const IntVec& v, char open, char close);

}  // namespace crystal
