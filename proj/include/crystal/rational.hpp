#pragma once

#include <numeric>

#include "crystal/common.hpp"

namespace crystal {

// Exact rational over checked 64-bit ints. Only needs to carry the corner
// coordinates of (e-1)-dimensional simplices with e <= 6, so no effort is
// spent on wide intermediate products; everything overflows loudly.
// Normalised form: den > 0, gcd(num, den) = 1.
struct Rat {
    Int num = 0;
    Int den = 1;

    Rat() = default;
    Rat(Int n) : num(n) {}
    Rat(Int n, Int d) : num(n), den(d) { normalise(); }

    void normalise() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rat&) const = default;
};

inline Rat operator+(const Rat& a, const Rat& b) {
    return Rat(add_ck(mul_ck(a.num, b.den), mul_ck(b.num, a.den)), mul_ck(a.den, b.den));
}
inline Rat operator-(const Rat& a, const Rat& b) {
    return Rat(sub_ck(mul_ck(a.num, b.den), mul_ck(b.num, a.den)), mul_ck(a.den, b.den));
}
inline Rat operator*(const Rat& a, const Rat& b) {
    return Rat(mul_ck(a.num, b.num), mul_ck(a.den, b.den));
}
inline Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw Error("rational division by zero");
    return Rat(mul_ck(a.num, b.den), mul_ck(a.den, b.num));
}
inline bool operator<(const Rat& a, const Rat& b) {
    return mul_ck(a.num, b.den) < mul_ck(b.num, a.den);
}
inline bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }

// Largest integer <= a (true floor, not truncation).
inline Int rat_floor(const Rat& a) {
    Int q = a.num / a.den;
    if (a.num % a.den != 0 && a.num < 0) --q;
    return q;
}
inline Int rat_ceil(const Rat& a) { return -rat_floor(Rat(-a.num, a.den)); }

// Gauss-Jordan solve of A x = b; returns false when A is singular.
// A is square and small (at most 5x5 here), so partial pivoting on the
// first nonzero entry is plenty.
inline bool solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                         std::vector<Rat>& out) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].num == 0) ++piv;
        if (piv == n) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].num == 0) continue;
            Rat f = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k) A[row][k] = A[row][k] - f * A[col][k];
            b[row] = b[row] - f * b[col];
        }
    }
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = b[i] / A[i][i];
    return true;
}

}  // namespace crystal
