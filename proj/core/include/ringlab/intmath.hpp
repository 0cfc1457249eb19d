#pragma once

#include <cassert>
#include <cstdint>
#include <cmath>
#include <numeric>

namespace ringlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline i64 mod_floor(i64 a, i64 m) {
    assert(m > 0);
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) { return i64((i128(a) * b) % m); }

inline i64 powmod(i64 base, u64 exp, i64 m) {
    i64 r = 1 % m;
    base = mod_floor(base, m);
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 ipow(u64 base, unsigned exp) {
    u64 r = 1;
    while (exp--) r *= base;
    return r;
}

/// Deterministic trial-division primality test; desk-scale moduli only.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Modular inverse for gcd(a, m) = 1.
inline i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
    while (a1) {
        i64 q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    assert(g == 1);
    return mod_floor(x, m);
}

/// log-space comparison a <= b^e with a small absolute slack, so that exact
/// boundary cases (a == b^e as reals) count as "<=".
inline bool le_pow(double a, double b, double e, double slack = 1e-9) {
    if (a <= 0) return true;
    return std::log(a) <= e * std::log(b) + slack;
}

} // namespace ringlab
