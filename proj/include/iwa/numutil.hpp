#pragma once

#include <cstdint>

#include "iwa/errors.hpp"

namespace iwa {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Inverse of a mod m; throws NonUnit when gcd(a, m) != 1.
inline u64 modinv(u64 a, u64 m) {
    i64 t = 0, newt = 1;
    i64 r = static_cast<i64>(m), newr = static_cast<i64>(a % m);
    while (newr != 0) {
        i64 q = r / newr;
        i64 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw NonUnit("not invertible modulo " + std::to_string(m));
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// p^k, guarded against 64-bit overflow (limit 2^62 keeps sums of two
/// residues inside the signed range everywhere).
inline u64 checked_pow(u64 p, unsigned k) {
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > (1ULL << 62) / p) throw Error("modulus p^k exceeds the 2^62 word bound");
        r *= p;
    }
    return r;
}

/// Kronecker symbol (a/n), defined for all integers.
inline int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    int result = 1;
    if (v & 1) {
        i64 am8 = ((a % 8) + 8) % 8;  // (a/2) via a mod 8
        if (am8 == 3 || am8 == 5) result = -result;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        i64 t = a;
        a = n;
        n = t;
        if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace iwa
