#include "iwa/kernels.hpp"

#include <cstdlib>
#include <vector>

namespace iwa::kernels {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace scalar {

void add_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    for (std::size_t i = 0; i < n; ++i) {
        u64 s = a[i] + b[i];  // both < m < 2^63, no overflow
        out[i] = s >= m ? s - m : s;
    }
}

void sub_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    for (std::size_t i = 0; i < n; ++i) {
        u64 ai = a[i], bi = b[i];
        out[i] = ai >= bi ? ai - bi : ai + m - bi;
    }
}

void scale_mod(u64* out, const u64* a, u64 s, std::size_t n, u64 m) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<u64>((static_cast<u128>(a[i]) * s) % m);
    }
}

void add_scaled_mod(u64* acc, const u64* a, u64 s, std::size_t n, u64 m) {
    for (std::size_t i = 0; i < n; ++i) {
        u64 t = static_cast<u64>((static_cast<u128>(a[i]) * s) % m);
        u64 v = acc[i] + t;
        acc[i] = v >= m ? v - m : v;
    }
}

void cyclic_convolve(u64* out, const u64* a, const u64* b, std::size_t len, u64 m) {
    for (std::size_t j = 0; j < len; ++j) out[j] = 0;
    for (std::size_t i = 0; i < len; ++i) {
        u64 s = a[i];
        if (s == 0) continue;
        // out[i + j] += s * b[j], split at the wrap point
        std::size_t head = len - i;
        add_scaled_mod(out + i, b, s, head, m);
        add_scaled_mod(out, b + head, s, i, m);
    }
}

}  // namespace scalar

bool avx2_available() {
    static const bool value = [] {
        if (std::getenv("IWA_NO_AVX2") != nullptr) return false;
        if (!avx2::compiled()) return false;
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    }();
    return value;
}

Isa select(u64 modulus) {
    // Montgomery lanes need an odd modulus below 2^31
    return (avx2_available() && (modulus & 1) && modulus < (1ULL << 31)) ? Isa::avx2
                                                                         : Isa::scalar;
}

void add_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    if (select(m) == Isa::avx2)
        avx2::add_mod(out, a, b, n, m);
    else
        scalar::add_mod(out, a, b, n, m);
}

void sub_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    if (select(m) == Isa::avx2)
        avx2::sub_mod(out, a, b, n, m);
    else
        scalar::sub_mod(out, a, b, n, m);
}

void scale_mod(u64* out, const u64* a, u64 s, std::size_t n, u64 m) {
    if (select(m) == Isa::avx2)
        avx2::scale_mod(out, a, s, n, m);
    else
        scalar::scale_mod(out, a, s, n, m);
}

void add_scaled_mod(u64* acc, const u64* a, u64 s, std::size_t n, u64 m) {
    if (select(m) == Isa::avx2)
        avx2::add_scaled_mod(acc, a, s, n, m);
    else
        scalar::add_scaled_mod(acc, a, s, n, m);
}

void cyclic_convolve(u64* out, const u64* a, const u64* b, std::size_t len, u64 m) {
    if (select(m) == Isa::avx2)
        avx2::cyclic_convolve(out, a, b, len, m);
    else
        scalar::cyclic_convolve(out, a, b, len, m);
}

#ifndef IWA_HAVE_AVX2_TU
namespace avx2 {
bool compiled() { return false; }
void add_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    scalar::add_mod(out, a, b, n, m);
}
void sub_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    scalar::sub_mod(out, a, b, n, m);
}
void scale_mod(u64* out, const u64* a, u64 s, std::size_t n, u64 m) {
    scalar::scale_mod(out, a, s, n, m);
}
void add_scaled_mod(u64* acc, const u64* a, u64 s, std::size_t n, u64 m) {
    scalar::add_scaled_mod(acc, a, s, n, m);
}
void cyclic_convolve(u64* out, const u64* a, const u64* b, std::size_t len, u64 m) {
    scalar::cyclic_convolve(out, a, b, len, m);
}
}  // namespace avx2
#endif

}  // namespace iwa::kernels
