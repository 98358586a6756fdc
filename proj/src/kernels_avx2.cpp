// AVX2 variants. Compiled with -mavx2 and only reached through the runtime
// dispatcher, which guarantees m odd and m < 2^31.
//
// Multiplications run in 32-bit Montgomery lanes packed four per __m256i.
// Only the scalar multiplier of each row is converted into the Montgomery
// domain: REDC((s * R) * x) = s * x mod m, so vector operands and
// accumulators stay in the ordinary residue domain throughout.

#include "iwa/kernels.hpp"

#ifdef IWA_HAVE_AVX2_TU

#include <immintrin.h>

namespace iwa::kernels::avx2 {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool compiled() { return true; }

namespace {

struct Mont {
    u64 m;
    u32 nprime;  // -m^{-1} mod 2^32
    u64 r2;      // 2^64 mod m

    explicit Mont(u64 mod) : m(mod) {
        u32 x = static_cast<u32>(mod);
        for (int i = 0; i < 5; ++i) x *= 2u - static_cast<u32>(mod) * x;
        nprime = static_cast<u32>(0u - x);
        r2 = static_cast<u64>(((static_cast<u128>(1) << 64) % mod));
    }

    // T < m * 2^32; returns T * 2^-32 mod m, reduced.
    u64 redc(u64 t) const {
        u32 q = static_cast<u32>(t) * nprime;
        u64 r = (t + static_cast<u64>(q) * m) >> 32;
        return r >= m ? r - m : r;
    }

    // a < m: a * r2 < m^2 < m * 2^32, inside the REDC domain
    u64 to_mont(u64 a) const { return redc(a * r2); }
};

inline __m256i cond_sub(__m256i v, __m256i mv) {
    // v in [0, 2m), m < 2^31: signed 64-bit compare is safe
    __m256i lt = _mm256_cmpgt_epi64(mv, v);
    return _mm256_sub_epi64(v, _mm256_andnot_si256(lt, mv));
}

// acc[i] = (acc[i] + sbar * a[i] * 2^-32) mod m for 4 lanes at a time;
// sbar is a Montgomery-domain scalar so the product lands in the plain domain.
inline void fma_row(u64* acc, const u64* a, u64 sbar, std::size_t n, const Mont& mt) {
    const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(sbar));
    const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(mt.m));
    const __m256i npv = _mm256_set1_epi64x(static_cast<long long>(mt.nprime));
    const __m256i low32 = _mm256_set1_epi64x(0xffffffffLL);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i t = _mm256_mul_epu32(sv, av);                       // < 2^62
        __m256i q = _mm256_and_si256(_mm256_mul_epu32(t, npv), low32);
        __m256i qm = _mm256_mul_epu32(q, mv);                       // < 2^63
        __m256i red = _mm256_srli_epi64(_mm256_add_epi64(t, qm), 32);
        red = cond_sub(red, mv);
        __m256i cv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
        cv = cond_sub(_mm256_add_epi64(cv, red), mv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), cv);
    }
    for (; i < n; ++i) {
        u64 prod = mt.redc(sbar * a[i]);
        u64 v = acc[i] + prod;
        acc[i] = v >= mt.m ? v - mt.m : v;
    }
}

}  // namespace

void add_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = cond_sub(_mm256_add_epi64(av, bv), mv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), s);
    }
    for (; i < n; ++i) {
        u64 s = a[i] + b[i];
        out[i] = s >= m ? s - m : s;
    }
}

void sub_mod(u64* out, const u64* a, const u64* b, std::size_t n, u64 m) {
    const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i d = cond_sub(_mm256_sub_epi64(_mm256_add_epi64(av, mv), bv), mv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), d);
    }
    for (; i < n; ++i) {
        u64 ai = a[i], bi = b[i];
        out[i] = ai >= bi ? ai - bi : ai + m - bi;
    }
}

void scale_mod(u64* out, const u64* a, u64 s, std::size_t n, u64 m) {
    Mont mt(m);
    const u64 sbar = mt.to_mont(s % m);
    const __m256i sv = _mm256_set1_epi64x(static_cast<long long>(sbar));
    const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
    const __m256i npv = _mm256_set1_epi64x(static_cast<long long>(mt.nprime));
    const __m256i low32 = _mm256_set1_epi64x(0xffffffffLL);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i t = _mm256_mul_epu32(sv, av);
        __m256i q = _mm256_and_si256(_mm256_mul_epu32(t, npv), low32);
        __m256i qm = _mm256_mul_epu32(q, mv);
        __m256i red = cond_sub(_mm256_srli_epi64(_mm256_add_epi64(t, qm), 32), mv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), red);
    }
    for (; i < n; ++i) out[i] = mt.redc(sbar * a[i]);
}

void add_scaled_mod(u64* acc, const u64* a, u64 s, std::size_t n, u64 m) {
    Mont mt(m);
    fma_row(acc, a, mt.to_mont(s % m), n, mt);
}

void cyclic_convolve(u64* out, const u64* a, const u64* b, std::size_t len, u64 m) {
    Mont mt(m);
    for (std::size_t j = 0; j < len; ++j) out[j] = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        u64 sbar = mt.to_mont(a[i]);
        std::size_t head = len - i;
        fma_row(out + i, b, sbar, head, mt);
        fma_row(out, b + head, sbar, i, mt);
    }
}

}  // namespace iwa::kernels::avx2

#endif  // IWA_HAVE_AVX2_TU
