#pragma once

#include <cstddef>
#include <cstdint>

// Exact modular vector kernels. Every routine computes the same result in
// every variant; the AVX2 path uses 32-bit Montgomery lanes and is selected
// at runtime for odd moduli below 2^31. The scalar path is the reference:
// plain 128-bit products reduced with the hardware divider, valid for any
// modulus below 2^63.
//
// All moduli occurring in this project are odd prime powers p^k with p >= 5,
// so the Montgomery precondition (odd modulus) always holds on the fast path.

namespace iwa::kernels {

enum class Isa { scalar, avx2 };

/// True when the running CPU supports AVX2 and the binary carries the
/// AVX2 translation unit. Honors the IWA_NO_AVX2 environment override.
bool avx2_available();

/// Variant the dispatcher would pick for a modulus.
Isa select(std::uint64_t modulus);

// Dispatched entry points. out/acc may alias a or b only where noted.

/// out[i] = (a[i] + b[i]) mod m. Aliasing allowed.
void add_mod(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n, std::uint64_t m);

/// out[i] = (a[i] - b[i]) mod m. Aliasing allowed.
void sub_mod(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n, std::uint64_t m);

/// out[i] = s * a[i] mod m. Aliasing allowed.
void scale_mod(std::uint64_t* out, const std::uint64_t* a, std::uint64_t s,
               std::size_t n, std::uint64_t m);

/// acc[i] = (acc[i] + s * a[i]) mod m. acc must not alias a.
void add_scaled_mod(std::uint64_t* acc, const std::uint64_t* a, std::uint64_t s,
                    std::size_t n, std::uint64_t m);

/// out = a * b in (Z/m)[X]/(X^len - 1). out must not alias a or b.
/// Zero coefficients of a are skipped, so multiplying by a sparse element
/// costs O(nnz(a) * len).
void cyclic_convolve(std::uint64_t* out, const std::uint64_t* a,
                     const std::uint64_t* b, std::size_t len, std::uint64_t m);

namespace scalar {
void add_mod(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n, std::uint64_t m);
void sub_mod(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n, std::uint64_t m);
void scale_mod(std::uint64_t* out, const std::uint64_t* a, std::uint64_t s,
               std::size_t n, std::uint64_t m);
void add_scaled_mod(std::uint64_t* acc, const std::uint64_t* a, std::uint64_t s,
                    std::size_t n, std::uint64_t m);
void cyclic_convolve(std::uint64_t* out, const std::uint64_t* a,
                     const std::uint64_t* b, std::size_t len, std::uint64_t m);
}  // namespace scalar

namespace avx2 {
/// False when the binary was built without an AVX2-capable compiler.
bool compiled();
// Preconditions: m odd, m < 2^31, all inputs reduced mod m.
void add_mod(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n, std::uint64_t m);
void sub_mod(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
             std::size_t n, std::uint64_t m);
void scale_mod(std::uint64_t* out, const std::uint64_t* a, std::uint64_t s,
               std::size_t n, std::uint64_t m);
void add_scaled_mod(std::uint64_t* acc, const std::uint64_t* a, std::uint64_t s,
                    std::size_t n, std::uint64_t m);
void cyclic_convolve(std::uint64_t* out, const std::uint64_t* a,
                     const std::uint64_t* b, std::size_t len, std::uint64_t m);
}  // namespace avx2

}  // namespace iwa::kernels
