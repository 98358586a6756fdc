#include <doctest.h>

#include <vector>

#include "iwa/kernels.hpp"
#include "iwa/rng.hpp"

using namespace iwa;
using kernels::Isa;

namespace {

std::vector<u64> random_vec(Rng& rng, std::size_t n, u64 m, int sparsity = 1) {
    std::vector<u64> v(n);
    for (auto& x : v) x = (sparsity > 1 && rng.below(sparsity) != 0) ? 0 : rng.below(m);
    return v;
}

u64 random_odd_modulus(Rng& rng) {
    u64 m = 3 + 2 * rng.below((1ULL << 30) - 2);
    return m;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree on random inputs") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 unavailable; equivalence suite skipped");
        return;
    }
    Rng rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        const u64 m = random_odd_modulus(rng);
        const std::size_t n = 1 + rng.below(70);
        auto a = random_vec(rng, n, m, iter % 3 == 0 ? 4 : 1);
        auto b = random_vec(rng, n, m);
        std::vector<u64> r1(n), r2(n);

        kernels::scalar::add_mod(r1.data(), a.data(), b.data(), n, m);
        kernels::avx2::add_mod(r2.data(), a.data(), b.data(), n, m);
        CHECK(r1 == r2);

        kernels::scalar::sub_mod(r1.data(), a.data(), b.data(), n, m);
        kernels::avx2::sub_mod(r2.data(), a.data(), b.data(), n, m);
        CHECK(r1 == r2);

        const u64 s = rng.below(m);
        kernels::scalar::scale_mod(r1.data(), a.data(), s, n, m);
        kernels::avx2::scale_mod(r2.data(), a.data(), s, n, m);
        CHECK(r1 == r2);

        r1 = b;
        r2 = b;
        kernels::scalar::add_scaled_mod(r1.data(), a.data(), s, n, m);
        kernels::avx2::add_scaled_mod(r2.data(), a.data(), s, n, m);
        CHECK(r1 == r2);

        kernels::scalar::cyclic_convolve(r1.data(), a.data(), b.data(), n, m);
        kernels::avx2::cyclic_convolve(r2.data(), a.data(), b.data(), n, m);
        CHECK(r1 == r2);
    }
}

TEST_CASE("convolution against a direct double loop") {
    Rng rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        const u64 m = 5 + 2 * rng.below(1000);
        const std::size_t n = 1 + rng.below(12);
        auto a = random_vec(rng, n, m);
        auto b = random_vec(rng, n, m);
        std::vector<u64> expect(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                expect[(i + j) % n] = addmod(expect[(i + j) % n], mulmod(a[i], b[j], m), m);
        std::vector<u64> got(n);
        kernels::cyclic_convolve(got.data(), a.data(), b.data(), n, m);
        CHECK(expect == got);
    }
}

TEST_CASE("dispatcher picks avx2 only for narrow odd moduli") {
    if (kernels::avx2_available()) {
        CHECK(kernels::select(125) == Isa::avx2);
        CHECK(kernels::select(124) == Isa::scalar);  // even modulus: no Montgomery
        CHECK(kernels::select((1ULL << 31) - 1) == Isa::avx2);
        CHECK(kernels::select(1ULL << 31) == Isa::scalar);
        CHECK(kernels::select((1ULL << 45) + 1) == Isa::scalar);
    } else {
        CHECK(kernels::select(125) == Isa::scalar);
    }
}

TEST_CASE("wide moduli stay exact through the scalar path") {
    Rng rng(7);
    const u64 m = (1ULL << 61) + 1;  // far beyond the SIMD width rule
    const std::size_t n = 9;
    auto a = random_vec(rng, n, m);
    auto b = random_vec(rng, n, m);
    std::vector<u64> expect(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            expect[(i + j) % n] = addmod(expect[(i + j) % n], mulmod(a[i], b[j], m), m);
    std::vector<u64> got(n);
    kernels::cyclic_convolve(got.data(), a.data(), b.data(), n, m);
    CHECK(expect == got);
}
