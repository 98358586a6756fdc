#pragma once

#include <cstdint>
#include <vector>

#include "iwa/numutil.hpp"
#include "iwa/rng.hpp"

namespace iwa {

/// Dense matrix over Z/p^k.
struct MatZpk {
    std::size_t rows = 0, cols = 0;
    u64 p = 0;
    unsigned k = 0;
    u64 modulus = 0;
    std::vector<u64> a;

    MatZpk() = default;
    MatZpk(std::size_t r, std::size_t c, u64 p_, unsigned k_)
        : rows(r), cols(c), p(p_), k(k_), modulus(checked_pow(p_, k_)), a(r * c, 0) {}

    u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    u64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

MatZpk mat_mul(const MatZpk& x, const MatZpk& y);
std::vector<u64> mat_apply(const MatZpk& m, const std::vector<u64>& v);

/// Diagonalisation U * A * V = D over the local ring Z/p^k, D with diagonal
/// entries p^{e_i} * unit truncated at p^k (e_i = k encodes a zero entry).
/// Z/p^k is a quotient of a PID, so this is the Smith normal form with
/// p-power elementary divisors.
struct SmithZpk {
    std::vector<unsigned> diag_exponents;  // length min(rows, cols), each in [0, k]
    MatZpk U, V;                           // invertible over Z/p^k
    u64 p = 0;
    unsigned k = 0;
    std::size_t rows = 0, cols = 0;

    /// |ker A| as exponent of p: sum over columns of min-exponent slack.
    unsigned long kernel_size_exponent() const;
    /// |im A| as exponent of p.
    unsigned long image_size_exponent() const;
};

SmithZpk smith_form(const MatZpk& A);

/// A uniformly random element of ker A, drawn through the Smith transform.
std::vector<u64> sample_kernel(const SmithZpk& s, Rng& rng);

}  // namespace iwa
