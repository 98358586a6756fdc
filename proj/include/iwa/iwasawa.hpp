#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwa/cyclotomic.hpp"
#include "iwa/numutil.hpp"

namespace iwa {

/// An element of Lambda_{n,k} = (Z/p^k)[G_n], G_n cyclic of order p^n with
/// fixed generator gamma. Dense coefficient vector in the group basis:
/// coeffs[j] is the coefficient of gamma^j. Multiplication is cyclic
/// convolution of length p^n.
class IwasawaElement {
public:
    IwasawaElement(u64 p, unsigned k, unsigned level);
    IwasawaElement(u64 p, unsigned k, unsigned level, std::vector<u64> coeffs);

    static IwasawaElement one(u64 p, unsigned k, unsigned level);
    static IwasawaElement monomial(u64 p, unsigned k, unsigned level, u64 j, u64 c = 1);

    u64 p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned level() const { return level_; }
    u64 modulus() const { return modulus_; }
    u64 length() const { return static_cast<u64>(coeffs_.size()); }
    const std::vector<u64>& coeffs() const { return coeffs_; }
    u64 coeff(u64 j) const { return coeffs_[j]; }

    IwasawaElement add(const IwasawaElement& o) const;
    IwasawaElement sub(const IwasawaElement& o) const;
    IwasawaElement mul(const IwasawaElement& o) const;
    IwasawaElement neg() const;
    IwasawaElement scale(u64 s) const;

    /// gamma^j -> gamma^{-j}; Iwasawa's main involution.
    IwasawaElement involution() const;

    /// Natural projection Lambda_{n,k} ->> Lambda_{n',k}, gamma -> gamma:
    /// folds coefficients along j mod p^{n'}.
    IwasawaElement project_to_level(unsigned lower) const;

    /// Canonical polynomial lift into a higher-level algebra.
    IwasawaElement lifted_to_level(unsigned higher) const;

    IwasawaElement reduce_precision(unsigned k_target) const;

    /// gamma^shift * this (cyclic rotation of the coefficients).
    IwasawaElement rotated(i64 shift) const;

    u64 augmentation() const;
    bool is_zero() const;
    /// Largest j with a nonzero coefficient, or -1.
    long poly_degree() const;

    bool operator==(const IwasawaElement& o) const = default;

private:
    void require_same_ring(const IwasawaElement& o) const;

    u64 p_;
    unsigned k_;
    unsigned level_;
    u64 modulus_;
    std::vector<u64> coeffs_;
};

enum class OmegaTag {
    omega_n,
    omega_plus,
    omega_minus,
    omega_tilde_plus,
    omega_tilde_minus,
    cyclo_m,
};

/// Names one element of the omega family. nu_p is 0 when p is inert in K
/// and 1 when p splits; it only enters omega_plus, which carries the
/// (gamma - 1)^{nu_p} prefactor.
struct OmegaKind {
    OmegaTag tag;
    unsigned index;  // the n of omega_n^{...} or the m of Phi_{p^m}
    int nu_p = 0;

    static OmegaKind omega(unsigned n) { return {OmegaTag::omega_n, n, 0}; }
    static OmegaKind plus(unsigned n, int nu) { return {OmegaTag::omega_plus, n, nu}; }
    static OmegaKind minus(unsigned n) { return {OmegaTag::omega_minus, n, 0}; }
    static OmegaKind tilde_plus(unsigned n) { return {OmegaTag::omega_tilde_plus, n, 0}; }
    static OmegaKind tilde_minus(unsigned n) { return {OmegaTag::omega_tilde_minus, n, 0}; }
    static OmegaKind cyclo(unsigned m) { return {OmegaTag::cyclo_m, m, 0}; }

    bool operator==(const OmegaKind& o) const = default;
};

/// Factorisation of an omega element into (gamma-1)^mult and distinct
/// cyclotomic factors Phi_{p^m}.
struct OmegaFactors {
    unsigned gamma_minus_one = 0;
    std::vector<unsigned> cyclo;  // ascending m

    u64 degree(u64 p) const;
};

OmegaFactors omega_factors(const OmegaKind& kind);

/// The named element realized in Lambda_{level,k}. Memoized; the product is
/// formed by repeated convolution of the factors, never by closed form.
const IwasawaElement& omega_element(const OmegaKind& kind, unsigned level, u64 p, unsigned k);

/// Plain (non-cyclic) coefficients of the omega polynomial mod p^k,
/// index = degree. Monic.
std::vector<u64> omega_poly(const OmegaFactors& factors, u64 p, unsigned k);

/// x * omega, using the sparse structure of the factors: O(p * len) per factor.
IwasawaElement multiply_by_omega(const IwasawaElement& x, const OmegaKind& kind);
IwasawaElement multiply_by_factors(const IwasawaElement& x, const OmegaFactors& factors);

/// Remainder of x modulo a monic polynomial (canonical coset representative).
IwasawaElement reduce_mod_poly(const IwasawaElement& x, const std::vector<u64>& monic);

/// Chi applied coefficientwise: gamma -> zeta^{zeta_exponent} for the
/// canonical primitive p^n_chi-th root zeta. Exact integer output with
/// work_modulus p^k recorded.
CyclotomicValue evaluate_character(const IwasawaElement& a, unsigned n_chi,
                                   u64 zeta_exponent = 1);

/// Exact division in Lambda_{level,k}: the unique q with divisor * q == x
/// and q reduced modulo the complementary factor omega_level / divisor.
/// Solved factor by factor through the telescoping recurrences of
/// (gamma - 1) and Phi_{p^m}; throws NotDivisible with the first obstructed
/// coordinate when x is not a multiple.
IwasawaElement divide_exact(const IwasawaElement& x, const OmegaKind& divisor);

/// Non-throwing variant; obstruction receives the blocking coordinate.
std::optional<IwasawaElement> try_divide_exact(const IwasawaElement& x,
                                               const OmegaKind& divisor,
                                               long* obstruction = nullptr);

/// Conversions between the group basis and the T = gamma - 1 polynomial
/// view (a conversion only; storage stays in the group basis).
std::vector<u64> to_t_basis(const IwasawaElement& x);
IwasawaElement from_t_basis(u64 p, unsigned k, unsigned level, const std::vector<u64>& t);

}  // namespace iwa
