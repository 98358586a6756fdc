#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwa/numutil.hpp"

namespace iwa {

/// Nonnegative valuation, or a CAP marker meaning "at least this bound,
/// indistinguishable from infinity at the working precision".
struct Valuation {
    bool is_cap = false;
    long value = 0;  // the valuation, or the cap bound when is_cap

    static Valuation finite(long v) { return Valuation{false, v}; }
    static Valuation cap(long bound) { return Valuation{true, bound}; }

    bool is_finite() const { return !is_cap; }
    bool operator==(const Valuation& o) const = default;
    std::string str() const {
        return is_cap ? ">=" + std::to_string(value) : std::to_string(value);
    }
};

/// phi(p^n): the degree of the p^n-th cyclotomic field (1 when n = 0).
u64 cyclotomic_degree(u64 p, unsigned n);

/// An element of Z[zeta_{p^n}] in the power basis, coefficients reduced
/// modulo the p^n-th cyclotomic polynomial. Exact integer coefficients;
/// an optional working modulus p^m records the precision the value was
/// produced at (specializations of Lambda/p^k elements carry p^k here).
class CyclotomicValue {
public:
    CyclotomicValue(u64 p, unsigned n_chi, std::vector<mpz_class> coeffs,
                    std::optional<mpz_class> work_modulus = std::nullopt);

    static CyclotomicValue integer(u64 p, const mpz_class& value);
    /// zeta^e for the canonical primitive p^n_chi-th root.
    static CyclotomicValue zeta_power(u64 p, unsigned n_chi, u64 e);

    u64 p() const { return p_; }
    unsigned n_chi() const { return n_chi_; }
    u64 degree() const { return cyclotomic_degree(p_, n_chi_); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const std::optional<mpz_class>& work_modulus() const { return work_modulus_; }

    CyclotomicValue add(const CyclotomicValue& o) const;
    CyclotomicValue sub(const CyclotomicValue& o) const;
    CyclotomicValue mul(const CyclotomicValue& o) const;

    /// Canonical lift: every coefficient reduced into [0, modulus).
    CyclotomicValue reduced_mod(const mpz_class& modulus) const;

    bool is_zero() const;
    bool operator==(const CyclotomicValue& o) const;

private:
    void require_same_field(const CyclotomicValue& o) const;

    u64 p_;
    unsigned n_chi_;
    std::vector<mpz_class> coeffs_;
    std::optional<mpz_class> work_modulus_;
};

/// Field norm to Q of an exactly represented value, computed as the
/// resultant of the p^n_chi-th cyclotomic polynomial with the representing
/// polynomial.
mpz_class cyclotomic_norm(const CyclotomicValue& x);

/// Resultant of two integer polynomials (dense coefficient vectors,
/// index = degree) by the subresultant PRS.
mpz_class resultant(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

/// pi-adic valuation of x for pi = zeta - 1 (pi = p when n_chi = 0),
/// computed as v_p(norm) on the canonical lift mod p^k_cap. Returns
/// CAP(k_cap * phi(p^n_chi)) when x vanishes at that precision.
Valuation ord_pi(const CyclotomicValue& x, unsigned k_cap);

}  // namespace iwa
