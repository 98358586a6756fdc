#include "iwa/residue.hpp"

namespace iwa {

namespace {
u64 canonical(i64 value, u64 modulus) {
    i64 r = value % static_cast<i64>(modulus);
    if (r < 0) r += static_cast<i64>(modulus);
    return static_cast<u64>(r);
}
}  // namespace

PadicResidue::PadicResidue(u64 p, unsigned k, i64 value)
    : p_(p), k_(k), modulus_(checked_pow(p, k)), value_(canonical(value, modulus_)) {
    if (p < 5 || !is_prime_u64(p)) throw Error("p must be a prime >= 5");
    if (k < 1) throw Error("precision exponent k must be >= 1");
}

void PadicResidue::require_same_context(const PadicResidue& o) const {
    if (p_ != o.p_ || k_ != o.k_)
        throw ModulusMismatch("residues live in different Z/p^k rings");
}

PadicResidue PadicResidue::add(const PadicResidue& o) const {
    require_same_context(o);
    PadicResidue r = *this;
    r.value_ = addmod(value_, o.value_, modulus_);
    return r;
}

PadicResidue PadicResidue::sub(const PadicResidue& o) const {
    require_same_context(o);
    PadicResidue r = *this;
    r.value_ = submod(value_, o.value_, modulus_);
    return r;
}

PadicResidue PadicResidue::mul(const PadicResidue& o) const {
    require_same_context(o);
    PadicResidue r = *this;
    r.value_ = mulmod(value_, o.value_, modulus_);
    return r;
}

PadicResidue PadicResidue::inv() const {
    if (!is_unit())
        throw NonUnit("cannot invert " + std::to_string(value_) + " mod " +
                      std::to_string(p_) + "^" + std::to_string(k_));
    PadicResidue r = *this;
    r.value_ = modinv(value_, modulus_);
    return r;
}

PadicResidue PadicResidue::pow(u64 e) const {
    PadicResidue r = *this;
    r.value_ = powmod(value_, e, modulus_);
    return r;
}

PadicResidue PadicResidue::neg() const {
    PadicResidue r = *this;
    r.value_ = value_ == 0 ? 0 : modulus_ - value_;
    return r;
}

PadicResidue PadicResidue::reduce(unsigned k_target) const {
    if (k_target > k_) throw Error("cannot raise precision by reduction");
    return PadicResidue(p_, k_target, static_cast<i64>(value_ % checked_pow(p_, k_target)));
}

PadicResidue hensel_unit_root(i64 a_p, u64 p, unsigned k) {
    if (p < 5 || !is_prime_u64(p)) throw Error("p must be a prime >= 5");
    u64 ap_mod_p = canonical(a_p, p);
    if (ap_mod_p == 0)
        throw NotOrdinary("a_p is divisible by p; no unit root exists");

    const u64 m = checked_pow(p, k);
    const u64 a = canonical(a_p, m);
    // Newton iteration for f(X) = X^2 - aX + p. The derivative at the unit
    // root is 2X - a == a != 0 mod p, so the root is simple and convergence
    // is quadratic; k rounds are more than enough.
    u64 alpha = ap_mod_p;
    for (unsigned i = 0; i < k + 1; ++i) {
        u64 f = addmod(submod(mulmod(alpha, alpha, m), mulmod(a, alpha, m), m), p % m, m);
        if (f == 0) break;
        u64 fprime = submod(addmod(alpha, alpha, m), a, m);
        alpha = submod(alpha, mulmod(f, modinv(fprime, m), m), m);
    }
    return PadicResidue(p, k, static_cast<i64>(alpha));
}

}  // namespace iwa
