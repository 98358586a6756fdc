#pragma once

#include <cstdint>
#include <string>

#include "iwa/numutil.hpp"

namespace iwa {

/// An element of Z/p^k for a prime p >= 5, stored as the canonical
/// representative in [0, p^k). Immutable value type.
class PadicResidue {
public:
    PadicResidue(u64 p, unsigned k, i64 value);

    u64 p() const { return p_; }
    unsigned k() const { return k_; }
    u64 modulus() const { return modulus_; }
    u64 value() const { return value_; }

    PadicResidue add(const PadicResidue& o) const;
    PadicResidue sub(const PadicResidue& o) const;
    PadicResidue mul(const PadicResidue& o) const;
    /// Throws NonUnit when p divides the value.
    PadicResidue inv() const;
    PadicResidue pow(u64 e) const;
    PadicResidue neg() const;

    bool is_unit() const { return value_ % p_ != 0; }

    /// Reduce to precision k' <= k.
    PadicResidue reduce(unsigned k_target) const;

    bool operator==(const PadicResidue& o) const {
        return p_ == o.p_ && k_ == o.k_ && value_ == o.value_;
    }

private:
    void require_same_context(const PadicResidue& o) const;

    u64 p_;
    unsigned k_;
    u64 modulus_;
    u64 value_;
};

/// The unit root of X^2 - a_p X + p in Z/p^k, i.e. the root congruent to
/// a_p mod p. Throws NotOrdinary when p | a_p.
PadicResidue hensel_unit_root(i64 a_p, u64 p, unsigned k);

}  // namespace iwa
