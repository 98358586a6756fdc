#pragma once

#include <map>
#include <optional>
#include <vector>

#include "iwa/curve.hpp"

namespace iwa {

/// Truth value of each admissibility clause for one candidate prime:
///   A1: ell does not divide N p
///   A2: p does not divide ell^2 - 1
///   A3: a_ell^2 = (ell + 1)^2 in Z/p^k
///   A4: ell is inert in K
struct ClauseReport {
    u64 ell = 0;
    bool a1 = false, a2 = false, a3 = false, a4 = false;
    std::optional<i64> a_ell;  // absent when ell | N
    /// The congruence class a_ell / (ell + 1) mod p^k, stored when A2 and A3
    /// hold; the sign of the congruence is left open by the theory and the
    /// reciprocity bookkeeping consumes it through this value.
    std::optional<u64> eps_ell;

    bool admissible() const { return a1 && a2 && a3 && a4; }
};

ClauseReport is_admissible(u64 ell, const CurveContext& ctx, unsigned k);

std::vector<ClauseReport> enumerate_admissible_reports(const CurveContext& ctx, unsigned k,
                                                       u64 bound);
/// Ascending list of admissible primes <= bound.
std::vector<u64> enumerate_admissible(const CurveContext& ctx, unsigned k, u64 bound);

enum class SetSign { definite, indefinite };

/// A squarefree product of admissible primes, as a sorted set.
struct AdmissibleSet {
    std::vector<u64> primes;  // sorted, distinct
    unsigned k = 1;
};

/// definite iff eps_K(L N^-) = -1; each admissible prime is inert, so the
/// sign is (-1)^{#L} * eps_K(N^-).
SetSign classify_sign(const AdmissibleSet& L, const CurveContext& ctx);

struct HeckeValue {
    char op = 'T';  // 'T' or 'U'
    u64 value = 0;  // mod p^{modulus_exp}
    bool determined = true;
};

/// Level-raising bookkeeping object: the congruence data of an eigenform of
/// level (N^+, N^- S) with values in Z/p^k.
struct EigenformData {
    u64 level_plus = 1;
    u64 level_minus = 1;
    unsigned modulus_exp = 1;
    u64 p = 0;
    std::map<u64, HeckeValue> hecke;

    bool operator==(const EigenformData& o) const = default;
};

/// The source form attached to the context: T_q = a_q mod p^k for good
/// primes q <= bound, U_q entries for q | N supplied by the caller.
EigenformData eigenform_from_context(const CurveContext& ctx, unsigned k, u64 bound,
                                     const std::map<u64, i64>& bad_U = {});

/// Raise the level at S: level_minus gains S, the modulus drops to
/// k_target, T_q values are reduced mod p^{k_target} for q not dividing NS,
/// U_q for q | N are kept, and U_ell for ell | S is recorded as undetermined
/// with the conventional default +1.
EigenformData raise_level(const EigenformData& source, const AdmissibleSet& S,
                          unsigned k_target, const CurveContext& ctx);

}  // namespace iwa
