#include "iwa/admissible.hpp"

#include <algorithm>

namespace iwa {

namespace {
u64 canonical_mod(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}
}  // namespace

ClauseReport is_admissible(u64 ell, const CurveContext& ctx, unsigned k) {
    ClauseReport r;
    r.ell = ell;
    const u64 p = ctx.p();
    r.a1 = (ctx.N() % ell != 0) && (ell != p);
    r.a2 = ((ell % p) * (ell % p)) % p != 1;
    r.a4 = kronecker_split(ctx.D_K(), static_cast<i64>(ell)) == -1;
    if (ctx.N() % ell == 0) {
        // a_ell is the U_ell eigenvalue at bad primes; A3 is evaluated only
        // through A1 anyway, so the trace is left unset.
        r.a3 = false;
        return r;
    }
    const i64 a = ctx.a_ell(ell);
    r.a_ell = a;
    const u64 pk = checked_pow(p, k);
    const u64 am = canonical_mod(a, pk);
    const u64 lm = (ell + 1) % pk;
    r.a3 = mulmod(am, am, pk) == mulmod(lm, lm, pk);
    if (r.a2 && r.a3) {
        // ell + 1 is a unit mod p since p does not divide ell^2 - 1
        r.eps_ell = mulmod(am, modinv(lm, pk), pk);
    }
    return r;
}

std::vector<ClauseReport> enumerate_admissible_reports(const CurveContext& ctx, unsigned k,
                                                       u64 bound) {
    std::vector<ClauseReport> out;
    // simple sieve over [2, bound]
    std::vector<bool> composite(bound + 1, false);
    for (u64 q = 2; q <= bound; ++q) {
        if (composite[q]) continue;
        for (u64 t = q * q; t <= bound; t += q) composite[t] = true;
        out.push_back(is_admissible(q, ctx, k));
    }
    return out;
}

std::vector<u64> enumerate_admissible(const CurveContext& ctx, unsigned k, u64 bound) {
    std::vector<u64> primes;
    for (const auto& r : enumerate_admissible_reports(ctx, k, bound))
        if (r.admissible()) primes.push_back(r.ell);
    return primes;
}

SetSign classify_sign(const AdmissibleSet& L, const CurveContext& ctx) {
    for (u64 ell : L.primes) {
        if (kronecker_split(ctx.D_K(), static_cast<i64>(ell)) != -1)
            throw Error("set member " + std::to_string(ell) + " is not inert in K");
    }
    int sign = 1;
    u64 nm = ctx.N_minus();
    for (u64 q = 2; q * q <= nm; ++q)
        while (nm % q == 0) {
            nm /= q;
            sign = -sign;
        }
    if (nm > 1) sign = -sign;
    if (L.primes.size() % 2 == 1) sign = -sign;
    return sign == -1 ? SetSign::definite : SetSign::indefinite;
}

EigenformData eigenform_from_context(const CurveContext& ctx, unsigned k, u64 bound,
                                     const std::map<u64, i64>& bad_U) {
    EigenformData f;
    f.level_plus = ctx.N_plus();
    f.level_minus = ctx.N_minus();
    f.modulus_exp = k;
    f.p = ctx.p();
    const u64 pk = checked_pow(ctx.p(), k);
    std::vector<bool> composite(bound + 1, false);
    for (u64 q = 2; q <= bound; ++q) {
        if (composite[q]) continue;
        for (u64 t = q * q; t <= bound; t += q) composite[t] = true;
        if (ctx.N() % q == 0) {
            auto it = bad_U.find(q);
            if (it != bad_U.end())
                f.hecke[q] = HeckeValue{'U', canonical_mod(it->second, pk), true};
            continue;
        }
        f.hecke[q] = HeckeValue{'T', canonical_mod(ctx.a_ell(q), pk), true};
    }
    return f;
}

EigenformData raise_level(const EigenformData& source, const AdmissibleSet& S,
                          unsigned k_target, const CurveContext& ctx) {
    if (k_target > source.modulus_exp)
        throw NotAdmissibleAtTarget("target precision exceeds the source modulus");
    for (u64 ell : S.primes) {
        if (!is_admissible(ell, ctx, k_target).admissible())
            throw NotAdmissibleAtTarget("prime " + std::to_string(ell) +
                                        " is not admissible at exponent " +
                                        std::to_string(k_target));
    }
    EigenformData out;
    out.level_plus = source.level_plus;
    out.level_minus = source.level_minus;
    for (u64 ell : S.primes) out.level_minus *= ell;
    out.modulus_exp = k_target;
    out.p = source.p;
    const u64 pk = checked_pow(source.p, k_target);
    const u64 N = source.level_plus * source.level_minus;
    for (const auto& [q, hv] : source.hecke) {
        bool in_S = std::find(S.primes.begin(), S.primes.end(), q) != S.primes.end();
        if (in_S) continue;  // replaced below
        if (N % q == 0) {
            out.hecke[q] = hv;  // U_q inherited unchanged at the old level
        } else {
            out.hecke[q] = HeckeValue{'T', hv.value % pk, hv.determined};
        }
    }
    for (u64 ell : S.primes) {
        // U_ell of the raised form is +-1; the conventional default is +1
        // and the flag records that the sign was not computed.
        out.hecke[ell] = HeckeValue{'U', 1 % pk, false};
    }
    return out;
}

}  // namespace iwa
