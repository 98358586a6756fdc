#include "iwa/points.hpp"

namespace iwa {

namespace {
u64 canonical_mod(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

OmegaKind eps_kind(Eps eps, unsigned n, int split) {
    if (eps == Eps::plus) return OmegaKind::plus(n, split == +1 ? 1 : 0);
    return OmegaKind::minus(n);
}
}  // namespace

PointSequence generate_sequence(const SeqParams& params, u64 seed, u64 c_K) {
    if (params.split != 1 && params.split != -1) throw Error("split must be +1 or -1");
    PointSequence s;
    s.p = params.p;
    s.k = params.k;
    s.n_max = params.n_max;
    s.a_p = params.a_p;
    s.split = params.split;
    s.u_K = params.u_K;
    s.seed = seed;
    const u64 m = s.modulus();
    s.c_K = c_K % m;
    s.u_p = u_p_factor(params.p, params.split, params.u_K);
    s.c_minus1 = mulmod(s.u_p % m, s.c_K, m);

    const u64 ap = canonical_mod(params.a_p, m);
    const u64 uK_inv = modinv(params.u_K % m, m);
    u64 c0 = mulmod(ap, s.c_K, m);
    if (params.split == +1) c0 = submod(c0, mulmod(2 % m, s.c_K, m), m);
    c0 = mulmod(uK_inv, c0, m);

    s.levels.resize(params.n_max + 1);
    s.levels[0] = {c0};

    Rng rng(seed);
    u64 stratum = 1;  // p^n
    for (unsigned n = 0; n < params.n_max; ++n) {
        const u64 next_len = stratum * params.p;
        s.levels[n + 1].assign(next_len, 0);
        for (u64 j = 0; j < stratum; ++j) {
            u64 tail = 0;
            for (u64 i = 1; i < params.p; ++i) {
                u64 v = rng.below(m);
                s.levels[n + 1][j + i * stratum] = v;
                tail = addmod(tail, v, m);
            }
            const u64 prev = n == 0 ? s.c_minus1 : s.levels[n - 1][j % (stratum / params.p)];
            const u64 target = submod(mulmod(ap, s.levels[n][j], m), prev, m);
            s.levels[n + 1][j] = submod(target, tail, m);
        }
        stratum = next_len;
    }
    return s;
}

PointSequence generate_sequence(const CurveContext& ctx, unsigned k, unsigned n_max, u64 seed,
                                u64 c_K) {
    SeqParams p;
    p.p = ctx.p();
    p.k = k;
    p.n_max = n_max;
    p.a_p = ctx.a_p();
    p.split = ctx.eps_p();
    p.u_K = ctx.u_K();
    return generate_sequence(p, seed, c_K);
}

TraceReport verify_trace_relations(const PointSequence& s) {
    TraceReport rep;
    const u64 m = s.modulus();
    const u64 ap = canonical_mod(s.a_p, m);

    auto record = [&](const std::string& relation, unsigned n, u64 j, bool ok) {
        ++rep.checks_run;
        if (!ok) {
            rep.ok = false;
            rep.failures.push_back({relation, n, j, false});
        }
    };

    record("P-1", 0, 0, s.c_minus1 == mulmod(s.u_p % m, s.c_K, m));
    {
        u64 lhs = mulmod(s.u_K % m, s.levels[0][0], m);
        u64 rhs = mulmod(ap, s.c_K, m);
        if (s.split == +1) rhs = submod(rhs, mulmod(2 % m, s.c_K, m), m);
        record("P-0", 0, 0, lhs == rhs);
    }

    u64 stratum = 1;
    for (unsigned n = 0; n < s.n_max; ++n) {
        for (u64 j = 0; j < stratum; ++j) {
            u64 fiber = 0;
            for (u64 i = 0; i < s.p; ++i)
                fiber = addmod(fiber, s.levels[n + 1][j + i * stratum], m);
            const u64 prev = n == 0 ? s.c_minus1 : s.levels[n - 1][j % (stratum / s.p)];
            const u64 target = submod(mulmod(ap, s.levels[n][j], m), prev, m);
            record("compdef", n + 1, j, fiber == target);
        }
        stratum *= s.p;
    }
    return rep;
}

PointSequence galois_shift(const PointSequence& s, i64 a) {
    PointSequence out = s;
    u64 len = 1;
    for (unsigned n = 0; n <= s.n_max; ++n) {
        const i64 L = static_cast<i64>(len);
        const i64 sh = ((a % L) + L) % L;
        for (i64 j = 0; j < L; ++j)
            out.levels[n][static_cast<u64>((j + sh) % L)] = s.levels[n][static_cast<u64>(j)];
        len *= s.p;
    }
    return out;
}

namespace {

/// Canonical random representative mod (omega_n^eps, p^k), realized at
/// level n; when make_unit, the augmentation is forced to be a p-adic unit.
IwasawaElement random_quotient_rep(u64 p, unsigned k, unsigned n, const OmegaKind& kind,
                                   Rng& rng, bool make_unit) {
    const u64 deg = omega_factors(kind).degree(p);
    IwasawaElement r(p, k, n);
    const u64 m = r.modulus();
    std::vector<u64> c(r.length(), 0);
    for (u64 i = 0; i < deg; ++i) c[i] = rng.below(m);
    IwasawaElement e(p, k, n, std::move(c));
    if (make_unit && deg > 0 && e.augmentation() % p == 0) {
        auto cc = e.coeffs();
        cc[0] = addmod(cc[0], 1, m);
        e = IwasawaElement(p, k, n, std::move(cc));
    }
    return e;
}

IwasawaElement truncate_to_level(const IwasawaElement& x, unsigned lower) {
    const u64 len = checked_pow(x.p(), lower);
    if (static_cast<u64>(x.poly_degree() + 1) > len)
        throw Error("representative does not fit in the lower level");
    std::vector<u64> c(x.coeffs().begin(), x.coeffs().begin() + static_cast<long>(len));
    return IwasawaElement(x.p(), x.k(), lower, std::move(c));
}

}  // namespace

LocalPointTower generate_local_tower(u64 p, unsigned k, unsigned n_max, Eps eps, int split,
                                     u64 seed) {
    if (eps == Eps::none) throw Error("local towers are signed objects");
    if (split != 1 && split != -1) throw Error("split must be +1 or -1");
    LocalPointTower t;
    t.p = p;
    t.k = k;
    t.n_max = n_max;
    t.eps = eps;
    t.split = split;
    t.seed = seed;

    Rng rng(seed);
    const unsigned lowest = eps == Eps::plus ? 0 : 1;
    t.values.reserve(n_max + 1);

    if (eps == Eps::minus && n_max == 0) {
        // only d_0 exists: a unit generator of the level-0 module
        IwasawaElement d0(p, k, 0, {1 + rng.below(checked_pow(p, k) - 1)});
        if (d0.augmentation() % p == 0)
            d0 = IwasawaElement(p, k, 0, {addmod(d0.coeff(0), 1, d0.modulus())});
        t.values.push_back(d0);
        return t;
    }

    unsigned top = n_max;
    while (top > lowest && (top % 2) != (lowest % 2)) --top;

    // generators on matching-parity levels, built downward so every trace
    // lands exactly on the previous one
    std::vector<std::optional<IwasawaElement>> vals(n_max + 1);
    IwasawaElement cur =
        random_quotient_rep(p, k, top, eps_kind(eps, top, split), rng, /*make_unit=*/true);
    vals[top] = cur;
    for (unsigned n = top; n >= lowest + 2; n -= 2) {
        IwasawaElement down = cur.neg();
        down = reduce_mod_poly(down, omega_poly(omega_factors(eps_kind(eps, n - 2, split)), p, k));
        cur = truncate_to_level(down, n - 2);
        vals[n - 2] = cur;
    }
    if (eps == Eps::minus) {
        // Trace_{1/0}(d_1^-) = u d_0 with u = 1: d_0 is the augmentation
        vals[0] = IwasawaElement(p, k, 0, {vals[1]->augmentation()});
    }
    // levels of mismatched parity repeat the generator below them
    for (unsigned n = 1; n <= n_max; ++n)
        if (!vals[n]) vals[n] = vals[n - 1]->lifted_to_level(n);

    for (unsigned n = 0; n <= n_max; ++n) t.values.push_back(*vals[n]);
    return t;
}

LocalTowerReport verify_local_tower(const LocalPointTower& t) {
    LocalTowerReport rep;
    const unsigned lowest = t.eps == Eps::plus ? 0 : 1;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    // boundary values
    if (t.eps == Eps::plus) {
        if (t.split == -1) {
            if (!t.values[0].is_zero()) fail("inert d_0^+ must vanish");
        } else {
            if (t.values[0].augmentation() % t.p == 0) fail("split d_0^+ must be a unit");
        }
    } else {
        if (t.values[0].augmentation() % t.p == 0) fail("d_0 must be a unit generator");
    }

    for (unsigned n = lowest + 2; n <= t.n_max; n += 2) {
        IwasawaElement sum = t.values[n].add(t.values[n - 2].lifted_to_level(n));
        IwasawaElement traced = multiply_by_omega(sum, OmegaKind::cyclo(n));
        IwasawaElement r = reduce_mod_poly(
            traced, omega_poly(omega_factors(eps_kind(t.eps, n, t.split)), t.p, t.k));
        if (!r.is_zero())
            fail("trace relation fails from level " + std::to_string(n) + " to " +
                 std::to_string(n - 2));
    }

    if (t.eps == Eps::minus && t.n_max >= 1) {
        const u64 m = t.values[0].modulus();
        const u64 aug = t.values[1].augmentation();
        const u64 d0 = t.values[0].coeff(0);
        if (d0 % t.p == 0) {
            fail("d_0 is not a unit");
        } else {
            const u64 u = mulmod(aug, modinv(d0, m), m);
            if (u % t.p == 0)
                fail("Trace_{1/0}(d_1^-) is not a unit multiple of d_0");
            else
                rep.unit_u = u;
        }
    }
    return rep;
}

}  // namespace iwa
