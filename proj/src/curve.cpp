#include "iwa/curve.hpp"

#include <cmath>
#include <vector>

namespace iwa {

namespace {

u64 canonical_mod(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

constexpr u64 kPointCountBound = 1000000;

}  // namespace

i64 trace_of_frobenius(const WeierstrassCurve& c, u64 ell) {
    if (ell < 2 || !is_prime_u64(ell)) throw Error("ell must be prime");
    if (ell > kPointCountBound) throw Error("ell exceeds the point-counting bound 10^6");

    if (ell == 2) {
        // direct affine count over F_2
        int affine = 0;
        for (u64 x = 0; x < 2; ++x)
            for (u64 y = 0; y < 2; ++y) {
                u64 lhs = (y * y + canonical_mod(c.a1, 2) * x * y + canonical_mod(c.a3, 2) * y) % 2;
                u64 rhs = (x * x * x + canonical_mod(c.a2, 2) * x * x + canonical_mod(c.a4, 2) * x +
                           canonical_mod(c.a6, 2)) %
                          2;
                if (lhs == rhs) ++affine;
            }
        return 2 + 1 - (affine + 1);
    }

    // complete the square: #points over x is 1 + chi(g(x)) with
    // g = 4x^3 + b2 x^2 + 2 b4 x + b6
    const u64 m = ell;
    const u64 b2 = canonical_mod(c.a1 * c.a1 + 4 * c.a2, m);
    const u64 b4 = canonical_mod(2 * c.a4 + c.a1 * c.a3, m);
    const u64 b6 = canonical_mod(c.a3 * c.a3 + 4 * c.a6, m);

    std::vector<bool> is_square(m, false);
    for (u64 t = 0; t < m; ++t) is_square[mulmod(t, t, m)] = true;

    i64 sum = 0;
    for (u64 x = 0; x < m; ++x) {
        u64 g = mulmod(x, mulmod(x, mulmod(4 % m, x, m), m), m);
        g = addmod(g, mulmod(b2, mulmod(x, x, m), m), m);
        g = addmod(g, mulmod(addmod(b4, b4, m), x, m), m);
        g = addmod(g, b6, m);
        if (g == 0) continue;
        sum += is_square[g] ? 1 : -1;
    }
    i64 a = -sum;
    if (static_cast<double>(a) * a > 4.0 * static_cast<double>(ell))
        throw Error("computed trace violates the Hasse bound");
    return a;
}

int kronecker_split(i64 D_K, i64 ell) { return kronecker(D_K, ell); }

unsigned unit_count_half(i64 D_K) {
    if (D_K == -3) return 3;
    if (D_K == -4) return 2;
    return 1;
}

u64 u_p_factor(u64 p, int eps_p, unsigned u_K) {
    if (eps_p == 0) throw RamifiedP("p ramifies in K");
    const i64 num = static_cast<i64>(p) - eps_p;
    if (num % static_cast<i64>(u_K) != 0)
        throw Error("u_K does not divide p - eps_K(p)");
    return static_cast<u64>(num / static_cast<i64>(u_K));
}

namespace {

bool is_squarefree_abs(i64 v) {
    u64 n = static_cast<u64>(v < 0 ? -v : v);
    for (u64 d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

bool is_fundamental_discriminant(i64 D) {
    if (D >= 0) return false;
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree_abs(D);
    if (r == 0) {
        i64 m = D / 4;
        i64 mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && is_squarefree_abs(m);
    }
    return false;
}

}  // namespace

CurveContext CurveContext::build(const WeierstrassCurve& curve, u64 N, i64 D_K, u64 p,
                                 CurveAssertions assertions,
                                 std::optional<ReductionType> expected_reduction) {
    CurveContext ctx;
    ctx.curve_ = curve;
    ctx.N_ = N;
    ctx.D_K_ = D_K;
    ctx.p_ = p;
    ctx.assertions_ = assertions;

    if (p < 5 || !is_prime_u64(p))
        throw HypothesisViolation("p must be a prime >= 5", "p >= 5");
    if (N == 0 || N % p == 0)
        throw HypothesisViolation("p divides the conductor N", "p does not divide N");
    if (!is_fundamental_discriminant(D_K))
        throw Error("D_K must be a fundamental discriminant < 0");
    const u64 absD = static_cast<u64>(-D_K);
    if (gcd_u64(N, absD) != 1 || gcd_u64(p, absD) != 1)
        throw HypothesisViolation("gcd(N p, D_K) must be 1", "gcd(N p, D_K) = 1");

    // factor N and place each prime by its splitting behaviour in K
    u64 rem = N;
    for (u64 q = 2; q * q <= rem; ++q) {
        if (rem % q) continue;
        unsigned e = 0;
        while (rem % q == 0) {
            rem /= q;
            ++e;
        }
        int kr = kronecker_split(D_K, static_cast<i64>(q));
        if (kr == 0) throw RamifiedPrimeInN("prime " + std::to_string(q) + " | N ramifies in K");
        if (kr == +1) {
            for (unsigned i = 0; i < e; ++i) ctx.N_plus_ *= q;
        } else {
            if (e > 1)
                throw HypothesisViolation("N^- must be squarefree", "N^- squarefree");
            ctx.N_minus_ *= q;
        }
    }
    if (rem > 1) {
        int kr = kronecker_split(D_K, static_cast<i64>(rem));
        if (kr == 0) throw RamifiedPrimeInN("prime " + std::to_string(rem) + " | N ramifies in K");
        if (kr == +1)
            ctx.N_plus_ *= rem;
        else
            ctx.N_minus_ *= rem;
    }

    ctx.eps_p_ = kronecker_split(D_K, static_cast<i64>(p));
    if (ctx.eps_p_ == 0) throw RamifiedP("p ramifies in K");
    ctx.u_K_ = unit_count_half(D_K);
    ctx.u_p_ = u_p_factor(p, ctx.eps_p_, ctx.u_K_);

    ctx.a_p_ = trace_of_frobenius(curve, p);
    const bool ss = canonical_mod(ctx.a_p_, p) == 0;  // for p >= 5 this forces a_p = 0
    ctx.reduction_ = ss ? ReductionType::supersingular : ReductionType::ordinary;
    if (expected_reduction && *expected_reduction != ctx.reduction_)
        throw HypothesisViolation("declared reduction type contradicts a_p",
                                  ss ? "supersingular => a_p = 0" : "ordinary => p does not divide a_p");
    if (!ss) {
        u64 r = canonical_mod(ctx.a_p_, p);
        if (r == 1 || r == p - 1)
            throw HypothesisViolation("ordinary a_p is congruent to +-1 mod p",
                                      "a_p != +-1 mod p");
    }
    return ctx;
}

i64 CurveContext::a_ell(u64 ell) const {
    if (N_ % ell == 0)
        throw BadReduction("ell = " + std::to_string(ell) + " divides the conductor");
    {
        std::lock_guard<std::mutex> lock(a_cache_->mutex);
        auto it = a_cache_->values.find(ell);
        if (it != a_cache_->values.end()) return it->second;
    }
    i64 a = trace_of_frobenius(curve_, ell);
    std::lock_guard<std::mutex> lock(a_cache_->mutex);
    a_cache_->values.emplace(ell, a);
    return a;
}

bool is_exceptional(const CurveContext& ctx, Eps eps) {
    return ctx.reduction() == ReductionType::supersingular && ctx.p_inert() && eps == Eps::plus;
}

}  // namespace iwa
