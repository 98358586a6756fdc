#include "iwa/lfunction.hpp"

namespace iwa {

namespace {
u64 canonical_mod(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

OmegaKind signed_quotient_kind(Eps eps, unsigned n, int split) {
    if (eps == Eps::plus) return OmegaKind::plus(n, split == +1 ? 1 : 0);
    return OmegaKind::minus(n);
}
}  // namespace

bool in_sign_class(unsigned n_chi, int split, Eps eps) {
    if (eps == Eps::none) return true;
    if (n_chi == 0) return split == -1 && eps == Eps::minus;
    const bool even = (n_chi % 2) == 0;
    return even == (eps == Eps::plus);
}

bool LFunctionTower::certified() const {
    for (const auto& c : divisibility)
        if (!c.ok) return false;
    for (const auto& c : recursion)
        if (!c.ok) return false;
    return true;
}

IwasawaElement theta_ordinary(const PointSequence& seq, unsigned n, const PadicResidue& alpha) {
    if (seq.a_p % static_cast<i64>(seq.p) == 0)
        throw NotOrdinary("sequence has a_p divisible by p");
    if (n < 1) throw IndexOutOfRange("ordinary theta elements start at level 1");
    if (n > seq.n_max) throw IndexOutOfRange("level exceeds the sequence depth");
    const u64 m = seq.modulus();
    const u64 a = alpha.value();
    const u64 a_inv_n = powmod(modinv(a, m), n, m);
    const u64 lo_len = checked_pow(seq.p, n - 1);
    const u64 len = lo_len * seq.p;
    std::vector<u64> c(len);
    for (u64 j = 0; j < len; ++j) {
        u64 v = submod(seq.levels[n - 1][j % lo_len], mulmod(a, seq.levels[n][j], m), m);
        c[j] = mulmod(a_inv_n, v, m);
    }
    return IwasawaElement(seq.p, seq.k, n, std::move(c));
}

IwasawaElement theta_supersingular(const PointSequence& seq, unsigned n) {
    if (seq.a_p != 0) throw NotSupersingular("sequence has a_p != 0");
    if (n > seq.n_max) throw IndexOutOfRange("level exceeds the sequence depth");
    return IwasawaElement(seq.p, seq.k, n, seq.levels[n]);
}

DivisibilityCertificate check_divisibility(const IwasawaElement& theta_n, unsigned n, int split) {
    DivisibilityCertificate cert;
    cert.n = n;
    const Eps eps = (n % 2 == 0) ? Eps::plus : Eps::minus;
    IwasawaElement up = theta_n.lifted_to_level(n + 1);
    IwasawaElement lhs = multiply_by_omega(up, signed_quotient_kind(eps, n, split));
    auto witness = try_divide_exact(lhs, OmegaKind::omega(n), &cert.obstruction);
    cert.ok = witness.has_value();
    if (witness) cert.witness = std::move(*witness);
    return cert;
}

RecursionCertificate check_recursion(const IwasawaElement& theta_m_plus_1,
                                     const IwasawaElement& theta_m_minus_1, unsigned m) {
    RecursionCertificate cert;
    cert.m = m;
    const unsigned level = m + 1;
    IwasawaElement shifted =
        multiply_by_omega(theta_m_minus_1.lifted_to_level(level), OmegaKind::cyclo(m));
    IwasawaElement s = theta_m_plus_1.lifted_to_level(level).add(shifted);
    const auto omega_m = omega_poly(omega_factors(OmegaKind::omega(m)), s.p(), s.k());
    cert.ok = reduce_mod_poly(s, omega_m).is_zero();
    return cert;
}

IwasawaElement extract_signed(const IwasawaElement& theta_n, unsigned n, Eps eps, int split) {
    if (eps == Eps::none) throw ParityMismatch("signed extraction needs eps = +-");
    const bool even = (n % 2) == 0;
    if (even != (eps == Eps::plus))
        throw ParityMismatch("level parity does not match eps");
    const bool exceptional = (split == -1 && eps == Eps::plus);

    OmegaKind divisor = OmegaKind::cyclo(1);  // overwritten below
    int sign;
    if (exceptional) {
        divisor = OmegaKind::minus(n);
        sign = (n / 2) % 2 == 0 ? +1 : -1;
    } else if (even) {
        divisor = OmegaKind::tilde_minus(n);
        sign = (n / 2) % 2 == 0 ? +1 : -1;
    } else {
        divisor = OmegaKind::tilde_plus(n);
        sign = ((n - 1) / 2) % 2 == 0 ? +1 : -1;
    }
    IwasawaElement rhs = sign == 1 ? theta_n : theta_n.neg();
    return divide_exact(rhs, divisor);
}

LFunctionTower build_tower(const PointSequence& seq, unsigned n_max) {
    if (n_max > seq.n_max) throw IndexOutOfRange("tower depth exceeds the sequence depth");
    LFunctionTower t;
    t.p = seq.p;
    t.k = seq.k;
    t.n_max = n_max;
    t.split = seq.split;
    t.a_p = seq.a_p;
    t.u_K = seq.u_K;
    t.c_K = seq.c_K;
    t.seed = seq.seed;
    t.signed_plus.assign(n_max + 1, std::nullopt);
    t.signed_minus.assign(n_max + 1, std::nullopt);

    if (seq.a_p == 0) {
        t.mode = TowerMode::supersingular;
        for (unsigned n = 0; n <= n_max; ++n) t.theta.push_back(theta_supersingular(seq, n));
        for (unsigned n = 0; n <= n_max; ++n) {
            t.divisibility.push_back(check_divisibility(t.theta[n], n, seq.split));
            const Eps eps = (n % 2 == 0) ? Eps::plus : Eps::minus;
            auto& slot = eps == Eps::plus ? t.signed_plus[n] : t.signed_minus[n];
            if (t.divisibility.back().ok)
                slot = extract_signed(t.theta[n], n, eps, seq.split);
        }
        for (unsigned m = 1; m + 1 <= n_max; ++m)
            t.recursion.push_back(check_recursion(t.theta[m + 1], t.theta[m - 1], m));
    } else {
        if (canonical_mod(seq.a_p, seq.p) == 0)
            throw NotOrdinary("a_p is a nonzero multiple of p; neither theory applies");
        t.mode = TowerMode::ordinary;
        t.alpha = hensel_unit_root(seq.a_p, seq.p, seq.k);
        t.theta.push_back(IwasawaElement(seq.p, seq.k, 0));  // filled by projection below
        for (unsigned n = 1; n <= n_max; ++n)
            t.theta.push_back(theta_ordinary(seq, n, *t.alpha));
        if (n_max >= 1) t.theta[0] = t.theta[1].project_to_level(0);
    }
    t.norm_compat = check_norm_compat(t);
    return t;
}

std::vector<NormCompatCertificate> check_norm_compat(const LFunctionTower& t) {
    std::vector<NormCompatCertificate> out;
    if (t.mode == TowerMode::ordinary) {
        for (unsigned n = 1; n + 1 <= t.n_max; ++n) {
            NormCompatCertificate c;
            c.eps = Eps::none;
            c.from = n + 1;
            c.to = n;
            c.ok = t.theta[n + 1].project_to_level(n) == t.theta[n];
            out.push_back(c);
        }
        return out;
    }
    for (Eps eps : {Eps::plus, Eps::minus}) {
        const auto& family = eps == Eps::plus ? t.signed_plus : t.signed_minus;
        const unsigned lowest = eps == Eps::plus ? 0 : 1;
        for (unsigned n = lowest + 2; n <= t.n_max; n += 2) {
            NormCompatCertificate c;
            c.eps = eps;
            c.from = n;
            c.to = n - 2;
            if (family[n] && family[n - 2]) {
                const auto target_poly = omega_poly(
                    omega_factors(signed_quotient_kind(eps, n - 2, t.split)), t.p, t.k);
                IwasawaElement proj = reduce_mod_poly(*family[n], target_poly);
                // canonical lift degree is below p^{n-2}, so re-realize there
                std::vector<u64> coeffs(proj.coeffs().begin(),
                                        proj.coeffs().begin() +
                                            static_cast<long>(checked_pow(t.p, n - 2)));
                IwasawaElement pr(t.p, t.k, n - 2, std::move(coeffs));
                c.ok = pr == *family[n - 2];
            }
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::optional<IwasawaElement>> full_lfunction(const LFunctionTower& t, Eps eps) {
    std::vector<std::optional<IwasawaElement>> out(t.n_max + 1, std::nullopt);
    if (t.mode == TowerMode::ordinary) {
        if (eps != Eps::none) throw SignClassMismatch("ordinary towers carry eps = none");
        for (unsigned n = 1; n <= t.n_max; ++n)
            out[n] = t.theta[n].mul(t.theta[n].involution());
        return out;
    }
    if (eps == Eps::none) throw SignClassMismatch("supersingular towers need eps = +-");
    const auto& family = eps == Eps::plus ? t.signed_plus : t.signed_minus;
    for (unsigned n = 0; n <= t.n_max; ++n) {
        if (!family[n]) continue;
        IwasawaElement prod = family[n]->mul(family[n]->involution());
        const auto quotient_poly =
            omega_poly(omega_factors(signed_quotient_kind(eps, n, t.split)), t.p, t.k);
        out[n] = reduce_mod_poly(prod, quotient_poly);
    }
    return out;
}

SpecializeResult specialize(const LFunctionTower& t, const Character& chi, Eps eps) {
    if (t.mode == TowerMode::ordinary) {
        if (eps != Eps::none) throw SignClassMismatch("ordinary towers carry eps = none");
        const unsigned r = std::max(chi.n_chi, 1u);
        if (r > t.n_max) throw ConductorExceedsLevel("tower too shallow for the conductor");
        CyclotomicValue v = evaluate_character(t.theta[r], chi.n_chi, chi.zeta_exponent);
        return SpecializeResult{v, ord_pi(v, t.k), r, false};
    }
    if (eps == Eps::none) throw SignClassMismatch("supersingular towers need eps = +-");
    if (!in_sign_class(chi.n_chi, t.split, eps))
        throw SignClassMismatch("character of conductor exponent " + std::to_string(chi.n_chi) +
                                " is not in Xi_p^" + eps_str(eps));
    const unsigned r = std::max(chi.n_chi, 1u) + ((std::max(chi.n_chi, 1u) % 2 == 0) ==
                                                          (eps == Eps::plus)
                                                      ? 0u
                                                      : 1u);
    if (r > t.n_max) throw ConductorExceedsLevel("tower too shallow for the conductor");
    const auto& family = eps == Eps::plus ? t.signed_plus : t.signed_minus;
    if (!family[r]) throw CertificateFailure("signed part missing at level " + std::to_string(r));
    CyclotomicValue v = evaluate_character(*family[r], chi.n_chi, chi.zeta_exponent);
    return SpecializeResult{v, ord_pi(v, t.k), r, t.exceptional(eps)};
}

}  // namespace iwa
