#include "iwa/acceptance.hpp"

#include <chrono>
#include <ostream>
#include <set>
#include <sstream>

#include "iwa/bounds.hpp"
#include "iwa/json_io.hpp"
#include "iwa/lfunction.hpp"
#include "iwa/linalg_zpk.hpp"
#include "iwa/parallel.hpp"

namespace iwa::acceptance {

namespace {

u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Corpus {
    std::vector<PointSequence> ss;
    std::vector<LFunctionTower> ss_towers;
    std::vector<std::vector<std::optional<IwasawaElement>>> ss_lp_plus, ss_lp_minus;
    std::vector<PointSequence> ord;
    std::vector<LFunctionTower> ord_towers;
    std::vector<std::vector<std::optional<IwasawaElement>>> ord_lp;
};

constexpr std::size_t kSsCorpusSize = 100;
constexpr std::size_t kOrdCorpusSize = 20;
constexpr unsigned kCorpusDepth = 5;

Corpus build_corpus() {
    Corpus c;
    c.ss.resize(kSsCorpusSize);
    c.ss_towers.resize(kSsCorpusSize);
    c.ss_lp_plus.resize(kSsCorpusSize);
    c.ss_lp_minus.resize(kSsCorpusSize);
    parallel_for(kSsCorpusSize, [&](std::size_t i) {
        SeqParams p;
        p.p = 5;
        p.k = static_cast<unsigned>(i % 3) + 1;
        p.n_max = kCorpusDepth;
        p.a_p = 0;
        p.split = (i % 2 == 0) ? -1 : +1;
        p.u_K = 1;
        const u64 c_K = 1 + i % 7;
        c.ss[i] = generate_sequence(p, 1000 + i, c_K);
        c.ss_towers[i] = build_tower(c.ss[i], kCorpusDepth);
        c.ss_lp_plus[i] = full_lfunction(c.ss_towers[i], Eps::plus);
        c.ss_lp_minus[i] = full_lfunction(c.ss_towers[i], Eps::minus);
    });
    c.ord.resize(kOrdCorpusSize);
    c.ord_towers.resize(kOrdCorpusSize);
    c.ord_lp.resize(kOrdCorpusSize);
    parallel_for(kOrdCorpusSize, [&](std::size_t i) {
        SeqParams p;
        p.p = 5;
        p.k = static_cast<unsigned>(i % 3) + 1;
        p.n_max = kCorpusDepth;
        p.a_p = 3;  // unit, not congruent to +-1 mod 5
        p.split = (i % 2 == 0) ? -1 : +1;
        p.u_K = 1;
        c.ord[i] = generate_sequence(p, 2000 + i, 1 + i % 6);
        c.ord_towers[i] = build_tower(c.ord[i], kCorpusDepth);
        c.ord_lp[i] = full_lfunction(c.ord_towers[i], Eps::none);
    });
    return c;
}

// ---------------------------------------------------------------- criterion 1

bool crit1_omega_factorization(std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    for (u64 p : {5ULL, 7ULL}) {
        for (unsigned n = 1; n <= 4; ++n) {
            for (unsigned k = 1; k <= 3; ++k) {
                const unsigned L = n + 1;
                const IwasawaElement& lhs = omega_element(OmegaKind::omega(n), L, p, k);
                IwasawaElement rhs = omega_element(OmegaKind::minus(0), L, p, k)
                                         .mul(omega_element(OmegaKind::tilde_plus(n), L, p, k))
                                         .mul(omega_element(OmegaKind::tilde_minus(n), L, p, k));
                const bool eq = lhs == rhs;
                // inert: omega_n^+ coincides with its tilde part; split: it
                // gains exactly the gamma - 1 factor
                const bool inert_eq = omega_element(OmegaKind::plus(n, 0), L, p, k) ==
                                      omega_element(OmegaKind::tilde_plus(n), L, p, k);
                const bool split_eq =
                    omega_element(OmegaKind::plus(n, 1), L, p, k) ==
                    omega_element(OmegaKind::minus(0), L, p, k)
                        .mul(omega_element(OmegaKind::tilde_plus(n), L, p, k));
                ok = ok && eq && inert_eq && split_eq;
                tr << "C1 p=" << p << " n=" << n << " k=" << k << " " << eq << inert_eq
                   << split_eq << "\n";
            }
        }
    }
    detail = "p in {5,7}, 1<=n<=4, k<=3, both nu_p";
    return ok;
}

// ---------------------------------------------------------------- criterion 2

MatZpk mult_matrix(const OmegaKind& kind, unsigned n, u64 p, unsigned k) {
    const u64 P = checked_pow(p, n);
    MatZpk M(P, P, p, k);
    for (u64 j = 0; j < P; ++j) {
        IwasawaElement col = multiply_by_omega(IwasawaElement::monomial(p, k, n, j), kind);
        for (u64 i = 0; i < P; ++i) M.at(i, j) = col.coeff(i);
    }
    return M;
}

bool mat_is_zero(const MatZpk& m) {
    for (u64 v : m.a)
        if (v) return false;
    return true;
}

bool crit2_divlemma(std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    const u64 p = 5;
    Rng rng(0xd171deULL);
    for (unsigned n = 1; n <= 2; ++n) {
        for (unsigned k = 1; k <= 2; ++k) {
            const std::vector<std::pair<OmegaKind, OmegaKind>> pairs = {
                {OmegaKind::tilde_minus(n), OmegaKind::plus(n, 1)},  // split, even side
                {OmegaKind::tilde_plus(n), OmegaKind::minus(n)},     // odd side, both cases
                {OmegaKind::minus(n), OmegaKind::plus(n, 0)},        // inert exceptional side
            };
            for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                const auto& [d, e] = pairs[pi];
                MatZpk Md = mult_matrix(d, n, p, k);
                MatZpk Me = mult_matrix(e, n, p, k);
                SmithZpk sd = smith_form(Md);
                SmithZpk se = smith_form(Me);
                bool comp_zero = mat_is_zero(mat_mul(Me, Md)) && mat_is_zero(mat_mul(Md, Me));
                bool image_is_torsion = sd.image_size_exponent() == se.kernel_size_exponent();
                bool kernel_is_coimage = sd.kernel_size_exponent() == se.image_size_exponent();
                ok = ok && comp_zero && image_is_torsion && kernel_is_coimage;
                tr << "C2 n=" << n << " k=" << k << " pair=" << pi << " imexp="
                   << sd.image_size_exponent() << " kerexp=" << se.kernel_size_exponent()
                   << " " << comp_zero << image_is_torsion << kernel_is_coimage << "\n";

                if (k == 2) {
                    // random sampling plus kernel solve
                    const auto e_poly = omega_poly(omega_factors(e), p, k);
                    const u64 mod = checked_pow(p, k);
                    const u64 deg_e = omega_factors(e).degree(p);
                    for (int s = 0; s < 20; ++s) {
                        std::vector<u64> yc(checked_pow(p, n), 0);
                        for (u64 t = 0; t < deg_e; ++t) yc[t] = rng.below(mod);
                        IwasawaElement y(p, k, n, std::move(yc));
                        IwasawaElement x = multiply_by_omega(y, d);
                        bool torsion = multiply_by_omega(x, e).is_zero();
                        IwasawaElement q = divide_exact(x, d);
                        bool unique = q == reduce_mod_poly(y, e_poly);
                        ok = ok && torsion && unique;
                        if (!(torsion && unique)) tr << "C2 sample fail n=" << n << "\n";
                    }
                    for (int s = 0; s < 20; ++s) {
                        std::vector<u64> z = sample_kernel(se, rng);
                        IwasawaElement ze(p, k, n, z);
                        long obstruction = -1;
                        auto q = try_divide_exact(ze, d, &obstruction);
                        bool onto = q.has_value() && multiply_by_omega(*q, d) == ze;
                        ok = ok && onto;
                        if (!onto) tr << "C2 kernel sample fail n=" << n << "\n";
                    }
                }
            }
        }
    }

    // literal exhaustive enumeration where the modules are small: n = 1, k = 1
    {
        const unsigned n = 1, k = 1;
        const u64 P = 5;
        const std::vector<std::pair<OmegaKind, OmegaKind>> pairs = {
            {OmegaKind::tilde_minus(n), OmegaKind::plus(n, 1)},
            {OmegaKind::tilde_plus(n), OmegaKind::minus(n)},
            {OmegaKind::minus(n), OmegaKind::plus(n, 0)},
        };
        for (const auto& [d, e] : pairs) {
            std::set<std::vector<u64>> torsion;
            std::vector<u64> v(P, 0);
            // every element of Lambda_{1,1}
            for (u64 code = 0; code < 3125; ++code) {
                u64 c = code;
                for (u64 t = 0; t < P; ++t) {
                    v[t] = c % 5;
                    c /= 5;
                }
                IwasawaElement x(5, k, n, v);
                if (multiply_by_omega(x, e).is_zero()) torsion.insert(x.coeffs());
            }
            const u64 deg_e = omega_factors(e).degree(5);
            std::set<std::vector<u64>> images;
            u64 reps = checked_pow(5, deg_e);
            bool injective = true, inside = true;
            for (u64 code = 0; code < reps; ++code) {
                u64 c = code;
                std::vector<u64> yc(P, 0);
                for (u64 t = 0; t < deg_e; ++t) {
                    yc[t] = c % 5;
                    c /= 5;
                }
                IwasawaElement img = multiply_by_omega(IwasawaElement(5, k, n, yc), d);
                inside = inside && torsion.count(img.coeffs()) > 0;
                injective = injective && images.insert(img.coeffs()).second;
            }
            bool onto = images.size() == torsion.size();
            ok = ok && injective && inside && onto;
            tr << "C2 exhaustive |torsion|=" << torsion.size() << " |image|=" << images.size()
               << " " << injective << inside << onto << "\n";
        }
    }
    detail = "p=5, n<=2, k<=2: exact kernel/image accounting + exhaustive n=1,k=1";
    return ok;
}

// ------------------------------------------------------------ criteria 3 & 4

bool crit3_divisibility_recursion(const Corpus& c, std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    for (std::size_t i = 0; i < c.ss.size(); ++i) {
        const auto& t = c.ss_towers[i];
        bool traces = verify_trace_relations(c.ss[i]).ok;
        bool div = true;
        for (const auto& cert : t.divisibility) div = div && cert.ok;
        bool rec = true;
        for (const auto& cert : t.recursion)
            if (cert.m >= 2 && cert.m <= 4) rec = rec && cert.ok;
        ok = ok && traces && div && rec;
        tr << "C3 seq=" << i << " " << traces << div << rec << "\n";
    }
    // negative controls: a single perturbed coordinate must break the
    // divisibility certificate at its level
    Rng rng(424242);
    for (std::size_t i = 0; i < 10; ++i) {
        PointSequence s = c.ss[i * 10];
        const unsigned n = 1 + static_cast<unsigned>(rng.below(kCorpusDepth));
        const u64 j = rng.below(checked_pow(s.p, n));
        s.levels[n][j] = addmod(s.levels[n][j], 1, s.modulus());
        bool verify_fails = !verify_trace_relations(s).ok;
        IwasawaElement theta = theta_supersingular(s, n);
        bool cert_fails = !check_divisibility(theta, n, s.split).ok;
        ok = ok && verify_fails && cert_fails;
        tr << "C3 neg seq=" << i * 10 << " n=" << n << " j=" << j << " " << verify_fails
           << cert_fails << "\n";
    }
    detail = "100 seeded sequences, n_max=5, k<=3, plus 10 perturbed negative controls";
    return ok;
}

bool crit4_norm_compat(const Corpus& c, std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    for (std::size_t i = 0; i < c.ss_towers.size(); ++i) {
        for (const auto& cert : c.ss_towers[i].norm_compat) {
            ok = ok && cert.ok;
            if (!cert.ok)
                tr << "C4 ss=" << i << " eps=" << eps_str(cert.eps) << " " << cert.from << "->"
                   << cert.to << " FAIL\n";
        }
    }
    for (std::size_t i = 0; i < c.ord_towers.size(); ++i) {
        for (const auto& cert : c.ord_towers[i].norm_compat) {
            ok = ok && cert.ok;
            if (!cert.ok) tr << "C4 ord=" << i << " " << cert.from << "->" << cert.to << " FAIL\n";
        }
    }
    tr << "C4 done " << ok << "\n";
    detail = "signed projection identities (ss corpus) and level projections (ordinary)";
    return ok;
}

// ---------------------------------------------------------------- criterion 5

bool crit5_interpolation(std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    const u64 p = 5;
    const unsigned k = 3;
    const u64 pk = checked_pow(p, k);

    auto cyclo_int = [&](const CyclotomicValue& v) {
        mpz_class m = v.coeffs()[0] % pk;
        if (m < 0) m += pk;
        return m.get_ui();
    };

    // ordinary, both splittings and a u_K = 2 variant
    struct OrdCase {
        int split;
        unsigned u_K;
        i64 a_p;
        u64 c_K;
    };
    for (const OrdCase oc : {OrdCase{-1, 1, 3, 7}, OrdCase{+1, 1, 3, 7}, OrdCase{-1, 2, 3, 11}}) {
        SeqParams sp;
        sp.p = p;
        sp.k = k;
        sp.n_max = 3;
        sp.a_p = oc.a_p;
        sp.split = oc.split;
        sp.u_K = oc.u_K;
        PointSequence seq = generate_sequence(sp, 55, oc.c_K);
        LFunctionTower t = build_tower(seq, 3);
        SpecializeResult r = specialize(t, Character{0}, Eps::none);
        const u64 a = t.alpha->value();
        u64 expected;
        if (oc.split == -1) {
            // u_K^{-1} (1 - alpha^2) c_K
            expected = mulmod(modinv(oc.u_K, pk),
                              mulmod(submod(1, mulmod(a, a, pk), pk), oc.c_K, pk), pk);
        } else {
            // -u_K^{-1} (1 - alpha)^2 c_K
            u64 d = submod(1, a, pk);
            expected = mulmod(modinv(oc.u_K, pk), mulmod(mulmod(d, d, pk), oc.c_K, pk), pk);
            expected = expected == 0 ? 0 : pk - expected;
        }
        bool eq = cyclo_int(r.value) == expected;
        ok = ok && eq;
        tr << "C5 ordinary split=" << oc.split << " u_K=" << oc.u_K << " value="
           << cyclo_int(r.value) << " expected=" << expected << " " << eq << "\n";
    }

    // supersingular non-exceptional: inert eps = -, trivial character value
    // equals c_K up to a unit
    {
        SeqParams sp;
        sp.p = p;
        sp.k = k;
        sp.n_max = 3;
        sp.a_p = 0;
        sp.split = -1;
        sp.u_K = 1;
        const u64 c_K = 7;
        PointSequence seq = generate_sequence(sp, 77, c_K);
        LFunctionTower t = build_tower(seq, 3);
        SpecializeResult r = specialize(t, Character{0}, Eps::minus);
        const u64 value = cyclo_int(r.value);
        bool val_eq = r.t.is_finite() && r.t.value == 0;  // v_p(c_K) = 0
        bool unit_ok = false;
        u64 unit = 0;
        if (value % p != 0) {
            unit = mulmod(value, modinv(c_K, pk), pk);
            unit_ok = unit % p != 0 && mulmod(unit, c_K, pk) == value;
        }
        ok = ok && val_eq && unit_ok && !r.exceptional;
        tr << "C5 ss inert eps=- value=" << value << " unit=" << unit << " " << val_eq
           << unit_ok << "\n";

        // exceptional report: theta_0 vanishes, and the trivial character is
        // outside Xi_p^+
        bool theta0_zero = t.theta[0].is_zero();
        bool rejected = false;
        try {
            specialize(t, Character{0}, Eps::plus);
        } catch (const SignClassMismatch&) {
            rejected = true;
        }
        ok = ok && theta0_zero && rejected;
        tr << "C5 exceptional theta0=" << theta0_zero << " trivial-rejected=" << rejected << "\n";
    }
    detail = "trivial-character values: ordinary exact, supersingular up to verified unit";
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool crit6_valuation_engine(std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    const unsigned k = 3;
    for (u64 p : {5ULL, 7ULL}) {
        for (unsigned n_chi = 1; n_chi <= 3; ++n_chi) {
            for (unsigned m = 1; m <= n_chi; ++m) {
                const IwasawaElement& phi = omega_element(OmegaKind::cyclo(m), n_chi, p, k);
                Valuation v = ord_pi(evaluate_character(phi, n_chi), k);
                bool good;
                if (m < n_chi) {
                    const long expect = static_cast<long>(checked_pow(p, m) - checked_pow(p, m - 1));
                    good = v.is_finite() && v.value == expect;
                } else {
                    const long cap = static_cast<long>(k * cyclotomic_degree(p, n_chi));
                    good = !v.is_finite() && v.value == cap;
                }
                ok = ok && good;
                tr << "C6 p=" << p << " nchi=" << n_chi << " m=" << m << " v=" << v.str() << " "
                   << good << "\n";
            }
        }
    }
    detail = "ord_chi(Phi_{p^m}) closed form vs resultant oracle, p in {5,7}, n_chi<=3";
    return ok;
}

// ---------------------------------------------------------------- criterion 7

bool crit7_shift_invariance(const Corpus& c, std::ostringstream& tr, std::string& detail) {
    std::vector<bool> results(c.ss.size() + c.ord.size(), false);
    parallel_for(c.ss.size(), [&](std::size_t i) {
        const PointSequence& seq = c.ss[i];
        Rng rng(777000 + i);
        bool good = true;
        for (int s = 0; s < 20 && good; ++s) {
            const i64 a = static_cast<i64>(1 + rng.below(checked_pow(seq.p, kCorpusDepth) - 1));
            PointSequence sh = galois_shift(seq, a);
            for (unsigned n = 0; n <= kCorpusDepth && good; ++n) {
                IwasawaElement th = theta_supersingular(sh, n);
                // covariance: theta(shifted) = gamma^a theta
                good = good && th == c.ss_towers[i].theta[n].rotated(a);
                const Eps eps = (n % 2 == 0) ? Eps::plus : Eps::minus;
                const auto& cached =
                    eps == Eps::plus ? c.ss_lp_plus[i][n] : c.ss_lp_minus[i][n];
                if (!cached) continue;
                IwasawaElement x = extract_signed(th, n, eps, sh.split);
                IwasawaElement prod = x.mul(x.involution());
                OmegaKind qk = eps == Eps::plus ? OmegaKind::plus(n, sh.split == 1 ? 1 : 0)
                                                : OmegaKind::minus(n);
                IwasawaElement lp =
                    reduce_mod_poly(prod, omega_poly(omega_factors(qk), sh.p, sh.k));
                good = good && lp == *cached;
            }
        }
        results[i] = good;
    });
    parallel_for(c.ord.size(), [&](std::size_t i) {
        const PointSequence& seq = c.ord[i];
        const auto& t = c.ord_towers[i];
        Rng rng(888000 + i);
        bool good = true;
        for (int s = 0; s < 20 && good; ++s) {
            const i64 a = static_cast<i64>(1 + rng.below(checked_pow(seq.p, kCorpusDepth) - 1));
            PointSequence sh = galois_shift(seq, a);
            for (unsigned n = 1; n <= kCorpusDepth && good; ++n) {
                IwasawaElement th = theta_ordinary(sh, n, *t.alpha);
                good = good && th == t.theta[n].rotated(a);
                IwasawaElement lp = th.mul(th.involution());
                good = good && lp == *c.ord_lp[i][n];
            }
        }
        results[c.ss.size() + i] = good;
    });
    bool ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        ok = ok && results[i];
        if (!results[i]) tr << "C7 fail idx=" << i << "\n";
    }
    tr << "C7 done " << ok << "\n";
    detail = "L_p per level exactly invariant under 20 random shifts per corpus element";
    return ok;
}

// ---------------------------------------------------------------- criterion 8

bool crit8_corrections(std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    const unsigned k = 3;
    for (u64 p : {5ULL, 7ULL}) {
        for (unsigned n_chi = 1; n_chi <= 3; ++n_chi) {
            const Eps eps = (n_chi % 2 == 0) ? Eps::plus : Eps::minus;
            for (int split : {-1, +1}) {
                bool agree = cross_check_correction(n_chi, eps, split, p, k);
                long corr = correction_term(n_chi, eps, split, p);
                ok = ok && agree;
                tr << "C8 p=" << p << " nchi=" << n_chi << " split=" << split
                   << " corr=" << corr << " " << agree << "\n";
            }
        }
    }
    detail = "closed-form corrections vs evaluated omega elements on the full grid";
    return ok;
}

// ---------------------------------------------------------------- criterion 9

i64 oracle_a_ell(const WeierstrassCurve& c, u64 ell) {
    i64 count = 0;
    auto md = [&](i64 v) {
        i64 r = v % static_cast<i64>(ell);
        return r < 0 ? r + static_cast<i64>(ell) : r;
    };
    for (i64 x = 0; x < static_cast<i64>(ell); ++x)
        for (i64 y = 0; y < static_cast<i64>(ell); ++y) {
            i64 lhs = md(y * y + c.a1 * x * y + c.a3 * y);
            i64 rhs = md(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
            if (lhs == rhs) ++count;
        }
    return static_cast<i64>(ell) - count;  // ell + 1 - (count + 1)
}

int oracle_inert(i64 D, u64 ell) {
    if (ell == 2) {
        i64 r = ((D % 8) + 8) % 8;
        if (r == 1) return +1;
        if (r == 5) return -1;
        return 0;
    }
    i64 d = ((D % static_cast<i64>(ell)) + static_cast<i64>(ell)) % static_cast<i64>(ell);
    if (d == 0) return 0;
    u64 e = powmod(static_cast<u64>(d), (ell - 1) / 2, ell);
    return e == 1 ? +1 : -1;
}

bool crit9_admissible(std::ostringstream& tr, std::string& detail) {
    bool ok = true;
    struct Fixture {
        WeierstrassCurve c;
        u64 N;
        u64 p;
        i64 D;
    };
    const WeierstrassCurve c11{0, -1, 1, 0, 0};
    const WeierstrassCurve c37{0, 0, 1, -1, 0};
    const std::vector<Fixture> fixtures = {
        {c37, 37, 5, -11}, {c37, 37, 5, -8}, {c11, 11, 7, -8}, {c11, 11, 7, -19}};
    bool any_nonempty = false;
    for (const auto& fx : fixtures) {
        CurveContext ctx = CurveContext::build(fx.c, fx.N, fx.D, fx.p);
        for (unsigned k = 1; k <= 2; ++k) {
            std::vector<u64> fast = enumerate_admissible(ctx, k, 500);
            // independent one-pass oracle, recomputing everything
            std::vector<u64> slow;
            const u64 pk = checked_pow(fx.p, k);
            for (u64 ell = 2; ell <= 500; ++ell) {
                if (!is_prime_u64(ell)) continue;
                if (fx.N % ell == 0 || ell == fx.p) continue;
                if (((ell % fx.p) * (ell % fx.p)) % fx.p == 1) continue;
                i64 a = oracle_a_ell(fx.c, ell);
                i64 diff = (a * a - static_cast<i64>((ell + 1) * (ell + 1))) %
                           static_cast<i64>(pk);
                if (diff != 0) continue;
                if (oracle_inert(fx.D, ell) != -1) continue;
                slow.push_back(ell);
            }
            bool eq = fast == slow;
            ok = ok && eq;
            if (!fast.empty()) any_nonempty = true;
            tr << "C9 N=" << fx.N << " p=" << fx.p << " D=" << fx.D << " k=" << k << " |L|="
               << fast.size() << " " << eq << "\n";
        }
    }
    ok = ok && any_nonempty;
    detail = "two curve fixtures x two discriminants, oracle-matched, nonempty list found";
    return ok;
}

// ------------------------------------------------------------------ the suite

struct Pass {
    std::vector<CriterionResult> results;
    std::string transcript;
};

Pass run_pass() {
    Pass pass;
    std::ostringstream tr;
    Corpus corpus = build_corpus();
    // fingerprint the corpus artifacts so reproducibility covers them too
    tr << "corpus ss0 " << io::tower_to_json(corpus.ss_towers[0]).dump() << "\n";
    tr << "corpus hash ";
    {
        std::ostringstream all;
        for (const auto& t : corpus.ss_towers) all << io::tower_to_json(t).dump();
        for (const auto& t : corpus.ord_towers) all << io::tower_to_json(t).dump();
        tr << fnv1a(all.str()) << "\n";
    }

    struct Entry {
        int id;
        const char* name;
        double budget;  // seconds; 0 = no stated budget
        std::function<bool(std::ostringstream&, std::string&)> fn;
    };
    const std::vector<Entry> entries = {
        {1, "omega factorization", 5.0,
         [&](std::ostringstream& t, std::string& d) { return crit1_omega_factorization(t, d); }},
        {2, "signed quotient bijections", 60.0,
         [&](std::ostringstream& t, std::string& d) { return crit2_divlemma(t, d); }},
        {3, "supersingular divisibility + recursion", 120.0,
         [&](std::ostringstream& t, std::string& d) {
             return crit3_divisibility_recursion(corpus, t, d);
         }},
        {4, "norm compatibility", 0.0,
         [&](std::ostringstream& t, std::string& d) { return crit4_norm_compat(corpus, t, d); }},
        {5, "trivial-character interpolation", 0.0,
         [&](std::ostringstream& t, std::string& d) { return crit5_interpolation(t, d); }},
        {6, "valuation engine", 30.0,
         [&](std::ostringstream& t, std::string& d) { return crit6_valuation_engine(t, d); }},
        {7, "shift invariance", 0.0,
         [&](std::ostringstream& t, std::string& d) {
             return crit7_shift_invariance(corpus, t, d);
         }},
        {8, "correction cross-check", 0.0,
         [&](std::ostringstream& t, std::string& d) { return crit8_corrections(t, d); }},
        {9, "admissible primes", 0.0,
         [&](std::ostringstream& t, std::string& d) { return crit9_admissible(t, d); }},
    };

    for (const auto& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.pass = e.fn(tr, r.detail);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
            tr << "C" << e.id << " exception " << ex.what() << "\n";
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.budget > 0 && r.seconds >= e.budget) {
            r.pass = false;
            r.detail += " [runtime budget " + std::to_string(e.budget) + "s exceeded]";
        }
        pass.results.push_back(std::move(r));
    }
    pass.transcript = tr.str();
    return pass;
}

}  // namespace

SuiteResult run_suite(std::ostream& out) {
    SuiteResult suite;
    Pass first = run_pass();
    for (const auto& r : first.results) {
        out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " ("
            << r.detail << ")\n";
        suite.results.push_back(r);
        suite.all_pass = suite.all_pass && r.pass;
    }
    Pass second = run_pass();
    CriterionResult det;
    det.id = 10;
    det.name = "determinism";
    det.pass = first.transcript == second.transcript;
    for (const auto& r : second.results) det.pass = det.pass && r.pass;
    det.detail = "two consecutive full runs, transcripts byte-identical (fnv64 " +
                 std::to_string(fnv1a(first.transcript)) + ")";
    out << (det.pass ? "PASS" : "FAIL") << "  criterion 10: " << det.name << " (" << det.detail
        << ")\n";
    suite.results.push_back(det);
    suite.all_pass = suite.all_pass && det.pass;
    return suite;
}

}  // namespace iwa::acceptance
