#include "iwa/cyclotomic.hpp"

#include <algorithm>

namespace iwa {

u64 cyclotomic_degree(u64 p, unsigned n) {
    if (n == 0) return 1;
    u64 q = checked_pow(p, n - 1);
    return q * (p - 1);
}

CyclotomicValue::CyclotomicValue(u64 p, unsigned n_chi, std::vector<mpz_class> coeffs,
                                 std::optional<mpz_class> work_modulus)
    : p_(p), n_chi_(n_chi), coeffs_(std::move(coeffs)), work_modulus_(std::move(work_modulus)) {
    if (p < 5 || !is_prime_u64(p)) throw Error("p must be a prime >= 5");
    const u64 deg = cyclotomic_degree(p, n_chi);
    if (coeffs_.size() != deg)
        throw Error("coefficient length must equal phi(p^n_chi) = " + std::to_string(deg));
}

CyclotomicValue CyclotomicValue::integer(u64 p, const mpz_class& value) {
    return CyclotomicValue(p, 0, {value});
}

CyclotomicValue CyclotomicValue::zeta_power(u64 p, unsigned n_chi, u64 e) {
    const u64 deg = cyclotomic_degree(p, n_chi);
    std::vector<mpz_class> c(deg, mpz_class(0));
    if (n_chi == 0) {
        c[0] = 1;
        return CyclotomicValue(p, 0, std::move(c));
    }
    const u64 order = checked_pow(p, n_chi);
    e %= order;
    if (e < deg) {
        c[e] = 1;
        return CyclotomicValue(p, n_chi, std::move(c));
    }
    // zeta^e = -sum_{i<p-1} zeta^{a + i p^{n-1}} where e = a + (p-1) p^{n-1}
    const u64 q = order / p;  // p^{n_chi - 1}
    const u64 a = e - (p - 1) * q;
    for (u64 i = 0; i + 1 < p; ++i) c[a + i * q] = -1;
    return CyclotomicValue(p, n_chi, std::move(c));
}

void CyclotomicValue::require_same_field(const CyclotomicValue& o) const {
    if (p_ != o.p_ || n_chi_ != o.n_chi_)
        throw ModulusMismatch("cyclotomic values live in different fields");
}

namespace {
std::optional<mpz_class> merge_modulus(const std::optional<mpz_class>& a,
                                       const std::optional<mpz_class>& b) {
    if (!a) return b;
    if (!b) return a;
    return a <= b ? a : b;
}
}  // namespace

CyclotomicValue CyclotomicValue::add(const CyclotomicValue& o) const {
    require_same_field(o);
    std::vector<mpz_class> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CyclotomicValue(p_, n_chi_, std::move(c), merge_modulus(work_modulus_, o.work_modulus_));
}

CyclotomicValue CyclotomicValue::sub(const CyclotomicValue& o) const {
    require_same_field(o);
    std::vector<mpz_class> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return CyclotomicValue(p_, n_chi_, std::move(c), merge_modulus(work_modulus_, o.work_modulus_));
}

CyclotomicValue CyclotomicValue::mul(const CyclotomicValue& o) const {
    require_same_field(o);
    if (n_chi_ == 0) {
        return CyclotomicValue(p_, 0, {coeffs_[0] * o.coeffs_[0]},
                               merge_modulus(work_modulus_, o.work_modulus_));
    }
    const u64 deg = degree();
    const u64 order = checked_pow(p_, n_chi_);
    const u64 q = order / p_;
    // accumulate by exponent mod p^n, then fold [deg, order) down via
    // zeta^{(p-1)q} = -(1 + zeta^q + ... + zeta^{(p-2)q})
    std::vector<mpz_class> acc(order, mpz_class(0));
    for (u64 i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (u64 j = 0; j < deg; ++j) {
            if (o.coeffs_[j] == 0) continue;
            u64 e = i + j;
            if (e >= order) e -= order;
            acc[e] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<mpz_class> c(deg, mpz_class(0));
    for (u64 e = 0; e < deg; ++e) c[e] = acc[e];
    for (u64 e = deg; e < order; ++e) {
        if (acc[e] == 0) continue;
        const u64 base = e - (p_ - 1) * q;  // e = base + (p-1)q, base < q
        for (u64 i = 0; i + 1 < p_; ++i) c[base + i * q] -= acc[e];
    }
    return CyclotomicValue(p_, n_chi_, std::move(c), merge_modulus(work_modulus_, o.work_modulus_));
}

CyclotomicValue CyclotomicValue::reduced_mod(const mpz_class& modulus) const {
    std::vector<mpz_class> c(coeffs_);
    for (auto& x : c) {
        x %= modulus;
        if (x < 0) x += modulus;
    }
    return CyclotomicValue(p_, n_chi_, std::move(c), modulus);
}

bool CyclotomicValue::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& x) { return x == 0; });
}

bool CyclotomicValue::operator==(const CyclotomicValue& o) const {
    return p_ == o.p_ && n_chi_ == o.n_chi_ && coeffs_ == o.coeffs_;
}

namespace {

int degree_of(const std::vector<mpz_class>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

std::vector<mpz_class> trimmed(const std::vector<mpz_class>& f) {
    int d = degree_of(f);
    return std::vector<mpz_class>(f.begin(), f.begin() + (d + 1));
}

// Remainder of lc(b)^(deg a - deg b + 1) * a modulo b (pseudo-division).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int da = degree_of(a), db = degree_of(b);
    const mpz_class& lb = b[static_cast<std::size_t>(db)];
    int e = da - db + 1;
    while (da >= db) {
        mpz_class top = a[static_cast<std::size_t>(da)];
        for (int i = 0; i <= da; ++i) a[static_cast<std::size_t>(i)] *= lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= top * b[static_cast<std::size_t>(i)];
        --e;
        da = degree_of(a);
        a.resize(static_cast<std::size_t>(std::max(da + 1, 1)));
    }
    // normalize so the total multiplier is exactly lb^(original e)
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(e, 0)));
    for (auto& c : a) c *= scale;
    return a;
}

}  // namespace

mpz_class resultant(const std::vector<mpz_class>& a_in, const std::vector<mpz_class>& b_in) {
    std::vector<mpz_class> a = trimmed(a_in), b = trimmed(b_in);
    int da = degree_of(a), db = degree_of(b);
    if (da < 0 || db < 0) return 0;

    mpz_class sign = 1;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) sign = -1;
    }

    // subresultant PRS (Cohen, Alg. 3.3.7)
    mpz_class g = 1, h = 1;
    while (true) {
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        std::vector<mpz_class> r = pseudo_rem(a, b);
        int dr = degree_of(r);
        if (dr < 0) return 0;  // common factor: resultant vanishes
        a = b;
        da = db;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class denom = g * hd;
        b.assign(r.begin(), r.begin() + dr + 1);
        for (auto& c : b) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
            c = q;
        }
        db = dr;
        g = a[static_cast<std::size_t>(da)];
        if (delta >= 1) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hd1;
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
        if (db == 0) {
            // h^(1 - da) * lc(b)^da, adjusted by accumulated h
            mpz_class num;
            mpz_pow_ui(num.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(da));
            if (da >= 1) {
                mpz_class hd2;
                mpz_pow_ui(hd2.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(da - 1));
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), hd2.get_mpz_t());
                num = q;
            }
            return sign * num;
        }
    }
}

namespace {

/// Dense coefficients of the p^n-th cyclotomic polynomial (n >= 1).
std::vector<mpz_class> cyclotomic_poly(u64 p, unsigned n) {
    const u64 q = checked_pow(p, n - 1);
    std::vector<mpz_class> f(q * (p - 1) + 1, mpz_class(0));
    for (u64 i = 0; i < p; ++i) f[i * q] = 1;
    return f;
}

}  // namespace

mpz_class cyclotomic_norm(const CyclotomicValue& x) {
    if (x.n_chi() == 0) return x.coeffs()[0];
    std::vector<mpz_class> f = x.coeffs();
    if (degree_of(f) < 0) return 0;
    return resultant(cyclotomic_poly(x.p(), x.n_chi()), f);
}

Valuation ord_pi(const CyclotomicValue& x, unsigned k_cap) {
    const u64 p = x.p();
    const long phi = static_cast<long>(cyclotomic_degree(p, x.n_chi()));
    const long cap_bound = static_cast<long>(k_cap) * phi;

    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k_cap);
    CyclotomicValue lifted = x.reduced_mod(pk);
    if (lifted.is_zero()) return Valuation::cap(cap_bound);

    mpz_class norm = cyclotomic_norm(lifted);
    if (norm == 0) throw Error("nonzero lift with zero norm");
    mpz_class abs_norm = abs(norm);
    mpz_class rem;
    unsigned long v = mpz_remove(rem.get_mpz_t(), abs_norm.get_mpz_t(),
                                 mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    if (static_cast<long>(v) >= cap_bound)
        throw Error("valuation reached the precision cap on a nonzero lift");
    return Valuation::finite(static_cast<long>(v));
}

}  // namespace iwa
