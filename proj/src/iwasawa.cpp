#include "iwa/iwasawa.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "iwa/kernels.hpp"

namespace iwa {

IwasawaElement::IwasawaElement(u64 p, unsigned k, unsigned level)
    : p_(p), k_(k), level_(level), modulus_(checked_pow(p, k)),
      coeffs_(checked_pow(p, level), 0) {
    if (p < 5 || !is_prime_u64(p)) throw Error("p must be a prime >= 5");
    if (k < 1) throw Error("precision exponent k must be >= 1");
}

IwasawaElement::IwasawaElement(u64 p, unsigned k, unsigned level, std::vector<u64> coeffs)
    : IwasawaElement(p, k, level) {
    if (coeffs.size() != coeffs_.size())
        throw Error("coefficient length must be p^level");
    for (auto& c : coeffs) c %= modulus_;
    coeffs_ = std::move(coeffs);
}

IwasawaElement IwasawaElement::one(u64 p, unsigned k, unsigned level) {
    return monomial(p, k, level, 0, 1);
}

IwasawaElement IwasawaElement::monomial(u64 p, unsigned k, unsigned level, u64 j, u64 c) {
    IwasawaElement e(p, k, level);
    e.coeffs_[j % e.length()] = c % e.modulus_;
    return e;
}

void IwasawaElement::require_same_ring(const IwasawaElement& o) const {
    if (p_ != o.p_ || k_ != o.k_ || level_ != o.level_)
        throw ContextMismatch("elements live in different group algebras");
}

IwasawaElement IwasawaElement::add(const IwasawaElement& o) const {
    require_same_ring(o);
    IwasawaElement r(p_, k_, level_);
    kernels::add_mod(r.coeffs_.data(), coeffs_.data(), o.coeffs_.data(), coeffs_.size(), modulus_);
    return r;
}

IwasawaElement IwasawaElement::sub(const IwasawaElement& o) const {
    require_same_ring(o);
    IwasawaElement r(p_, k_, level_);
    kernels::sub_mod(r.coeffs_.data(), coeffs_.data(), o.coeffs_.data(), coeffs_.size(), modulus_);
    return r;
}

IwasawaElement IwasawaElement::mul(const IwasawaElement& o) const {
    require_same_ring(o);
    IwasawaElement r(p_, k_, level_);
    kernels::cyclic_convolve(r.coeffs_.data(), coeffs_.data(), o.coeffs_.data(),
                             coeffs_.size(), modulus_);
    return r;
}

IwasawaElement IwasawaElement::neg() const {
    IwasawaElement r(p_, k_, level_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        r.coeffs_[j] = coeffs_[j] == 0 ? 0 : modulus_ - coeffs_[j];
    return r;
}

IwasawaElement IwasawaElement::scale(u64 s) const {
    IwasawaElement r(p_, k_, level_);
    kernels::scale_mod(r.coeffs_.data(), coeffs_.data(), s % modulus_, coeffs_.size(), modulus_);
    return r;
}

IwasawaElement IwasawaElement::involution() const {
    IwasawaElement r(p_, k_, level_);
    const u64 len = length();
    r.coeffs_[0] = coeffs_[0];
    for (u64 j = 1; j < len; ++j) r.coeffs_[len - j] = coeffs_[j];
    return r;
}

IwasawaElement IwasawaElement::project_to_level(unsigned lower) const {
    if (lower > level_) throw Error("projection target must not exceed the level");
    IwasawaElement r(p_, k_, lower);
    const u64 lo_len = r.length();
    for (u64 j = 0; j < length(); ++j)
        r.coeffs_[j % lo_len] = addmod(r.coeffs_[j % lo_len], coeffs_[j], modulus_);
    return r;
}

IwasawaElement IwasawaElement::lifted_to_level(unsigned higher) const {
    if (higher < level_) throw Error("lift target must not be below the level");
    IwasawaElement r(p_, k_, higher);
    for (u64 j = 0; j < length(); ++j) r.coeffs_[j] = coeffs_[j];
    return r;
}

IwasawaElement IwasawaElement::reduce_precision(unsigned k_target) const {
    if (k_target > k_) throw Error("cannot raise precision by reduction");
    const u64 m = checked_pow(p_, k_target);
    IwasawaElement r(p_, k_target, level_);
    for (u64 j = 0; j < length(); ++j) r.coeffs_[j] = coeffs_[j] % m;
    return r;
}

IwasawaElement IwasawaElement::rotated(i64 shift) const {
    const i64 len = static_cast<i64>(length());
    i64 s = ((shift % len) + len) % len;
    IwasawaElement r(p_, k_, level_);
    for (i64 j = 0; j < len; ++j) r.coeffs_[static_cast<u64>((j + s) % len)] = coeffs_[static_cast<u64>(j)];
    return r;
}

u64 IwasawaElement::augmentation() const {
    u64 s = 0;
    for (u64 c : coeffs_) s = addmod(s, c, modulus_);
    return s;
}

bool IwasawaElement::is_zero() const {
    for (u64 c : coeffs_)
        if (c) return false;
    return true;
}

long IwasawaElement::poly_degree() const {
    for (long j = static_cast<long>(length()) - 1; j >= 0; --j)
        if (coeffs_[static_cast<u64>(j)]) return j;
    return -1;
}

u64 OmegaFactors::degree(u64 p) const {
    u64 d = gamma_minus_one;
    for (unsigned m : cyclo) d += cyclotomic_degree(p, m);
    return d;
}

OmegaFactors omega_factors(const OmegaKind& kind) {
    OmegaFactors f;
    const unsigned n = kind.index;
    switch (kind.tag) {
        case OmegaTag::omega_n:
            f.gamma_minus_one = 1;
            for (unsigned m = 1; m <= n; ++m) f.cyclo.push_back(m);
            break;
        case OmegaTag::omega_plus:
            if (kind.nu_p != 0 && kind.nu_p != 1) throw Error("nu_p must be 0 or 1");
            f.gamma_minus_one = static_cast<unsigned>(kind.nu_p);
            for (unsigned m = 2; m <= n; m += 2) f.cyclo.push_back(m);
            break;
        case OmegaTag::omega_minus:
            f.gamma_minus_one = 1;
            for (unsigned m = 1; m <= n; m += 2) f.cyclo.push_back(m);
            break;
        case OmegaTag::omega_tilde_plus:
            for (unsigned m = 2; m <= n; m += 2) f.cyclo.push_back(m);
            break;
        case OmegaTag::omega_tilde_minus:
            if (n == 0) {
                f.gamma_minus_one = 1;  // the one boundary case with a gamma factor
            } else {
                for (unsigned m = 1; m <= n; m += 2) f.cyclo.push_back(m);
            }
            break;
        case OmegaTag::cyclo_m:
            if (n < 1) throw IndexOutOfRange("cyclotomic index must be >= 1");
            f.cyclo.push_back(n);
            break;
    }
    return f;
}

namespace {

void require_factors_within_level(const OmegaFactors& f, unsigned level) {
    for (unsigned m : f.cyclo)
        if (m > level)
            throw IndexOutOfRange("factor Phi_{p^" + std::to_string(m) +
                                  "} exceeds level " + std::to_string(level));
}

std::vector<u64> poly_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 mod) {
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        kernels::add_scaled_mod(r.data() + i, b.data(), a[i], b.size(), mod);
    }
    return r;
}

}  // namespace

std::vector<u64> omega_poly(const OmegaFactors& f, u64 p, unsigned k) {
    const u64 mod = checked_pow(p, k);
    std::vector<u64> r{1 % mod};
    for (unsigned i = 0; i < f.gamma_minus_one; ++i)
        r = poly_mul(r, {mod - 1, 1}, mod);
    for (unsigned m : f.cyclo) {
        const u64 q = checked_pow(p, m - 1);
        std::vector<u64> phi(q * (p - 1) + 1, 0);
        for (u64 i = 0; i < p; ++i) phi[i * q] = 1;
        r = poly_mul(r, phi, mod);
    }
    return r;
}

namespace {

using OmegaKey = std::tuple<int, unsigned, int, unsigned, u64, unsigned>;
std::map<OmegaKey, IwasawaElement> omega_cache;         // guarded by omega_cache_mutex
std::shared_mutex omega_cache_mutex;

IwasawaElement build_omega(const OmegaKind& kind, unsigned level, u64 p, unsigned k) {
    const OmegaFactors f = omega_factors(kind);
    require_factors_within_level(f, level);
    IwasawaElement r = IwasawaElement::one(p, k, level);
    const u64 mod = r.modulus();
    for (unsigned i = 0; i < f.gamma_minus_one; ++i) {
        std::vector<u64> c(r.length(), 0);
        c[0] = mod - 1;
        c[1 % r.length()] = addmod(c[1 % r.length()], 1, mod);
        r = r.mul(IwasawaElement(p, k, level, std::move(c)));
    }
    for (unsigned m : f.cyclo) {
        const u64 q = checked_pow(p, m - 1);
        std::vector<u64> c(r.length(), 0);
        for (u64 i = 0; i < p; ++i) {
            u64 idx = (i * q) % r.length();
            c[idx] = addmod(c[idx], 1, mod);
        }
        r = r.mul(IwasawaElement(p, k, level, std::move(c)));
    }
    return r;
}

}  // namespace

const IwasawaElement& omega_element(const OmegaKind& kind, unsigned level, u64 p, unsigned k) {
    OmegaKey key{static_cast<int>(kind.tag), kind.index, kind.nu_p, level, p, k};
    {
        std::shared_lock lock(omega_cache_mutex);
        auto it = omega_cache.find(key);
        if (it != omega_cache.end()) return it->second;
    }
    IwasawaElement built = build_omega(kind, level, p, k);
    std::unique_lock lock(omega_cache_mutex);
    return omega_cache.emplace(key, std::move(built)).first->second;
}

IwasawaElement multiply_by_factors(const IwasawaElement& x, const OmegaFactors& f) {
    require_factors_within_level(f, x.level());
    const u64 len = x.length();
    const u64 mod = x.modulus();
    std::vector<u64> cur = x.coeffs();
    std::vector<u64> next(len);
    for (unsigned i = 0; i < f.gamma_minus_one; ++i) {
        // (gamma - 1) x: coefficient j becomes x_{j-1} - x_j
        for (u64 j = 0; j < len; ++j)
            next[j] = submod(cur[(j + len - 1) % len], cur[j], mod);
        std::swap(cur, next);
    }
    for (unsigned m : f.cyclo) {
        const u64 stride = checked_pow(x.p(), m - 1) % len;
        for (u64 j = 0; j < len; ++j) {
            u64 s = 0, idx = j;
            for (u64 i = 0; i < x.p(); ++i) {
                s = addmod(s, cur[idx], mod);
                idx = idx >= stride ? idx - stride : idx + len - stride;
            }
            next[j] = s;
        }
        std::swap(cur, next);
    }
    return IwasawaElement(x.p(), x.k(), x.level(), std::move(cur));
}

IwasawaElement multiply_by_omega(const IwasawaElement& x, const OmegaKind& kind) {
    return multiply_by_factors(x, omega_factors(kind));
}

IwasawaElement reduce_mod_poly(const IwasawaElement& x, const std::vector<u64>& monic) {
    const u64 mod = x.modulus();
    if (monic.empty() || monic.back() % mod != 1)
        throw Error("reduction polynomial must be monic");
    const std::size_t D = monic.size() - 1;
    std::vector<u64> r = x.coeffs();
    for (std::size_t i = r.size(); i-- > D;) {
        const u64 c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t t = 0; t < D; ++t)
            r[i - D + t] = submod(r[i - D + t], mulmod(c, monic[t], mod), mod);
    }
    return IwasawaElement(x.p(), x.k(), x.level(), std::move(r));
}

CyclotomicValue evaluate_character(const IwasawaElement& a, unsigned n_chi, u64 zeta_exponent) {
    if (n_chi > a.level())
        throw ConductorExceedsLevel("character conductor exponent " + std::to_string(n_chi) +
                                    " exceeds level " + std::to_string(a.level()));
    const u64 p = a.p();
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), a.k());

    if (n_chi == 0) {
        mpz_class s = 0;
        for (u64 c : a.coeffs()) s += c;
        return CyclotomicValue(p, 0, {s}, pk);
    }

    const u64 order = checked_pow(p, n_chi);
    const u64 deg = cyclotomic_degree(p, n_chi);
    const u64 q = order / p;
    // exponent sums gamma^j -> zeta^{e j}, then fold [deg, order) by the
    // cyclotomic relation
    std::vector<mpz_class> byexp(order, mpz_class(0));
    for (u64 j = 0; j < a.length(); ++j) {
        if (a.coeff(j) == 0) continue;
        byexp[mulmod(j % order, zeta_exponent % order, order)] += a.coeff(j);
    }
    std::vector<mpz_class> c(deg, mpz_class(0));
    for (u64 e = 0; e < deg; ++e) c[e] = byexp[e];
    for (u64 e = deg; e < order; ++e) {
        if (byexp[e] == 0) continue;
        const u64 base = e - (p - 1) * q;
        for (u64 i = 0; i + 1 < p; ++i) c[base + i * q] -= byexp[e];
    }
    return CyclotomicValue(p, n_chi, std::move(c), pk);
}

namespace {

// Solve (gamma - 1) q = y by telescoping; y_j = q_{j-1} - q_j.
bool divide_by_gamma_minus_one(std::vector<u64>& y, u64 mod, long* obstruction) {
    const std::size_t P = y.size();
    std::vector<u64> q(P, 0);
    for (std::size_t j = 1; j < P; ++j) q[j] = submod(q[j - 1], y[j], mod);
    if (y[0] != q[P - 1]) {
        if (obstruction) *obstruction = 0;
        return false;
    }
    y = std::move(q);
    return true;
}

// Solve Phi_{p^m}(gamma) q = y. The factor acts independently on each of
// the p^{m-1} index strands; on a strand it is the width-p sliding-window
// sum, inverted through the recurrence q_t = q_{t-p} + (y_t - y_{t-1}).
bool divide_by_cyclo(std::vector<u64>& y, u64 p, unsigned m, u64 mod, long* obstruction) {
    const std::size_t P = y.size();
    const std::size_t stride = static_cast<std::size_t>(checked_pow(p, m - 1));
    const std::size_t Q = P / stride;  // caller guarantees m <= level, so p | Q

    std::vector<u64> ys(Q), q(Q), delta(Q);
    std::vector<u64> out(P);
    for (std::size_t a = 0; a < stride; ++a) {
        for (std::size_t t = 0; t < Q; ++t) ys[t] = y[a + stride * t];
        for (std::size_t t = 0; t < Q; ++t)
            delta[t] = submod(ys[t], ys[(t + Q - 1) % Q], mod);
        for (std::size_t t = 0; t < p && t < Q; ++t) q[t] = 0;
        for (std::size_t t = p; t < Q; ++t) q[t] = addmod(q[t - p], delta[t], mod);
        // wrap consistency per residue class mod p
        for (std::size_t c = 0; c < p; ++c) {
            if (addmod(q[Q - p + c], delta[c], mod) != 0) {
                if (obstruction) *obstruction = static_cast<long>(a + stride * c);
                return false;
            }
        }
        // pin the absolute level through one window equation
        u64 window = q[0];
        for (std::size_t i = 1; i < p; ++i) window = addmod(window, q[Q - i], mod);
        const u64 mu = submod(ys[0], window, mod);
        for (std::size_t t = 0; t < Q; t += p) q[t] = addmod(q[t], mu, mod);
        for (std::size_t t = 0; t < Q; ++t) out[a + stride * t] = q[t];
    }
    y = std::move(out);
    return true;
}

}  // namespace

std::optional<IwasawaElement> try_divide_exact(const IwasawaElement& x,
                                               const OmegaKind& divisor,
                                               long* obstruction) {
    const OmegaFactors f = omega_factors(divisor);
    require_factors_within_level(f, x.level());
    if (f.gamma_minus_one > 1) throw Error("divisor has a repeated gamma - 1 factor");

    std::vector<u64> cur = x.coeffs();
    const u64 mod = x.modulus();
    for (unsigned m : f.cyclo)
        if (!divide_by_cyclo(cur, x.p(), m, mod, obstruction)) return std::nullopt;
    if (f.gamma_minus_one)
        if (!divide_by_gamma_minus_one(cur, mod, obstruction)) return std::nullopt;

    // canonical representative modulo the complementary factor of omega_level
    OmegaFactors comp;
    comp.gamma_minus_one = 1 - f.gamma_minus_one;
    for (unsigned m = 1; m <= x.level(); ++m) {
        bool used = false;
        for (unsigned fm : f.cyclo) used |= (fm == m);
        if (!used) comp.cyclo.push_back(m);
    }
    IwasawaElement q(x.p(), x.k(), x.level(), std::move(cur));
    return reduce_mod_poly(q, omega_poly(comp, x.p(), x.k()));
}

IwasawaElement divide_exact(const IwasawaElement& x, const OmegaKind& divisor) {
    long obstruction = -1;
    auto q = try_divide_exact(x, divisor, &obstruction);
    if (!q)
        throw NotDivisible("element is not an exact multiple; first obstruction at coordinate " +
                               std::to_string(obstruction),
                           obstruction);
    return *q;
}

std::vector<u64> to_t_basis(const IwasawaElement& x) {
    const u64 len = x.length();
    const u64 mod = x.modulus();
    std::vector<u64> t(len, 0), row(len, 0);
    row[0] = 1;  // binomials C(j, .) built incrementally
    for (u64 j = 0; j < len; ++j) {
        if (j > 0)
            for (u64 i = j; i > 0; --i) row[i] = addmod(row[i], row[i - 1], mod);
        if (x.coeff(j))
            kernels::add_scaled_mod(t.data(), row.data(), x.coeff(j), j + 1, mod);
    }
    return t;
}

IwasawaElement from_t_basis(u64 p, unsigned k, unsigned level, const std::vector<u64>& t) {
    IwasawaElement r(p, k, level);
    const u64 len = r.length();
    if (t.size() != len) throw Error("T-basis vector must have length p^level");
    const u64 mod = r.modulus();
    std::vector<u64> acc(len, 0), pw(len, 0), next(len, 0);
    pw[0] = 1;
    for (u64 i = 0; i < len; ++i) {
        if (i > 0) {
            // pw <- pw * (X - 1), degree grows by one so no wrap occurs
            for (u64 j = 0; j <= i; ++j) {
                u64 lowered = j > 0 ? pw[j - 1] : 0;
                next[j] = submod(lowered, pw[j], mod);
            }
            std::copy(next.begin(), next.begin() + static_cast<long>(i) + 1, pw.begin());
        }
        if (t[i]) kernels::add_scaled_mod(acc.data(), pw.data(), t[i], i + 1, mod);
    }
    return IwasawaElement(p, k, level, std::move(acc));
}

}  // namespace iwa
