#include "iwa/linalg_zpk.hpp"

namespace iwa {

MatZpk mat_mul(const MatZpk& x, const MatZpk& y) {
    if (x.cols != y.rows || x.modulus != y.modulus) throw Error("matrix shape/modulus mismatch");
    MatZpk r(x.rows, y.cols, x.p, x.k);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t t = 0; t < x.cols; ++t) {
            const u64 v = x.at(i, t);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = addmod(r.at(i, j), mulmod(v, y.at(t, j), x.modulus), x.modulus);
        }
    return r;
}

std::vector<u64> mat_apply(const MatZpk& m, const std::vector<u64>& v) {
    if (v.size() != m.cols) throw Error("vector length mismatch");
    std::vector<u64> r(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        u64 s = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
            s = addmod(s, mulmod(m.at(i, j), v[j], m.modulus), m.modulus);
        r[i] = s;
    }
    return r;
}

namespace {

unsigned val_p(u64 x, u64 p, unsigned k) {
    if (x == 0) return k;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

MatZpk identity(std::size_t n, u64 p, unsigned k) {
    MatZpk m(n, n, p, k);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

}  // namespace

SmithZpk smith_form(const MatZpk& A_in) {
    MatZpk A = A_in;
    const u64 p = A.p, mod = A.modulus;
    const unsigned k = A.k;
    SmithZpk s;
    s.p = p;
    s.k = k;
    s.rows = A.rows;
    s.cols = A.cols;
    s.U = identity(A.rows, p, k);
    s.V = identity(A.cols, p, k);
    const std::size_t r = std::min(A.rows, A.cols);
    s.diag_exponents.assign(r, k);

    for (std::size_t t = 0; t < r; ++t) {
        // best remaining pivot: minimal p-valuation
        unsigned best_v = k + 1;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < A.rows; ++i)
            for (std::size_t j = t; j < A.cols; ++j) {
                unsigned v = val_p(A.at(i, j), p, k);
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best_v >= k) break;  // all remaining entries vanish

        // move pivot to (t, t)
        if (bi != t)
            for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(t, j), A.at(bi, j));
        if (bi != t)
            for (std::size_t j = 0; j < s.U.cols; ++j) std::swap(s.U.at(t, j), s.U.at(bi, j));
        if (bj != t)
            for (std::size_t i = 0; i < A.rows; ++i) std::swap(A.at(i, t), A.at(i, bj));
        if (bj != t)
            for (std::size_t i = 0; i < s.V.rows; ++i) std::swap(s.V.at(i, t), s.V.at(i, bj));

        // normalize pivot to exactly p^v
        const u64 pv = checked_pow(p, best_v);
        const u64 unit = A.at(t, t) / pv;
        const u64 uinv = modinv(unit, mod);
        for (std::size_t j = 0; j < A.cols; ++j) A.at(t, j) = mulmod(A.at(t, j), uinv, mod);
        for (std::size_t j = 0; j < s.U.cols; ++j) s.U.at(t, j) = mulmod(s.U.at(t, j), uinv, mod);

        // clear the pivot column with row operations
        for (std::size_t i = t + 1; i < A.rows; ++i) {
            const u64 e = A.at(i, t);
            if (e == 0) continue;
            const u64 mu = e / pv;  // exact: val(e) >= v by pivot minimality
            for (std::size_t j = 0; j < A.cols; ++j)
                A.at(i, j) = submod(A.at(i, j), mulmod(mu, A.at(t, j), mod), mod);
            for (std::size_t j = 0; j < s.U.cols; ++j)
                s.U.at(i, j) = submod(s.U.at(i, j), mulmod(mu, s.U.at(t, j), mod), mod);
        }
        // clear the pivot row with column operations
        for (std::size_t j = t + 1; j < A.cols; ++j) {
            const u64 e = A.at(t, j);
            if (e == 0) continue;
            const u64 mu = e / pv;
            for (std::size_t i = 0; i < A.rows; ++i)
                A.at(i, j) = submod(A.at(i, j), mulmod(mu, A.at(i, t), mod), mod);
            for (std::size_t i = 0; i < s.V.rows; ++i)
                s.V.at(i, j) = submod(s.V.at(i, j), mulmod(mu, s.V.at(i, t), mod), mod);
        }
        s.diag_exponents[t] = best_v;
    }
    return s;
}

unsigned long SmithZpk::kernel_size_exponent() const {
    unsigned long e = 0;
    for (unsigned d : diag_exponents) e += d;
    e += static_cast<unsigned long>(k) * (cols - diag_exponents.size());
    return e;
}

unsigned long SmithZpk::image_size_exponent() const {
    unsigned long e = 0;
    for (unsigned d : diag_exponents) e += k - d;
    return e;
}

std::vector<u64> sample_kernel(const SmithZpk& s, Rng& rng) {
    std::vector<u64> y(s.cols, 0);
    const u64 mod = checked_pow(s.p, s.k);
    for (std::size_t i = 0; i < s.cols; ++i) {
        unsigned e = i < s.diag_exponents.size() ? s.diag_exponents[i] : s.k;
        // y_i ranges over p^{k-e} * Z/p^k, i.e. p^e choices
        const u64 step = checked_pow(s.p, s.k - e);
        y[i] = mulmod(step % mod, rng.below(checked_pow(s.p, e)), mod);
    }
    return mat_apply(s.V, y);
}

}  // namespace iwa
