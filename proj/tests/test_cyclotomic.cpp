#include <doctest.h>

#include "iwa/cyclotomic.hpp"
#include "iwa/rng.hpp"

using namespace iwa;

namespace {

CyclotomicValue from_ints(u64 p, unsigned n, std::vector<long> v) {
    std::vector<mpz_class> c;
    for (long x : v) c.emplace_back(x);
    return CyclotomicValue(p, n, std::move(c));
}

// Sylvester-matrix resultant by fraction-free elimination: an independent
// oracle for the PRS implementation, fine for small degrees.
mpz_class sylvester_resultant(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    int da = -1, db = -1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) {
            da = i;
            break;
        }
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
        if (b[static_cast<std::size_t>(i)] != 0) {
            db = i;
            break;
        }
    if (da < 0 || db < 0) return 0;
    const int n = da + db;
    std::vector<std::vector<mpz_class>> M(static_cast<std::size_t>(n),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a[static_cast<std::size_t>(da - i)];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i)
            M[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + i)] = b[static_cast<std::size_t>(db - i)];
    // Bareiss fraction-free elimination
    mpz_class prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (M[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] == 0) {
            int swap_row = -1;
            for (int r = t + 1; r < n; ++r)
                if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(M[static_cast<std::size_t>(t)], M[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int r = t + 1; r < n; ++r)
            for (int c = t + 1; c < n; ++c) {
                mpz_class num = M[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] * M[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = q;
            }
        for (int r = t + 1; r < n; ++r) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] = 0;
        prev = M[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
    }
    return sign * M[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

}  // namespace

TEST_CASE("norm examples") {
    // zeta - 1 in Q(zeta_5)
    CHECK(cyclotomic_norm(from_ints(5, 1, {-1, 1, 0, 0})) == 5);
    // rational values
    CHECK(cyclotomic_norm(CyclotomicValue::integer(5, 7)) == 7);
    CHECK(cyclotomic_norm(from_ints(5, 1, {1, 0, 0, 0})) == 1);
    // norm of p in a degree-phi field
    mpz_class n5 = cyclotomic_norm(from_ints(5, 1, {5, 0, 0, 0}));
    CHECK(n5 == 625);
}

TEST_CASE("resultant PRS against the Sylvester oracle") {
    Rng rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        const int da = 1 + static_cast<int>(rng.below(6));
        const int db = 1 + static_cast<int>(rng.below(6));
        std::vector<mpz_class> a(static_cast<std::size_t>(da + 1)), b(static_cast<std::size_t>(db + 1));
        for (auto& c : a) c = static_cast<long>(rng.below(21)) - 10;
        for (auto& c : b) c = static_cast<long>(rng.below(21)) - 10;
        if (a.back() == 0) a.back() = 1;
        if (b.back() == 0) b.back() = 1;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("ord_pi examples") {
    CHECK(ord_pi(from_ints(5, 1, {-1, 1, 0, 0}), 3) == Valuation::finite(1));
    CHECK(ord_pi(from_ints(5, 1, {5, 0, 0, 0}), 3) == Valuation::finite(4));
    // Phi_5(zeta_25) = 1 + z^5 + z^10 + z^15 (z^20 folds into the basis)
    CyclotomicValue phi5_at_25 =
        CyclotomicValue::zeta_power(5, 2, 0)
            .add(CyclotomicValue::zeta_power(5, 2, 5))
            .add(CyclotomicValue::zeta_power(5, 2, 10))
            .add(CyclotomicValue::zeta_power(5, 2, 15))
            .add(CyclotomicValue::zeta_power(5, 2, 20));
    CHECK(ord_pi(phi5_at_25, 3) == Valuation::finite(4));
    // rational case: pi = p
    CHECK(ord_pi(CyclotomicValue::integer(5, 75), 3) == Valuation::finite(2));
    CHECK(ord_pi(CyclotomicValue::integer(5, 0), 3) == Valuation::cap(3));
    // vanishing at working precision
    CHECK(ord_pi(from_ints(5, 1, {25, 50, 0, 100}), 2) == Valuation::cap(2 * 4));
    // total ramification: ord(p) = phi(p^n)
    CHECK(ord_pi(CyclotomicValue::zeta_power(5, 2, 0).mul(CyclotomicValue(5, 2, {5, std::vector<mpz_class>(19, 0)[0]}, std::nullopt)), 2).value == 0);
}

TEST_CASE("ord_pi total ramification and multiplicativity") {
    // ord(p) = phi(p^n) for n = 1, 2
    std::vector<mpz_class> five1(4, 0);
    five1[0] = 5;
    CHECK(ord_pi(CyclotomicValue(5, 1, five1), 3) == Valuation::finite(4));
    std::vector<mpz_class> five2(20, 0);
    five2[0] = 5;
    CHECK(ord_pi(CyclotomicValue(5, 2, five2), 2) == Valuation::finite(20));

    Rng rng(4242);
    for (int iter = 0; iter < 40; ++iter) {
        const u64 p = 5;
        const unsigned n = 1 + static_cast<unsigned>(rng.below(2));
        const u64 deg = cyclotomic_degree(p, n);
        std::vector<mpz_class> xc(deg), yc(deg);
        for (auto& c : xc) c = static_cast<long>(rng.below(11)) - 5;
        for (auto& c : yc) c = static_cast<long>(rng.below(11)) - 5;
        CyclotomicValue x(p, n, xc), y(p, n, yc);
        const unsigned k = 6;
        Valuation vx = ord_pi(x, k), vy = ord_pi(y, k), vxy = ord_pi(x.mul(y), k);
        if (vx.is_finite() && vy.is_finite() && vxy.is_finite())
            CHECK(vxy.value == vx.value + vy.value);
    }
}

TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS_AS(from_ints(5, 1, {1, 0, 0, 0}).add(CyclotomicValue::integer(5, 1)),
                    ModulusMismatch);
    CHECK_THROWS_AS(CyclotomicValue(5, 1, {mpz_class(1)}), Error);  // wrong length
}
