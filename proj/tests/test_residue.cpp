#include <doctest.h>

#include "iwa/residue.hpp"
#include "iwa/rng.hpp"

using namespace iwa;

namespace {

// brute-force oracles over the full residue ring
u64 scan_inverse(u64 a, u64 m) {
    for (u64 x = 0; x < m; ++x)
        if (mulmod(a, x, m) == 1) return x;
    return 0;
}

u64 scan_unit_root(i64 ap, u64 p, u64 m) {
    for (u64 x = 0; x < m; ++x) {
        u64 f = addmod(submod(mulmod(x, x, m), mulmod(static_cast<u64>(ap) % m, x, m), m),
                       p % m, m);
        if (f == 0 && x % p == static_cast<u64>(ap) % p) return x;
    }
    return 0;
}

}  // namespace

TEST_CASE("residue arithmetic examples") {
    PadicResidue a(5, 2, 24);
    CHECK(a.mul(a).value() == 1);  // (-1)^2

    CHECK(PadicResidue(5, 3, 3).inv().value() == 42);
    CHECK(scan_inverse(3, 125) == 42);

    CHECK_THROWS_AS(PadicResidue(7, 1, 7).inv(), NonUnit);
    CHECK_THROWS_AS(PadicResidue(5, 2, 0).inv(), NonUnit);
    CHECK_THROWS_AS(PadicResidue(5, 2, 1).add(PadicResidue(5, 3, 1)), ModulusMismatch);
    CHECK_THROWS_AS(PadicResidue(4, 1, 1), Error);  // p must be prime >= 5
    CHECK_THROWS_AS(PadicResidue(3, 1, 1), Error);
}

TEST_CASE("residues form a commutative ring with exact inverses") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const u64 p = (i % 2 == 0) ? 5 : 7;
        const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
        const u64 m = checked_pow(p, k);
        PadicResidue x(p, k, static_cast<i64>(rng.below(m)));
        PadicResidue y(p, k, static_cast<i64>(rng.below(m)));
        PadicResidue z(p, k, static_cast<i64>(rng.below(m)));
        CHECK(x.add(y) == y.add(x));
        CHECK(x.mul(y) == y.mul(x));
        CHECK(x.mul(y.add(z)) == x.mul(y).add(x.mul(z)));
        CHECK(x.mul(y).mul(z) == x.mul(y.mul(z)));
        CHECK(x.add(y).sub(y) == x);
        if (x.is_unit()) {
            CHECK(x.mul(x.inv()).value() == 1);
            CHECK(x.inv().mul(x).value() == 1);
        }
    }
}

TEST_CASE("hensel unit root") {
    CHECK(hensel_unit_root(3, 5, 1).value() == 3);
    CHECK(hensel_unit_root(3, 5, 3).value() == 93);
    CHECK(scan_unit_root(3, 5, 125) == 93);
    CHECK_THROWS_AS(hensel_unit_root(5, 5, 2), NotOrdinary);
    CHECK_THROWS_AS(hensel_unit_root(0, 7, 2), NotOrdinary);

    // the root satisfies its equation and the congruence
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        const u64 p = (i % 2 == 0) ? 5 : 7;
        const unsigned k = 1 + static_cast<unsigned>(rng.below(6));
        i64 ap = static_cast<i64>(rng.below(2 * p)) - static_cast<i64>(p);
        if (((ap % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p) == 0)
            ap += 1;
        const u64 m = checked_pow(p, k);
        PadicResidue alpha = hensel_unit_root(ap, p, k);
        const u64 a = alpha.value();
        const u64 apm = static_cast<u64>(((ap % static_cast<i64>(m)) + static_cast<i64>(m))) % m;
        CHECK(addmod(submod(mulmod(a, a, m), mulmod(apm, a, m), m), p % m, m) == 0);
        CHECK(a % p == apm % p);
        // compatibility down the precision ladder
        if (k > 1) CHECK(alpha.reduce(k - 1) == hensel_unit_root(ap, p, k - 1));
    }
}

TEST_CASE("word-size guard") {
    CHECK_THROWS_AS(checked_pow(5, 28), Error);   // above the 2^62 bound
    CHECK(checked_pow(5, 12) == 244140625ULL);    // the documented test ceiling
    CHECK_NOTHROW(PadicResidue(5, 12, 123456789));
}
