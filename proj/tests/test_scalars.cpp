#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotwist/cyclotomic.hpp"
#include "cotwist/group_ring.hpp"
#include "cotwist/rational.hpp"

using namespace cotwist;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(2, 3);
    CHECK(inv(a) == Rational(3, 2));
    CHECK(a + Rational(1, 3) == 1);
    CHECK_THROWS_AS(inv(Rational(0)), NonUnitError);
    Rational b(4, 6);
    b.canonicalize();
    CHECK(b == a);
}

TEST_CASE("cyclotomic defining relations") {
    // zeta_4^2 = -1
    auto i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(4, Rational(-1)));
    // zeta_3^2 + zeta_3 + 1 = 0
    auto w = Cyclotomic::zeta(3);
    CHECK((w * w + w + Cyclotomic(3, Rational(1))).is_zero());
    // zeta_m has order m
    for (unsigned m : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        auto z = Cyclotomic::zeta(m);
        CHECK(z.pow(long(m)) == Cyclotomic(m, Rational(1)));
        for (unsigned k = 1; k < m; ++k) CHECK(z.pow(k) != Cyclotomic(m, Rational(1)));
    }
}

TEST_CASE("cyclotomic inverse: x * inv(x) = 1 for nonzero x (fuzz)") {
    std::uint64_t state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return long(state >> 40) % 7 - 3;
    };
    for (unsigned m : {3u, 4u, 5u, 8u, 12u}) {
        for (int trial = 0; trial < 25; ++trial) {
            Cyclotomic x(m);
            Cyclotomic acc(m, Rational(0));
            for (unsigned k = 0; k < Cyclotomic::totient(m); ++k)
                acc += Cyclotomic::zeta(m, k) * Cyclotomic(m, Rational(rnd()));
            if (acc.is_zero()) continue;
            CHECK(acc * acc.inverse() == Cyclotomic(m, Rational(1)));
        }
    }
    CHECK_THROWS_AS(Cyclotomic(6).inverse(), NonUnitError);
}

TEST_CASE("group ring idempotents and specialization") {
    // ((1+z)/2)^2 = (1+z)/2 in k[z]/(z^2-1)
    GroupRingScalar e(2, {Rational(1, 2), Rational(1, 2)});
    CHECK(e * e == e);

    // specialization at z = +-1
    GroupRingScalar x(2, {Rational(5), Rational(7)}); // 5 + 7z
    CHECK(x.specialize_rational(Rational(-1)) == Rational(-2));
    CHECK(x.specialize_rational(Rational(1)) == Rational(12));
    GroupRingScalar half_minus(2, {Rational(1, 2), Rational(-1, 2)}); // (1-z)/2
    CHECK(half_minus.specialize_rational(Rational(-1)) == Rational(1));

    // idempotent split examples
    GroupRingScalar onez(2, {Rational(1), Rational(1)}); // 1 + z
    auto parts = onez.idempotent_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == Cyclotomic(2, Rational(2)));
    CHECK(parts[1] == Cyclotomic(2, Rational(0)));
    GroupRingScalar just_z = GroupRingScalar::z_power(2, 1);
    auto zparts = just_z.idempotent_split();
    CHECK(zparts[0] == Cyclotomic(2, Rational(1)));
    CHECK(zparts[1] == Cyclotomic(2, Rational(-1)));
    CHECK(GroupRingScalar::recombine(parts) == onez);

    // inversion of the zero divisor 1 + z signals NonUnit
    CHECK_THROWS_AS(onez.inverse(), NonUnitError);
    // z itself is a unit
    CHECK(just_z.inverse() * just_z == GroupRingScalar(2, Rational(1)));
}

TEST_CASE("group ring round trip and homomorphism properties (fuzz)") {
    std::uint64_t state = 999;
    auto rnd = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return long(state >> 40) % 9 - 4;
    };
    for (unsigned m : {2u, 3u, 4u}) {
        auto q = Cyclotomic::zeta(m);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Rational> ca, cb;
            for (unsigned i = 0; i < m; ++i) ca.emplace_back(rnd());
            for (unsigned i = 0; i < m; ++i) cb.emplace_back(rnd());
            GroupRingScalar a(m, ca), b(m, cb);
            CHECK(GroupRingScalar::recombine(a.idempotent_split()) == a);
            CHECK(a.specialize(q) * b.specialize(q) == (a * b).specialize(q));
            CHECK(a.specialize(q) + b.specialize(q) == (a + b).specialize(q));
        }
    }
    // q with q^m != 1 is rejected
    GroupRingScalar a(2, Rational(1));
    CHECK_THROWS_AS(a.specialize(Cyclotomic::zeta(3)), InvalidRootError);
}
