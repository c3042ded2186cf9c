#include <doctest.h>

#include <set>

#include "cotwist/cocycle.hpp"
#include "cotwist/finite_group.hpp"
#include "cotwist/spin_cover.hpp"
#include "cotwist/symmetric_group.hpp"

using namespace cotwist;

TEST_CASE("perm basics") {
    auto s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
    CHECK((s1 * s1).is_identity());
    CHECK(Perm({1, 2, 0}).inverse() == Perm({2, 0, 1}));
    // conj((12),(23)) = (13) in S3
    CHECK(s1.conjugate(s2) == Perm::transposition(3, 0, 2));
}

TEST_CASE("length = inversion count") {
    CHECK(Perm::identity(4).length() == 0);
    // longest element of S4
    CHECK(Perm({3, 2, 1, 0}).length() == 6);
    // (1 3) in S3 has one-line [2,1,0]; enumerate inversions by brute force
    Perm p({2, 1, 0});
    unsigned inv = 0;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j)
            if (p(i) > p(j)) ++inv;
    CHECK(inv == 3);
    CHECK(p.length() == 3);
}

TEST_CASE("reduced words: lex-min, consistent with greedy descent, reproduce the element") {
    auto sym = SymmetricGroup::get(3);
    CHECK(sym->reduced_word(sym->index(Perm::identity(3))).empty());
    CHECK(sym->reduced_word(sym->index(Perm::simple(3, 2))) ==
          std::vector<std::uint8_t>{2});
    // (1 3): both reduced words are 121 and 212; lex-min is 121
    CHECK(sym->reduced_word(sym->index(Perm({2, 1, 0}))) ==
          std::vector<std::uint8_t>{1, 2, 1});

    for (unsigned n = 2; n <= 6; ++n) {
        auto s = SymmetricGroup::get(n);
        for (std::uint32_t i = 0; i < s->order(); ++i) {
            const auto& w = s->reduced_word(i);
            CHECK(w.size() == s->length(i));
            Perm prod = Perm::identity(n);
            for (auto g : w) prod = prod * Perm::simple(n, g);
            CHECK(prod == s->perm(i));
            CHECK(w == greedy_reduced_word(s->perm(i)));
        }
    }
}

TEST_CASE("l(g)+l(h)-l(gh) is always even (prerequisite for the length cocycle)") {
    for (unsigned n = 2; n <= 5; ++n) {
        auto s = SymmetricGroup::get(n);
        for (std::uint32_t g = 0; g < s->order(); ++g)
            for (std::uint32_t h = 0; h < s->order(); ++h)
                CHECK((s->length(g) + s->length(h) - s->length(s->mul(g, h))) % 2 == 0);
    }
}

TEST_CASE("finite group constructors verify axioms") {
    auto c4 = FiniteGroup::cyclic(4);
    CHECK(c4->order() == 4);
    CHECK(c4->element_order(1) == 4);
    auto v4 = FiniteGroup::elementary_abelian(2, 2);
    CHECK(v4->order() == 4);
    CHECK(v4->is_abelian());
    for (FiniteGroup::Index g = 0; g < 4; ++g)
        if (g != v4->identity()) CHECK(v4->element_order(g) == 2);

    // corrupt table: break associativity
    std::vector<FiniteGroup::Index> bad = {0, 1, 1, 0};
    CHECK_THROWS_AS(FiniteGroup("bad", {"a", "b"}, bad), InvalidInputError);
}

TEST_CASE("central extension by the trivial cocycle splits") {
    auto s3 = SymmetricGroup::get(3)->finite_group();
    auto ext = central_extension(s3, ZmCocycle::trivial(s3, 2));
    CHECK(ext->order() == 12);
    // (1,g)*(1,h) = (1,gh) for all g,h: the S3-block closes
    for (FiniteGroup::Index g = 0; g < 6; ++g)
        for (FiniteGroup::Index h = 0; h < 6; ++h)
            CHECK(ext->mul(g, h) == s3->mul(g, h));
    // projection is a homomorphism with central kernel of order 2
    auto proj = [&](FiniteGroup::Index e) { return e % 6; };
    for (FiniteGroup::Index a = 0; a < 12; ++a)
        for (FiniteGroup::Index b = 0; b < 12; ++b)
            CHECK(proj(ext->mul(a, b)) == s3->mul(proj(a), proj(b)));
    FiniteGroup::Index z = 6; // (z, 1)
    for (FiniteGroup::Index a = 0; a < 12; ++a)
        CHECK(ext->mul(z, a) == ext->mul(a, z));
}

TEST_CASE("spin cocycle extension: Schur cover invariants for S4") {
    auto sym = SymmetricGroup::get(4);
    auto G = sym->finite_group();
    ZmCocycle spin = spin_cocycle(4);
    auto T4 = central_extension(G, spin);
    CHECK(T4->order() == 48);

    const TranspositionClass X(4);
    // both lifts of any transposition square to the identity
    for (std::size_t t = 0; t < X.size(); ++t) {
        FiniteGroup::Index g = sym->index(X.perm(t));
        CHECK(T4->element_order(g) == 2);          // (1, tau)
        CHECK(T4->element_order(24 + g) == 2);     // (z, tau)
    }
    // lifts of disjoint transpositions anticommute: product differs by z
    FiniteGroup::Index t12 = sym->index(Perm::transposition(4, 0, 1));
    FiniteGroup::Index t34 = sym->index(Perm::transposition(4, 2, 3));
    CHECK(T4->mul(t12, t34) == (T4->mul(t34, t12) + 24) % 48);

    // [z,1]: lifts of transpositions have order 4 (A_n x| C_4 shape)
    auto len = length_cocycle(4);
    auto E = central_extension(G, len);
    for (std::size_t t = 0; t < X.size(); ++t)
        CHECK(E->element_order(sym->index(X.perm(t))) == 4);

    // [z,z]: order 4 lifts AND disjoint anticommutation
    auto both = cocycle_family(4, true, true);
    auto E2 = central_extension(G, both);
    for (std::size_t t = 0; t < X.size(); ++t)
        CHECK(E2->element_order(sym->index(X.perm(t))) == 4);
    CHECK(E2->mul(t12, t34) == (E2->mul(t34, t12) + 24) % 48);
}
