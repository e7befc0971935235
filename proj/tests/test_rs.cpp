#include <stdexcept>

#include "doctest.h"
#include "seifcov/abelian.hpp"
#include "seifcov/rs.hpp"
#include "seifcov/seifert.hpp"
#include "seifcov/text.hpp"

using namespace seifcov;

namespace {

const Generator S1{GenClass::s, 1};
const Generator S2{GenClass::s, 2};
const Generator V1{GenClass::v, 1};
const Generator H{GenClass::h, 1};

long long phi_weight(const Word& w, const Z2Hom& phi) {
    long long t = 0;
    for (const auto& syl : w) t += hom_at(phi, syl.g) * syl.e;
    return t;
}

}  // namespace

TEST_CASE("schreier_generators of the infinite cyclic group") {
    Presentation p{{H}, {}};
    Z2Hom phi{{H, 1}};
    auto gens = schreier_generators(p, phi, {H});
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].coset == 1);
    CHECK(gens[0].base == H);
    CHECK(gens[0].kgen == Generator{GenClass::z, 1});
    CHECK(gens[0].word == letter(H, 2));  // q h rep(qh)^-1 = h h
}

TEST_CASE("schreier_generators: 2G-1 generators, kernel words, paired naming") {
    SeifertInvariants inv{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    Presentation p = fundamental_presentation(inv);
    Z2Hom phi = parse_hom("s1=1,s2=1,h=1", p);
    Transversal t = default_transversal(p, phi);
    CHECK(t.q == H);

    auto gens = schreier_generators(p, phi, t);
    REQUIRE(gens.size() == 2 * p.generators.size() - 1);
    // positions: s1 -> 1, s2 -> 2, h -> 3; (coset 0, h) omitted
    CHECK(gens[0].kgen == Generator{GenClass::y, 1});
    CHECK(gens[1].kgen == Generator{GenClass::z, 1});
    CHECK(gens[2].kgen == Generator{GenClass::y, 2});
    CHECK(gens[3].kgen == Generator{GenClass::z, 2});
    CHECK(gens[4].kgen == Generator{GenClass::z, 3});
    for (const auto& sg : gens) {
        CHECK(phi_weight(sg.word, phi) % 2 == 0);  // defining words lie in the kernel
        CHECK(free_reduce(sg.word) == sg.word);
    }
    // gamma(0, s1) = s1 rep(s1)^-1 = s1 q^-1 since phi(s1) = 1
    CHECK(gens[0].word == mul(letter(S1), letter(H, -1)));
    // gamma(1, s1) = q s1 rep(q s1)^-1 = h s1
    CHECK(gens[1].word == mul(letter(H), letter(S1)));
}

TEST_CASE("default_transversal prefers h, then first marked generator") {
    SeifertInvariants inv{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    Presentation p = fundamental_presentation(inv);
    CHECK(default_transversal(p, parse_hom("s1=1,s2=1,h=1", p)).q == H);

    SeifertInvariants base{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    Presentation pb = fundamental_presentation(base);
    CHECK(default_transversal(pb, parse_hom("s1=1,s2=1", pb)).q == S1);
    CHECK(default_transversal(pb, parse_hom("s1=1,s2=1,v1=1", pb)).q == S1);
    CHECK(default_transversal(pb, parse_hom("v2=1", pb)).q == Generator{GenClass::v, 2});
}

TEST_CASE("admissible_transversals lists every marked generator") {
    SeifertInvariants base{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    Presentation pb = fundamental_presentation(base);
    auto ts = admissible_transversals(pb, parse_hom("s1=1,s2=1", pb));
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].q == S1);
    CHECK(ts[1].q == S2);
}

TEST_CASE("rewrite_relator on the cyclic double cover of Z/2") {
    Presentation p{{H}, {letter(H, 2)}};
    Z2Hom phi{{H, 1}};
    Transversal t{H};
    CHECK(rewrite_relator(p, phi, t, Word{}, 0).empty());
    // h^2 from either coset crosses the trivial generator once and z1 once
    CHECK(rewrite_relator(p, phi, t, letter(H, 2), 0) == letter(Generator{GenClass::z, 1}));
    CHECK(rewrite_relator(p, phi, t, letter(H, 2), 1) == letter(Generator{GenClass::z, 1}));
    // kernel of Z -> Z/2 restricted: <z1 | z1, z1> is trivial, as it must be
    Presentation k = kernel_presentation(p, phi);
    CHECK(h1(k) == H1Invariants{0, {}});
}

TEST_CASE("rewrite_relator: commutation relator by hand") {
    SeifertInvariants inv{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    Presentation p = fundamental_presentation(inv);
    Z2Hom phi = parse_hom("s1=1,s2=1,h=1", p);
    Transversal t{H};
    // [s1,h] from coset 0: y1 z3 z1^-1 (the final h^-1 crosses the trivial leg)
    Word got = rewrite_relator(p, phi, t, commutator(letter(S1), letter(H)), 0);
    Word want = mul(letter(Generator{GenClass::y, 1}), letter(Generator{GenClass::z, 3}),
                    letter(Generator{GenClass::z, 1}, -1));
    CHECK(got == want);
}

TEST_CASE("rewrite_relator enforces the syllable-exponent cap") {
    Presentation p{{Generator{GenClass::x, 1}}, {letter(Generator{GenClass::x, 1}, 100)}};
    Z2Hom phi{{Generator{GenClass::x, 1}, 1}};
    CHECK_THROWS_AS(
        rewrite_relator(p, phi, {Generator{GenClass::x, 1}}, p.relators[0], 0),
        std::runtime_error);
    CHECK_NOTHROW(rewrite_relator(p, phi, {Generator{GenClass::x, 1}},
                                  letter(Generator{GenClass::x, 1}, 98), 0));
}

TEST_CASE("rewrite_relator rejects words outside the kernel") {
    Presentation p{{Generator{GenClass::x, 1}}, {}};
    Z2Hom phi{{Generator{GenClass::x, 1}, 1}};
    CHECK_THROWS_AS(rewrite_relator(p, phi, {Generator{GenClass::x, 1}},
                                    letter(Generator{GenClass::x, 1}), 0),
                    std::logic_error);
}

TEST_CASE("kernel_presentation counts and free-group case") {
    Presentation p{{H}, {}};
    Presentation k = kernel_presentation(p, Z2Hom{{H, 1}});
    REQUIRE(k.generators.size() == 1);
    CHECK(k.generators[0] == Generator{GenClass::z, 1});
    CHECK(k.relators.empty());
    CHECK(h1(k) == H1Invariants{1, {}});

    SeifertInvariants inv{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    Presentation pb = fundamental_presentation(inv);
    Z2Hom phi = parse_hom("s1=1,s2=1", pb);
    Presentation kb = kernel_presentation(pb, phi);
    CHECK(kb.generators.size() == 2 * pb.generators.size() - 1);
    CHECK(kb.relators.size() == 2 * pb.relators.size());
}

TEST_CASE("kernel H1 of the quaternion-like symbol is Z/2") {
    // {1;(n2,1);} has H1 = Z/4 and exactly one epimorphism (v1 -> 1); the
    // index-2 kernel abelianizes to Z/2.
    SeifertInvariants inv{1, TypeSymbol::n2, 1, {}};
    Presentation p = fundamental_presentation(inv);
    auto homs = enumerate_epimorphisms(p);
    REQUIRE(homs.size() == 1);
    CHECK(h1(p) == H1Invariants{0, {cpp_int(4)}});
    Presentation k = kernel_presentation(p, homs[0]);
    CHECK(h1(k) == H1Invariants{0, {cpp_int(2)}});
}

TEST_CASE("kernel H1 matches the predicted cover presentation") {
    SeifertInvariants inv{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    Presentation p = fundamental_presentation(inv);
    Z2Hom phi = parse_hom("s1=1,s2=1", p);
    SeifertInvariants cover{2, TypeSymbol::o1, 2, {{1, 1}, {1, 1}}};
    CHECK(h1(kernel_presentation(p, phi)) == h1(fundamental_presentation(cover)));
}

TEST_CASE("kernel H1 is independent of the transversal and of simplification") {
    SeifertInvariants cases[] = {
        {2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}},
        {1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}},
        {0, TypeSymbol::n3, 2, {{2, 1}}},
        {3, TypeSymbol::o2, 1, {{3, 1}}},
    };
    for (const auto& inv : cases) {
        Presentation p = fundamental_presentation(inv);
        for (const Z2Hom& phi : enumerate_epimorphisms(p)) {
            H1Invariants ref = h1(kernel_presentation(p, phi));
            for (const Transversal& t : admissible_transversals(p, phi)) {
                CHECK(h1(kernel_presentation(p, phi, t)) == ref);
                CHECK(h1(kernel_presentation(p, phi, t, /*simplify=*/true)) == ref);
            }
        }
    }
}
