#include <random>
#include <stdexcept>

#include "doctest.h"
#include "seifcov/abelian.hpp"
#include "seifcov/covers.hpp"
#include "seifcov/rs.hpp"
#include "seifcov/text.hpp"
#include "seifcov/verify.hpp"

using namespace seifcov;
using boost::multiprecision::cpp_rational;

namespace {

Z2Hom hom(const SeifertInvariants& inv, const std::string& bits) {
    return parse_hom(bits, fundamental_presentation(inv));
}

H1Invariants oracle_h1(const SeifertInvariants& inv, const Z2Hom& phi) {
    Presentation p = fundamental_presentation(inv);
    return h1(kernel_presentation(p, phi));
}

}  // namespace

TEST_CASE("classify: the four tags on hand-picked cases") {
    SeifertInvariants fib{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    CoverCase cf = classify(fib, hom(fib, "s1=1,s2=1,h=1"));
    CHECK(cf.tag == CoverTag::FiberCase);
    CHECK(cf.m == 2);
    CHECK(cf.mprime == 0);

    SeifertInvariants ord{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    CoverCase co = classify(ord, hom(ord, "s1=1,s2=1"));
    CHECK(co.tag == CoverTag::BaseOrdinary);
    CHECK(co.m == 2);
    CHECK(co.r == 0);

    SeifertInvariants oc{3, TypeSymbol::o2, 1, {{3, 1}}};
    CHECK(classify(oc, hom(oc, "v1=1,v2=1")).tag == CoverTag::BaseOrientationCover);

    SeifertInvariants ex{1, TypeSymbol::n2, 1, {}};
    CHECK(classify(ex, hom(ex, "v1=1")).tag == CoverTag::BaseExotic);
}

TEST_CASE("classify: marked-v set splits n3 into three families") {
    SeifertInvariants inv{0, TypeSymbol::n3, 2, {}};
    CHECK(classify(inv, hom(inv, "v1=1")).tag == CoverTag::BaseOrientationCover);
    CHECK(classify(inv, hom(inv, "v2=1")).tag == CoverTag::BaseOrdinary);
    CHECK(classify(inv, hom(inv, "v1=1,v2=1")).tag == CoverTag::BaseExotic);
    CHECK(classify(inv, hom(inv, "h=1")).tag == CoverTag::FiberCase);

    SeifertInvariants n4{0, TypeSymbol::n4, 3, {}};
    CHECK(classify(n4, hom(n4, "v1=1,v2=1")).tag == CoverTag::BaseOrientationCover);
    CHECK(classify(n4, hom(n4, "v1=1")).tag == CoverTag::BaseOrdinary);
    CHECK(classify(n4, hom(n4, "v1=1,v2=1,v3=1")).tag == CoverTag::BaseExotic);
}

TEST_CASE("classify: fiber-case twist correction m'") {
    // o2/n1: parity of the whole marked-v set
    SeifertInvariants o2{0, TypeSymbol::o2, 1, {}};
    CHECK(classify(o2, hom(o2, "h=1,v1=1")).mprime == 1);
    CHECK(classify(o2, hom(o2, "h=1,v1=1,v2=1")).mprime == 0);
    // n3: the v1 bit alone
    SeifertInvariants n3{0, TypeSymbol::n3, 2, {}};
    CHECK(classify(n3, hom(n3, "h=1,v1=1")).mprime == 1);
    CHECK(classify(n3, hom(n3, "h=1,v2=1")).mprime == 0);
    // n4: parity of the v1, v2 bits
    SeifertInvariants n4{0, TypeSymbol::n4, 3, {}};
    CHECK(classify(n4, hom(n4, "h=1,v1=1")).mprime == 1);
    CHECK(classify(n4, hom(n4, "h=1,v1=1,v2=1")).mprime == 0);
    CHECK(classify(n4, hom(n4, "h=1,v3=1")).mprime == 0);
}

TEST_CASE("reorder_for_phi moves marked fibers first, stably") {
    SeifertInvariants inv{0, TypeSymbol::o1, 1, {{3, 1}, {2, 1}, {4, 1}}};
    Z2Hom phi = hom(inv, "s2=1,s3=1");
    auto [inv2, phi2] = reorder_for_phi(inv, phi);
    CHECK(inv2.fibers == std::vector<FiberPair>{{2, 1}, {4, 1}, {3, 1}});
    CHECK(hom_at(phi2, {GenClass::s, 1}) == 1);
    CHECK(hom_at(phi2, {GenClass::s, 2}) == 1);
    CHECK(hom_at(phi2, {GenClass::s, 3}) == 0);

    // already ordered: untouched (and equal-key order preserved)
    SeifertInvariants ok{1, TypeSymbol::o1, 0, {{2, 1}, {6, 1}, {3, 1}}};
    auto [ok2, okphi] = reorder_for_phi(ok, hom(ok, "s1=1,s2=1"));
    CHECK(ok2.fibers == ok.fibers);
    CHECK(okphi == hom(ok, "s1=1,s2=1"));

    SeifertInvariants fib{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    CHECK_THROWS_AS(reorder_for_phi(fib, hom(fib, "s1=1,s2=1,h=1")), std::invalid_argument);
}

TEST_CASE("cover_fiber_case: golden unwrapping and the b' rule") {
    SeifertInvariants g1{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    CHECK(cover_fiber_case(g1, hom(g1, "s1=1,s2=1,h=1")) ==
          SeifertInvariants{0, TypeSymbol::o1, 0, {{3, 2}, {3, 2}}});

    SeifertInvariants triv{0, TypeSymbol::o1, 0, {}};
    CHECK(cover_fiber_case(triv, hom(triv, "h=1")) == triv);

    // even b halves directly
    SeifertInvariants evb{0, TypeSymbol::o1, 0, {{3, 4}}};
    CHECK(cover_fiber_case(evb, hom(evb, "h=1")) ==
          SeifertInvariants{0, TypeSymbol::o1, 0, {{3, 2}}});

    // the twist correction shifts e by one
    SeifertInvariants o2{0, TypeSymbol::o2, 1, {}};
    CHECK(cover_fiber_case(o2, hom(o2, "h=1,v1=1")) ==
          SeifertInvariants{-1, TypeSymbol::o2, 1, {}});

    CHECK_THROWS_AS(cover_fiber_case(o2, hom(o2, "v1=1,v2=1")), std::invalid_argument);
}

TEST_CASE("cover_base_case: ordinary, exotic, orientation covers") {
    // ordinary, orientable total: e doubles, marked pair halves
    SeifertInvariants ord{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    CHECK(cover_base_case(ord, hom(ord, "s1=1,s2=1")) ==
          SeifertInvariants{2, TypeSymbol::o1, 2, {{1, 1}, {1, 1}}});

    // exotic n2 (golden): e doubles, base becomes orientable
    SeifertInvariants ex{1, TypeSymbol::n2, 1, {}};
    CHECK(cover_base_case(ex, hom(ex, "v1=1")) ==
          SeifertInvariants{2, TypeSymbol::o1, 0, {}});

    // orientation cover of o2 (golden): doubled fiber list with flipped b
    SeifertInvariants oc{3, TypeSymbol::o2, 1, {{3, 1}}};
    CHECK(cover_base_case(oc, hom(oc, "v1=1,v2=1")) ==
          SeifertInvariants{0, TypeSymbol::o1, 1, {{3, 1}, {3, -1}}});

    // exotic n3: flips to o2 with genus g-1 and duplicated fibers
    SeifertInvariants exn3{0, TypeSymbol::n3, 2, {}};
    CHECK(cover_base_case(exn3, hom(exn3, "v1=1,v2=1")) ==
          SeifertInvariants{0, TypeSymbol::o2, 1, {}});

    // orientation cover of n3: orientable double fiber space over type n2
    CHECK(cover_base_case(exn3, hom(exn3, "v1=1")) ==
          SeifertInvariants{0, TypeSymbol::n2, 2, {}});
}

TEST_CASE("cover_base_case: non-orientable outputs get positive b entries") {
    SeifertInvariants inv{0, TypeSymbol::o2, 1, {{4, -3}, {2, 1}}};
    CHECK(cover_base_case(inv, hom(inv, "s1=1,s2=1")) ==
          SeifertInvariants{0, TypeSymbol::o2, 2, {{2, 3}, {1, 1}}});
}

TEST_CASE("cover_base_case errors") {
    SeifertInvariants fib{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    CHECK_THROWS_AS(cover_base_case(fib, hom(fib, "s1=1,s2=1,h=1")), std::invalid_argument);

    SeifertInvariants off{0, TypeSymbol::o1, 1, {{3, 1}, {2, 1}, {4, 1}}};
    CHECK_THROWS_AS(cover_base_case(off, hom(off, "s2=1,s3=1")), std::invalid_argument);
}

TEST_CASE("ordinary n3/n4 with marked set = fiber-reversing set lands in n1") {
    // n3, g=2: eps = (+,-); marking exactly v2 gives an all-plus cover pattern.
    SeifertInvariants n3{0, TypeSymbol::n3, 2, {}};
    Z2Hom phi = hom(n3, "v2=1");
    SeifertInvariants cov = cover_base_case(n3, phi);
    CHECK(cov == SeifertInvariants{0, TypeSymbol::n1, 2, {}});
    CHECK(validate(cov).ok);
    CHECK(h1(fundamental_presentation(cov)) == oracle_h1(n3, phi));

    // n4, g=3: eps = (+,+,-); marking exactly v3.
    SeifertInvariants n4{0, TypeSymbol::n4, 3, {}};
    Z2Hom phi4 = hom(n4, "v3=1");
    SeifertInvariants cov4 = cover_base_case(n4, phi4);
    CHECK(cov4 == SeifertInvariants{0, TypeSymbol::n1, 4, {}});
    CHECK(h1(fundamental_presentation(cov4)) == oracle_h1(n4, phi4));
}

TEST_CASE("ordinary n3/n4 with other marked sets stays in n4") {
    // n3, g=3: eps = (+,-,-); S = {3} is a proper subset of the minus set.
    SeifertInvariants n3{0, TypeSymbol::n3, 3, {}};
    Z2Hom phi = hom(n3, "v3=1");
    SeifertInvariants cov = cover_base_case(n3, phi);
    CHECK(cov == SeifertInvariants{0, TypeSymbol::n4, 4, {}});
    CHECK(h1(fundamental_presentation(cov)) == oracle_h1(n3, phi));

    // n4, g=3: S = {2,3} mixes plus and minus loops.
    SeifertInvariants n4{0, TypeSymbol::n4, 3, {}};
    Z2Hom phi4 = hom(n4, "v2=1,v3=1");
    SeifertInvariants cov4 = cover_base_case(n4, phi4);
    CHECK(cov4 == SeifertInvariants{0, TypeSymbol::n4, 4, {}});
    CHECK(h1(fundamental_presentation(cov4)) == oracle_h1(n4, phi4));
}

TEST_CASE("double_cover dispatches and ignores v-marks when m > 0") {
    SeifertInvariants g1{2, TypeSymbol::o1, 0, {{3, 1}, {3, 1}}};
    CHECK(double_cover(g1, hom(g1, "s1=1,s2=1,h=1")) ==
          SeifertInvariants{0, TypeSymbol::o1, 0, {{3, 2}, {3, 2}}});

    SeifertInvariants ord{1, TypeSymbol::o1, 1, {{2, 1}, {2, 1}}};
    SeifertInvariants base = double_cover(ord, hom(ord, "s1=1,s2=1"));
    CHECK(base == SeifertInvariants{2, TypeSymbol::o1, 2, {{1, 1}, {1, 1}}});
    CHECK(double_cover(ord, hom(ord, "s1=1,s2=1,v1=1")) == base);
    CHECK(double_cover(ord, hom(ord, "s1=1,s2=1,v1=1,v2=1")) == base);

    // double_cover reorders internally; the direct base call would throw here
    SeifertInvariants off{0, TypeSymbol::o1, 1, {{3, 1}, {2, 1}, {4, 1}}};
    CHECK(double_cover(off, hom(off, "s2=1,s3=1")) ==
          SeifertInvariants{0, TypeSymbol::o1, 2, {{1, 1}, {2, 1}, {3, 1}, {3, 1}}});
}

TEST_CASE("cover outputs validate and satisfy the chi/euler laws") {
    std::mt19937_64 rng(41);
    FuzzConfig cfg;
    for (int iter = 0; iter < 60; ++iter) {
        SeifertInvariants inv = random_invariants(rng, cfg);
        Presentation p = fundamental_presentation(inv);
        for (const Z2Hom& phi : enumerate_epimorphisms(p)) {
            CoverCase cc = classify(inv, phi);
            SeifertInvariants cov = double_cover(inv, phi);
            CHECK(validate(cov).ok);
            CHECK(cc.mprime >= 0);
            CHECK(cc.mprime <= 1);
            if (cc.tag == CoverTag::FiberCase) {
                CHECK(chi_orb(cov) == chi_orb(inv));
            } else {
                CHECK(cc.m % 2 == 0);
                CHECK(chi_orb(cov) == cpp_rational(2) * chi_orb(inv));
            }
            if (orientable_total(inv.type)) {
                if (cc.tag == CoverTag::BaseOrdinary)
                    CHECK(euler_number(cov) == cpp_rational(2) * euler_number(inv));
                if (cc.tag == CoverTag::FiberCase)
                    CHECK(cpp_rational(2) * euler_number(cov) == euler_number(inv));
            }
        }
    }
}
