#include "seifcov/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seifcov/text.hpp"

namespace seifcov {

SeifertInvariants canonical_fibers(SeifertInvariants inv) {
    std::sort(inv.fibers.begin(), inv.fibers.end());
    return inv;
}

bool same_symbol(const SeifertInvariants& a, const SeifertInvariants& b) {
    return canonical_fibers(a) == canonical_fibers(b);
}

namespace {

void note(std::string& detail, const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
}

std::string rat_str(const cpp_rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

VerifyReport verify_against(const SeifertInvariants& inv, const Z2Hom& phi,
                            const SeifertInvariants& predicted) {
    VerifyReport rep;
    rep.input = inv;
    rep.phi = phi;
    rep.cc = classify(inv, phi);
    rep.predicted = predicted;

    rep.valid_ok = validate(predicted).ok;
    if (!rep.valid_ok) note(rep.detail, "predicted symbol fails validate");

    Presentation oracle = kernel_presentation(fundamental_presentation(inv), phi);
    rep.oracle_h1 = h1(oracle);

    if (rep.valid_ok) {
        rep.predicted_h1 = h1(fundamental_presentation(predicted));
        rep.h1_ok = rep.predicted_h1 == rep.oracle_h1;
        if (!rep.h1_ok)
            note(rep.detail, "h1 mismatch: predicted " + print_h1(rep.predicted_h1) +
                                 ", oracle " + print_h1(rep.oracle_h1));

        const bool fiber = rep.cc.tag == CoverTag::FiberCase;
        cpp_rational chi_want = chi_orb(inv) * (fiber ? 1 : 2);
        rep.chi_ok = chi_orb(predicted) == chi_want;
        if (!rep.chi_ok)
            note(rep.detail, "chi_orb mismatch: predicted " + rat_str(chi_orb(predicted)) +
                                 ", want " + rat_str(chi_want));

        if (orientable_total(inv.type) &&
            (rep.cc.tag == CoverTag::BaseOrdinary || fiber)) {
            cpp_rational want = fiber ? euler_number(inv) / 2 : euler_number(inv) * 2;
            rep.euler_ok = euler_number(predicted) == want;
            if (!*rep.euler_ok)
                note(rep.detail, "euler mismatch: predicted " + rat_str(euler_number(predicted)) +
                                     ", want " + rat_str(want));
        }
    }

    rep.pass = rep.valid_ok && rep.h1_ok && rep.chi_ok && rep.euler_ok.value_or(true);
    return rep;
}

VerifyReport verify_cover(const SeifertInvariants& inv, const Z2Hom& phi) {
    return verify_against(inv, phi, double_cover(inv, phi));
}

std::vector<VerifyReport> killvj_check(const SeifertInvariants& inv) {
    Presentation fp = fundamental_presentation(inv);
    std::vector<Z2Hom> phis = enumerate_epimorphisms(fp);

    // Group by the s-bits; keep phi(h) = 0, m > 0. The v-bits are free, so
    // each group holds all 2^{g'} variants of one base epimorphism.
    std::map<std::vector<int>, std::vector<const Z2Hom*>> groups;
    for (const Z2Hom& phi : phis) {
        if (hom_at(phi, {GenClass::h, 1}) != 0) continue;
        std::vector<int> key;
        long long m = 0;
        for (size_t k = 1; k <= inv.fibers.size(); ++k) {
            int bit = hom_at(phi, {GenClass::s, (int)k});
            key.push_back(bit);
            m += bit;
        }
        if (m == 0) continue;
        groups[key].push_back(&phi);
    }

    std::vector<VerifyReport> out;
    for (const auto& [key, members] : groups) {
        VerifyReport base = verify_cover(inv, *members.front());
        bool agree = true;
        for (size_t i = 1; i < members.size(); ++i) {
            VerifyReport other = verify_cover(inv, *members[i]);
            if (!same_symbol(other.predicted, base.predicted)) {
                agree = false;
                note(base.detail, "prediction differs for " + print_hom(*members[i]) + ": " +
                                      print_seifert(other.predicted) + " vs " +
                                      print_seifert(base.predicted));
            }
            if (!(other.oracle_h1 == base.oracle_h1)) {
                agree = false;
                note(base.detail, "oracle H1 differs for " + print_hom(*members[i]) + ": " +
                                      print_h1(other.oracle_h1) + " vs " +
                                      print_h1(base.oracle_h1));
            }
        }
        base.pass = agree;
        out.push_back(std::move(base));
    }
    return out;
}

SeifertInvariants random_invariants(std::mt19937_64& rng, const FuzzConfig& cfg) {
    auto pick = [&rng](long long lo, long long hi) {  // inclusive
        return lo + (long long)(rng() % (uint64_t)(hi - lo + 1));
    };
    SeifertInvariants inv;
    inv.type = all_types[rng() % 6];
    long long gmin = genus_min(inv.type);
    inv.g = pick(gmin, std::max(gmin, cfg.max_g));
    long long n = pick(0, cfg.max_n);
    for (long long k = 0; k < n; ++k) {
        for (;;) {
            long long a = pick(-cfg.max_abs_a, cfg.max_abs_a);
            long long b = pick(-cfg.max_abs_b, cfg.max_abs_b);
            if (a != 0 && std::gcd(std::abs(a), std::abs(b)) == 1) {
                inv.fibers.push_back({a, b});
                break;
            }
        }
    }
    inv.e = pick(-cfg.max_abs_e, cfg.max_abs_e);
    return inv;
}

FuzzSummary fuzz(const FuzzConfig& cfg) {
    FuzzSummary sum;
    std::mt19937_64 rng(cfg.seed);
    for (uint64_t i = 0; i < cfg.count; ++i) {
        SeifertInvariants inv = random_invariants(rng, cfg);
        ++sum.cases;
        ++sum.type_counts[to_string(inv.type)];
        Presentation fp = fundamental_presentation(inv);
        for (const Z2Hom& phi : enumerate_epimorphisms(fp)) {
            ++sum.epimorphisms;
            VerifyReport rep = verify_cover(inv, phi);
            ++sum.coverage[std::string(cover_tag_name(rep.cc.tag)) + "/" + to_string(inv.type)];
            if (rep.pass) continue;
            const std::string sym = print_seifert(inv), hom = print_hom(phi);
            if (!rep.valid_ok)
                sum.failures.push_back({sym, hom, "validate", "valid symbol",
                                        print_seifert(rep.predicted)});
            else {
                if (!rep.h1_ok)
                    sum.failures.push_back({sym, hom, "h1", print_h1(rep.oracle_h1),
                                            print_h1(rep.predicted_h1)});
                if (!rep.chi_ok)
                    sum.failures.push_back({sym, hom, "chi_orb",
                                            rat_str(chi_orb(inv) *
                                                    (rep.cc.tag == CoverTag::FiberCase ? 1 : 2)),
                                            rat_str(chi_orb(rep.predicted))});
                if (rep.euler_ok && !*rep.euler_ok) {
                    cpp_rational want = rep.cc.tag == CoverTag::FiberCase
                                            ? euler_number(inv) / 2
                                            : euler_number(inv) * 2;
                    sum.failures.push_back({sym, hom, "euler", rat_str(want),
                                            rat_str(euler_number(rep.predicted))});
                }
            }
        }
    }
    return sum;
}

}  // namespace seifcov
