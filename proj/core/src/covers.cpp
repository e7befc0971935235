#include "seifcov/covers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace seifcov {

const char* cover_tag_name(CoverTag t) {
    switch (t) {
        case CoverTag::FiberCase: return "FiberCase";
        case CoverTag::BaseOrdinary: return "BaseOrdinary";
        case CoverTag::BaseExotic: return "BaseExotic";
        case CoverTag::BaseOrientationCover: return "BaseOrientationCover";
    }
    return "?";
}

namespace {

const Generator kH{GenClass::h, 1};

std::vector<int> s_bits(const SeifertInvariants& inv, const Z2Hom& phi) {
    std::vector<int> out;
    for (size_t k = 1; k <= inv.fibers.size(); ++k)
        out.push_back(hom_at(phi, {GenClass::s, (int)k}));
    return out;
}

std::vector<int> v_bits(const SeifertInvariants& inv, const Z2Hom& phi) {
    std::vector<int> out;
    long long gp = genus_prime(inv.type, inv.g);
    for (long long j = 1; j <= gp; ++j) out.push_back(hom_at(phi, {GenClass::v, (int)j}));
    return out;
}

}  // namespace

CoverCase classify(const SeifertInvariants& inv, const Z2Hom& phi) {
    require_epimorphism(fundamental_presentation(inv), phi);
    CoverCase cc{CoverTag::BaseOrdinary, 0, 0, 0};
    std::vector<int> sb = s_bits(inv, phi), vb = v_bits(inv, phi);
    cc.m = std::accumulate(sb.begin(), sb.end(), 0LL);
    cc.r = std::accumulate(vb.begin(), vb.end(), 0LL);

    if (hom_at(phi, kH) == 1) {
        cc.tag = CoverTag::FiberCase;
        switch (inv.type) {
            case TypeSymbol::o1:
            case TypeSymbol::n2: cc.mprime = 0; break;
            case TypeSymbol::o2:
            case TypeSymbol::n1: cc.mprime = static_cast<int>(cc.r % 2); break;
            case TypeSymbol::n3: cc.mprime = vb.empty() ? 0 : vb[0]; break;
            case TypeSymbol::n4: cc.mprime = (vb[0] + vb[1]) % 2; break;
        }
        return cc;
    }

    if (cc.m > 0) return cc;  // ordinary; v-bits do not matter

    // m = 0: the marked-v set S decides the special families.
    const bool all_v = cc.r == genus_prime(inv.type, inv.g);
    switch (inv.type) {
        case TypeSymbol::o1:
            break;
        case TypeSymbol::o2:
        case TypeSymbol::n1:
            if (all_v) cc.tag = CoverTag::BaseOrientationCover;
            break;
        case TypeSymbol::n2:
            if (all_v) cc.tag = CoverTag::BaseExotic;
            break;
        case TypeSymbol::n3:
        case TypeSymbol::n4: {
            // Orientation cover iff S is exactly the plus-loop set {1} / {1,2}.
            long long plus = inv.type == TypeSymbol::n3 ? 1 : 2;
            bool plus_only = cc.r == plus;
            for (long long j = 0; j < plus && plus_only; ++j) plus_only = vb[(size_t)j] == 1;
            if (all_v)
                cc.tag = CoverTag::BaseExotic;
            else if (plus_only)
                cc.tag = CoverTag::BaseOrientationCover;
            break;
        }
    }
    return cc;
}

std::pair<SeifertInvariants, Z2Hom> reorder_for_phi(const SeifertInvariants& inv,
                                                    const Z2Hom& phi) {
    require_epimorphism(fundamental_presentation(inv), phi);
    if (hom_at(phi, kH) != 0)
        throw std::invalid_argument("reorder_for_phi: requires phi(h) = 0");

    std::vector<int> sb = s_bits(inv, phi);
    std::vector<size_t> order(sb.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return sb[x] > sb[y]; });

    SeifertInvariants out = inv;
    Z2Hom phi2 = phi;
    for (size_t k = 0; k < order.size(); ++k) {
        out.fibers[k] = inv.fibers[order[k]];
        phi2[{GenClass::s, (int)(k + 1)}] = sb[order[k]];
    }
    return {out, phi2};
}

SeifertInvariants cover_fiber_case(const SeifertInvariants& inv, const Z2Hom& phi) {
    CoverCase cc = classify(inv, phi);
    if (cc.tag != CoverTag::FiberCase)
        throw std::invalid_argument("cover_fiber_case: phi(h) = 1 required");

    // Side conditions that follow from the GF(2) constraints; a failure here
    // means the solver and the formulas disagree.
    long long modd = 0;
    std::vector<int> sb = s_bits(inv, phi);
    for (size_t k = 0; k < inv.fibers.size(); ++k) {
        const FiberPair& f = inv.fibers[k];
        if (f.a % 2 == 0) throw std::logic_error("fiber case: even multiplicity");
        long long bpar = ((f.b % 2) + 2) % 2;
        if (sb[k] != bpar) throw std::logic_error("fiber case: phi(s_k) != b_k mod 2");
        if (bpar == 1) ++modd;
    }
    if ((inv.e - modd) % 2 != 0) throw std::logic_error("fiber case: e + m odd");

    SeifertInvariants out;
    out.e = (inv.e - modd) / 2 - cc.mprime;
    out.type = inv.type;
    out.g = inv.g;
    for (const FiberPair& f : inv.fibers) {
        long long b2 = f.b % 2 == 0 ? f.b / 2 : (f.a + f.b) / 2;
        out.fibers.push_back({f.a, b2});
    }
    return out;
}

SeifertInvariants cover_base_case(const SeifertInvariants& inv, const Z2Hom& phi) {
    CoverCase cc = classify(inv, phi);
    if (cc.tag == CoverTag::FiberCase)
        throw std::invalid_argument("cover_base_case: phi(h) = 0 required");
    std::vector<int> sb = s_bits(inv, phi);
    for (size_t k = 0; k < sb.size(); ++k)
        if (sb[k] == 1 && k > 0 && sb[k - 1] == 0)
            throw std::invalid_argument("cover_base_case: input not reordered for phi");
    const long long m = cc.m;
    for (long long k = 0; k < m; ++k)
        if (inv.fibers[(size_t)k].a % 2 != 0)
            throw std::logic_error("base case: odd multiplicity among marked fibers");

    const long long g = inv.g;
    SeifertInvariants out;
    switch (cc.tag) {
        case CoverTag::BaseOrientationCover:
            out.e = 0;
            if (inv.type == TypeSymbol::o2) {
                out.type = TypeSymbol::o1;
                out.g = 2 * g - 1;
            } else if (inv.type == TypeSymbol::n1) {
                out.type = TypeSymbol::o1;
                out.g = g - 1;
            } else {  // n3, n4
                out.type = TypeSymbol::n2;
                out.g = 2 * g - 2;
            }
            out.fibers = build_FOC(inv.fibers);
            break;
        case CoverTag::BaseExotic:
            if (inv.type == TypeSymbol::n2) {
                out.e = 2 * inv.e;
                out.type = TypeSymbol::o1;
            } else {  // n3, n4
                out.e = 0;
                out.type = TypeSymbol::o2;
            }
            out.g = g - 1;
            out.fibers = build_Fm(inv.fibers, 0);
            break;
        case CoverTag::BaseOrdinary: {
            out.e = orientable_total(inv.type) ? 2 * inv.e : 0;
            out.type = inv.type == TypeSymbol::n3 ? TypeSymbol::n4 : inv.type;
            out.g = orientable_base(inv.type) ? m / 2 - 1 + 2 * g : m - 2 + 2 * g;
            if (m == 0 && (inv.type == TypeSymbol::n3 || inv.type == TypeSymbol::n4)) {
                // If the marked v's are exactly the fiber-reversing loops, the
                // cover's eps' entries (eps_j eps_1 twice for marked j, eps_j
                // twice for the rest) are all +1: the answer is of type n1.
                std::vector<int> eps = epsilon_vector(inv), vb = v_bits(inv, phi);
                bool minus_set = true;
                for (size_t j = 0; j < vb.size(); ++j)
                    if (vb[j] != (eps[j] == -1 ? 1 : 0)) minus_set = false;
                if (minus_set) out.type = TypeSymbol::n1;
            }
            out.fibers = build_Fm(inv.fibers, m);
            break;
        }
        case CoverTag::FiberCase:;  // unreachable
    }
    if (!orientable_total(out.type)) out = normalize_fiber_signs(out);
    return out;
}

SeifertInvariants double_cover(const SeifertInvariants& inv, const Z2Hom& phi) {
    CoverCase cc = classify(inv, phi);
    if (cc.tag == CoverTag::FiberCase) return cover_fiber_case(inv, phi);
    auto [inv2, phi2] = reorder_for_phi(inv, phi);
    return cover_base_case(inv2, phi2);
}

}  // namespace seifcov
