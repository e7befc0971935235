#include "seifcov/seifert.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace seifcov {

bool orientable_base(TypeSymbol t) { return t == TypeSymbol::o1 || t == TypeSymbol::o2; }

bool orientable_total(TypeSymbol t) { return t == TypeSymbol::o1 || t == TypeSymbol::n2; }

long long genus_min(TypeSymbol t) {
    switch (t) {
        case TypeSymbol::o1: return 0;
        case TypeSymbol::o2:
        case TypeSymbol::n1:
        case TypeSymbol::n2: return 1;
        case TypeSymbol::n3: return 2;
        case TypeSymbol::n4: return 3;
    }
    return 0;
}

namespace {

const char* type_name(TypeSymbol t) {
    switch (t) {
        case TypeSymbol::o1: return "o1";
        case TypeSymbol::o2: return "o2";
        case TypeSymbol::n1: return "n1";
        case TypeSymbol::n2: return "n2";
        case TypeSymbol::n3: return "n3";
        case TypeSymbol::n4: return "n4";
    }
    return "?";
}

}  // namespace

ValidationReport validate(const SeifertInvariants& inv) {
    ValidationReport rep;
    if (inv.g < genus_min(inv.type)) {
        std::ostringstream os;
        os << type_name(inv.type) << " requires g >= " << genus_min(inv.type)
           << " (got g = " << inv.g << ")";
        rep.violations.push_back(os.str());
    }
    for (size_t k = 0; k < inv.fibers.size(); ++k) {
        const FiberPair& f = inv.fibers[k];
        std::ostringstream os;
        if (f.a == 0) {
            os << "fiber " << k + 1 << ": a = 0";
            rep.violations.push_back(os.str());
        } else if (std::gcd(std::abs(f.a), std::abs(f.b)) != 1) {
            os << "fiber " << k + 1 << ": gcd(" << f.a << "," << f.b << ") != 1";
            rep.violations.push_back(os.str());
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

void require_valid(const SeifertInvariants& inv) {
    ValidationReport rep = validate(inv);
    if (rep.ok) return;
    std::string msg = "invalid Seifert invariants:";
    for (const std::string& v : rep.violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
}

long long genus_prime(TypeSymbol t, long long g) { return orientable_base(t) ? 2 * g : g; }

std::vector<int> epsilon_vector(const SeifertInvariants& inv) {
    require_valid(inv);
    long long gp = genus_prime(inv.type, inv.g);
    std::vector<int> eps(static_cast<size_t>(gp), -1);
    switch (inv.type) {
        case TypeSymbol::o1:
        case TypeSymbol::n1:
            for (int& x : eps) x = 1;
            break;
        case TypeSymbol::o2:
        case TypeSymbol::n2:
            break;
        case TypeSymbol::n4:
            eps[1] = 1;
            [[fallthrough]];
        case TypeSymbol::n3:
            eps[0] = 1;
            break;
    }
    return eps;
}

Presentation fundamental_presentation(const SeifertInvariants& inv) {
    require_valid(inv);
    const long long n = static_cast<long long>(inv.fibers.size());
    const long long gp = genus_prime(inv.type, inv.g);
    const Generator h{GenClass::h, 1};

    Presentation p;
    for (long long k = 1; k <= n; ++k) p.generators.push_back({GenClass::s, (int)k});
    for (long long j = 1; j <= gp; ++j) p.generators.push_back({GenClass::v, (int)j});
    p.generators.push_back(h);

    std::vector<int> eps = epsilon_vector(inv);
    for (long long k = 1; k <= n; ++k) {
        Word s = letter({GenClass::s, (int)k});
        p.relators.push_back(commutator(s, letter(h)));
        p.relators.push_back(mul(letter({GenClass::s, (int)k}, inv.fibers[k - 1].a),
                                 letter(h, inv.fibers[k - 1].b)));
    }
    for (long long j = 1; j <= gp; ++j) {
        Word v = letter({GenClass::v, (int)j});
        p.relators.push_back(mul(v, letter(h), winv(v), letter(h, -eps[j - 1])));
    }
    Word longrel = letter(h, -inv.e);
    for (long long k = 1; k <= n; ++k) longrel = mul(longrel, letter({GenClass::s, (int)k}));
    if (orientable_base(inv.type)) {
        for (long long i = 0; i < inv.g; ++i)
            longrel = mul(longrel, commutator(letter({GenClass::v, (int)(2 * i + 1)}),
                                              letter({GenClass::v, (int)(2 * i + 2)})));
    } else {
        for (long long j = 1; j <= gp; ++j)
            longrel = mul(longrel, letter({GenClass::v, (int)j}, 2));
    }
    p.relators.push_back(longrel);
    return p;
}

std::vector<FiberPair> build_FOC(const std::vector<FiberPair>& fibers) {
    std::vector<FiberPair> out;
    out.reserve(2 * fibers.size());
    for (const FiberPair& f : fibers) {
        out.push_back(f);
        out.push_back({f.a, -f.b});
    }
    return out;
}

std::vector<FiberPair> build_Fm(const std::vector<FiberPair>& fibers, long long m) {
    if (m < 0 || m > static_cast<long long>(fibers.size()))
        throw std::invalid_argument("build_Fm: m out of range");
    std::vector<FiberPair> out;
    for (long long k = 0; k < static_cast<long long>(fibers.size()); ++k) {
        const FiberPair& f = fibers[(size_t)k];
        if (k < m) {
            if (f.a % 2 != 0) throw std::invalid_argument("build_Fm: odd multiplicity in halved prefix");
            out.push_back({f.a / 2, f.b});
        } else {
            out.push_back(f);
            out.push_back(f);
        }
    }
    return out;
}

cpp_rational euler_number(const SeifertInvariants& inv) {
    require_valid(inv);
    cpp_rational r(inv.e);
    // b/a with the sign carried by the numerator; the constructor rejects
    // negative denominators.
    for (const FiberPair& f : inv.fibers)
        r += cpp_rational(f.a < 0 ? -f.b : f.b, std::abs(f.a));
    return r;
}

cpp_rational chi_orb(const SeifertInvariants& inv) {
    require_valid(inv);
    cpp_rational r(orientable_base(inv.type) ? 2 - 2 * inv.g : 2 - inv.g);
    for (const FiberPair& f : inv.fibers) {
        long long a = std::abs(f.a);
        r -= cpp_rational(a - 1, a);
    }
    return r;
}

SeifertInvariants normalize_fiber_signs(const SeifertInvariants& inv) {
    if (orientable_total(inv.type))
        throw std::invalid_argument(
            "normalize_fiber_signs: sign flip is only legal for non-orientable total space");
    SeifertInvariants out = inv;
    for (FiberPair& f : out.fibers)
        if (f.b < 0) f.b = -f.b;
    return out;
}

}  // namespace seifcov
