#include "seifcov/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifcov {

namespace {

constexpr long long kMaxSyllableExp = 99;

size_t position_of(const Presentation& p, Generator g) {
    auto it = std::find(p.generators.begin(), p.generators.end(), g);
    if (it == p.generators.end())
        throw std::invalid_argument("transversal generator not in presentation");
    return static_cast<size_t>(it - p.generators.begin());
}

// Kernel generator name for (coset, base position): y_i / z_i, 1-based.
Generator kernel_name(int coset, size_t pos) {
    return {coset == 0 ? GenClass::y : GenClass::z, static_cast<int>(pos + 1)};
}

}  // namespace

Transversal default_transversal(const Presentation& p, const Z2Hom& phi) {
    require_epimorphism(p, phi);
    for (Generator g : p.generators)
        if (g.cls == GenClass::h && hom_at(phi, g) == 1) return {g};
    for (Generator g : p.generators)
        if (hom_at(phi, g) == 1) return {g};
    throw std::invalid_argument("no generator with phi = 1");  // unreachable: phi is onto
}

std::vector<Transversal> admissible_transversals(const Presentation& p, const Z2Hom& phi) {
    require_epimorphism(p, phi);
    std::vector<Transversal> out;
    for (Generator g : p.generators)
        if (hom_at(phi, g) == 1) out.push_back({g});
    return out;
}

std::vector<SchreierGenerator> schreier_generators(const Presentation& p, const Z2Hom& phi,
                                                   const Transversal& t) {
    require_epimorphism(p, phi);
    if (hom_at(phi, t.q) != 1) throw std::invalid_argument("transversal must have phi(q) = 1");
    position_of(p, t.q);

    std::vector<SchreierGenerator> out;
    const Word q = letter(t.q);
    for (size_t i = 0; i < p.generators.size(); ++i) {
        const Generator x = p.generators[i];
        const Word xw = letter(x);
        for (int coset : {0, 1}) {
            if (coset == 0 && x == t.q) continue;  // the single trivial one
            // u x rep(u x)^-1 with u = 1 or q and rep() in {1, q} by parity.
            Word u = coset == 0 ? Word{} : q;
            int image = (coset + hom_at(phi, x)) % 2;
            Word rep = image == 0 ? Word{} : q;
            out.push_back({coset, x, kernel_name(coset, i), mul(u, xw, winv(rep))});
        }
    }
    return out;
}

Word rewrite_relator(const Presentation& p, const Z2Hom& phi, const Transversal& t,
                     const Word& r, int coset) {
    if (hom_at(phi, t.q) != 1) throw std::invalid_argument("transversal must have phi(q) = 1");
    const size_t qpos = position_of(p, t.q);
    std::map<Generator, size_t> pos;
    for (size_t i = 0; i < p.generators.size(); ++i) pos[p.generators[i]] = i;

    Word out;
    int c = coset;
    for (const Syllable& s : r) {
        if (std::abs(s.e) > kMaxSyllableExp)
            throw std::runtime_error("rewrite_relator: syllable exponent beyond 99");
        auto it = pos.find(s.g);
        if (it == pos.end())
            throw std::invalid_argument("rewrite_relator: undeclared generator " + render(s.g));
        const size_t i = it->second;
        const int bit = hom_at(phi, s.g);
        for (long long k = 0; k < std::abs(s.e); ++k) {
            if (s.e > 0) {
                // gamma(c, x), then advance the coset.
                if (!(c == 0 && i == qpos)) out.push_back({kernel_name(c, i), 1});
                c ^= bit;
            } else {
                // Reading x^-1 from coset c lands on c^bit; the contributed
                // generator is gamma(c^bit, x)^-1.
                c ^= bit;
                if (!(c == 0 && i == qpos)) out.push_back({kernel_name(c, i), -1});
            }
        }
    }
    if (c != coset)
        throw std::logic_error("rewrite_relator: word does not lie in the kernel");
    return free_reduce(out);
}

Presentation kernel_presentation(const Presentation& p, const Z2Hom& phi,
                                 std::optional<Transversal> t, bool simplify) {
    require_epimorphism(p, phi);
    const Transversal tv = t ? *t : default_transversal(p, phi);

    Presentation k;
    for (const SchreierGenerator& sg : schreier_generators(p, phi, tv))
        k.generators.push_back(sg.kgen);
    for (const Word& r : p.relators)
        for (int coset : {0, 1}) k.relators.push_back(rewrite_relator(p, phi, tv, r, coset));
    return simplify ? tietze_simplify(k) : k;
}

}  // namespace seifcov
