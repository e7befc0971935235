#include "seifcov/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace seifcov {

bool Presentation::declares(Generator g) const {
    return std::find(generators.begin(), generators.end(), g) != generators.end();
}

void check_well_formed(const Presentation& p) {
    for (const Word& r : p.relators)
        for (const Syllable& s : r)
            if (!p.declares(s.g))
                throw std::invalid_argument("presentation: undeclared generator " + render(s.g));
}

namespace {

int occurrence_count(const Word& r, Generator g) {
    int n = 0;
    for (const Syllable& s : r)
        if (s.g == g) ++n;
    return n;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
    check_well_formed(p);
    Presentation q;
    q.generators = p.generators;
    for (const Word& r : p.relators) q.relators.push_back(free_reduce(r));

    const size_t max_rounds = p.generators.size();
    for (size_t round = 0; round <= max_rounds; ++round) {
        std::erase_if(q.relators, [](const Word& r) { return r.empty(); });
        if (round == max_rounds) break;

        // Find a relator with a generator occurring in exactly one syllable,
        // exponent +-1. Among qualifying generators of the first such relator,
        // eliminate the latest-declared one (keeps primary generators alive).
        size_t ri = q.relators.size();
        size_t best_pos = 0, best_rank = 0;
        bool found = false;
        for (size_t i = 0; i < q.relators.size() && !found; ++i) {
            const Word& r = q.relators[i];
            for (size_t pos = 0; pos < r.size(); ++pos) {
                const Syllable& s = r[pos];
                if ((s.e != 1 && s.e != -1) || occurrence_count(r, s.g) != 1) continue;
                size_t rank = std::find(q.generators.begin(), q.generators.end(), s.g) -
                              q.generators.begin();
                if (!found || rank > best_rank) {
                    found = true;
                    ri = i;
                    best_pos = pos;
                    best_rank = rank;
                }
            }
        }
        if (!found) break;

        // r is conjugate to x^d (v u) with x absent from u, v; solve for x.
        const Word r = q.relators[ri];
        const Generator x = r[best_pos].g;
        const long long d = r[best_pos].e;
        Word u(r.begin(), r.begin() + best_pos);
        Word v(r.begin() + best_pos + 1, r.end());
        Word vu = mul(v, u);
        Word image = (d == 1) ? winv(vu) : vu;

        std::map<Generator, Word> map;
        for (Generator g : q.generators) map[g] = letter(g);
        map[x] = image;

        Presentation next;
        for (Generator g : q.generators)
            if (!(g == x)) next.generators.push_back(g);
        for (size_t i = 0; i < q.relators.size(); ++i) {
            if (i == ri) continue;
            next.relators.push_back(substitute(q.relators[i], map));
        }
        q = std::move(next);
    }
    return q;
}

std::string render(const Presentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (Generator g : p.generators) os << ' ' << render(g);
    os << "\nrelators:";
    for (const Word& r : p.relators) os << "\n  " << render(r);
    return os.str();
}

}  // namespace seifcov
