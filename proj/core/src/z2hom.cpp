#include "seifcov/z2hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifcov {

int hom_at(const Z2Hom& phi, Generator g) {
    auto it = phi.find(g);
    if (it == phi.end()) throw std::invalid_argument("homomorphism undefined on " + render(g));
    return it->second;
}

GF2Matrix constraint_matrix(const Presentation& p) {
    check_well_formed(p);
    std::map<Generator, size_t> col;
    for (size_t j = 0; j < p.generators.size(); ++j) col[p.generators[j]] = j;
    GF2Matrix M;
    M.rows = p.relators.size();
    M.cols = p.generators.size();
    M.m.assign(M.rows, std::vector<uint8_t>(M.cols, 0));
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (const Syllable& s : p.relators[i])
            M.m[i][col[s.g]] ^= static_cast<uint8_t>(((s.e % 2) + 2) % 2);
    return M;
}

std::vector<std::vector<uint8_t>> gf2_nullspace(const GF2Matrix& M) {
    std::vector<std::vector<uint8_t>> rows = M.m;
    const size_t n = M.cols;
    std::vector<size_t> pivot_row(n, SIZE_MAX);
    size_t rank = 0;
    for (size_t c = 0; c < n; ++c) {
        size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][c])
                for (size_t j = 0; j < n; ++j) rows[i][j] ^= rows[rank][j];
        pivot_row[c] = rank;
        ++rank;
    }
    std::vector<std::vector<uint8_t>> basis;
    for (size_t f = 0; f < n; ++f) {
        if (pivot_row[f] != SIZE_MAX) continue;
        std::vector<uint8_t> v(n, 0);
        v[f] = 1;
        for (size_t c = 0; c < n; ++c)
            if (pivot_row[c] != SIZE_MAX && rows[pivot_row[c]][f]) v[c] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Z2Hom> enumerate_epimorphisms(const Presentation& p) {
    GF2Matrix M = constraint_matrix(p);
    std::vector<std::vector<uint8_t>> basis = gf2_nullspace(M);
    if (basis.size() > 20)
        throw std::runtime_error("enumerate_epimorphisms: more than 2^20 candidate solutions");
    const size_t n = M.cols;
    std::vector<std::vector<uint8_t>> sols;
    for (uint64_t mask = 1; mask < (uint64_t(1) << basis.size()); ++mask) {
        std::vector<uint8_t> v(n, 0);
        for (size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1)
                for (size_t j = 0; j < n; ++j) v[j] ^= basis[i][j];
        sols.push_back(std::move(v));
    }
    std::sort(sols.begin(), sols.end());
    std::vector<Z2Hom> out;
    out.reserve(sols.size());
    for (const auto& v : sols) {
        Z2Hom phi;
        for (size_t j = 0; j < n; ++j) phi[p.generators[j]] = v[j];
        out.push_back(std::move(phi));
    }
    return out;
}

bool is_valid(const Presentation& p, const Z2Hom& phi) {
    if (phi.size() != p.generators.size()) return false;
    bool nonzero = false;
    for (Generator g : p.generators) {
        auto it = phi.find(g);
        if (it == phi.end() || (it->second != 0 && it->second != 1)) return false;
        nonzero |= it->second == 1;
    }
    if (!nonzero) return false;
    for (const Word& r : p.relators) {
        long long weight = 0;
        for (const Syllable& s : r) weight += s.e * phi.at(s.g);
        if (((weight % 2) + 2) % 2 != 0) return false;
    }
    return true;
}

void require_epimorphism(const Presentation& p, const Z2Hom& phi) {
    if (!is_valid(p, phi))
        throw std::invalid_argument("not a valid Z/2 epimorphism for this presentation");
}

}  // namespace seifcov
