#include "seifcov/abelian.hpp"

#include <cstdlib>
#include <map>

namespace seifcov {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix exponent_matrix(const Presentation& p) {
    check_well_formed(p);
    std::map<Generator, size_t> col;
    for (size_t j = 0; j < p.generators.size(); ++j) col[p.generators[j]] = j;
    IntMatrix m(p.relators.size(), p.generators.size());
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (const Syllable& s : p.relators[i]) m.at(i, col[s.g]) += s.e;
    return m;
}

namespace {

void row_sub(IntMatrix& m, size_t dst, size_t src, const cpp_int& q) {
    for (size_t j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_sub(IntMatrix& m, size_t dst, size_t src, const cpp_int& q) {
    for (size_t i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<cpp_int> smith_normal_form(IntMatrix m) {
    const size_t lim = std::min(m.rows, m.cols);
    size_t t = 0;
    while (t < lim) {
        // Least-absolute-value pivot in the trailing submatrix keeps entry
        // growth in check; truncated-division sweeps strictly shrink it,
        // so the clearing loop terminates.
        size_t pi = m.rows, pj = m.cols;
        for (size_t i = t; i < m.rows; ++i)
            for (size_t j = t; j < m.cols; ++j)
                if (m.at(i, j) != 0 &&
                    (pi == m.rows || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m.rows) break;
        swap_rows(m, t, pi);
        swap_cols(m, t, pj);

        bool again = false;
        for (size_t i = t + 1; i < m.rows; ++i)
            if (m.at(i, t) != 0) {
                cpp_int q = m.at(i, t) / m.at(t, t);
                row_sub(m, i, t, q);
                if (m.at(i, t) != 0) again = true;
            }
        for (size_t j = t + 1; j < m.cols; ++j)
            if (m.at(t, j) != 0) {
                cpp_int q = m.at(t, j) / m.at(t, t);
                col_sub(m, j, t, q);
                if (m.at(t, j) != 0) again = true;
            }
        if (again) continue;  // smaller remainders exist; re-pick the pivot
        ++t;
    }

    std::vector<cpp_int> d;
    for (size_t i = 0; i < t; ++i) d.push_back(abs(m.at(i, i)));

    // Diagonal to divisibility chain: replace adjacent (a,b) by (gcd,lcm).
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] == 0 && d[i + 1] != 0) {
                std::swap(d[i], d[i + 1]);
                changed = true;
            } else if (d[i] != 0 && d[i + 1] % d[i] != 0) {
                cpp_int g = gcd(d[i], d[i + 1]);
                cpp_int l = d[i] / g * d[i + 1];
                d[i] = g;
                d[i + 1] = l;
                changed = true;
            }
        }
    }
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

H1Invariants h1(const Presentation& p) {
    std::vector<cpp_int> d = smith_normal_form(exponent_matrix(p));
    H1Invariants out;
    out.rank = static_cast<long long>(p.generators.size()) - static_cast<long long>(d.size());
    for (const cpp_int& x : d)
        if (x > 1) out.torsion.push_back(x);
    return out;
}

long long h1_z2_dim(const Presentation& p) {
    IntMatrix m = exponent_matrix(p);
    std::vector<std::vector<uint8_t>> rows(m.rows, std::vector<uint8_t>(m.cols));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) rows[i][j] = static_cast<uint8_t>(abs(m.at(i, j)) % 2);
    size_t rank = 0;
    for (size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        size_t piv = rank;
        while (piv < m.rows && rows[piv][c] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < m.rows; ++i)
            if (i != rank && rows[i][c])
                for (size_t j = 0; j < m.cols; ++j) rows[i][j] ^= rows[rank][j];
        ++rank;
    }
    return static_cast<long long>(m.cols) - static_cast<long long>(rank);
}

}  // namespace seifcov
