#pragma once
// Integer abelianization: exponent matrices, Smith normal form, H1 invariants.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "seifcov/presentation.hpp"

namespace seifcov {

using boost::multiprecision::cpp_int;

// Dense, arbitrary precision. Rows are relators, columns generators.
struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<cpp_int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    cpp_int& at(size_t r, size_t c) { return a[r * cols + c]; }
    const cpp_int& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

IntMatrix exponent_matrix(const Presentation& p);

// Nonzero invariant factors d1 | d2 | ..., all positive, units included;
// zero rows/columns contribute nothing (the zero matrix yields an empty list).
std::vector<cpp_int> smith_normal_form(IntMatrix m);

struct H1Invariants {
    long long rank = 0;
    std::vector<cpp_int> torsion;  // entries > 1, divisibility chain

    auto operator<=>(const H1Invariants&) const = default;
};

// Cokernel invariants of the exponent matrix: rank = #generators - #factors,
// torsion = the factors > 1.
H1Invariants h1(const Presentation& p);

// dim over GF(2) of H1 tensor Z/2 = #generators - rank_2(exponent matrix).
long long h1_z2_dim(const Presentation& p);

}  // namespace seifcov
