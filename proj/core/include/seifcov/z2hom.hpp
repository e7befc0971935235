#pragma once
// Homomorphisms pi_1 -> Z/2 from relator exponent sums over GF(2).

#include <cstdint>
#include <map>
#include <vector>

#include "seifcov/presentation.hpp"

namespace seifcov {

// Bit per generator; valid homomorphisms are defined on exactly the
// presentation's generator list.
using Z2Hom = std::map<Generator, int>;

// Lookup that insists the generator is present.
int hom_at(const Z2Hom& phi, Generator g);

struct GF2Matrix {
    size_t rows = 0, cols = 0;                // rows = relators, cols = generators
    std::vector<std::vector<uint8_t>> m;
};

// Entry (r,g) = exponent_sum(relator r, generator g) mod 2. A bit assignment
// kills every relator iff it solves M x = 0.
GF2Matrix constraint_matrix(const Presentation& p);

// Deterministic nullspace basis (reduced echelon, free columns ascending).
std::vector<std::vector<uint8_t>> gf2_nullspace(const GF2Matrix& M);

// All 2^d - 1 nonzero solutions as homomorphisms, sorted lexicographically in
// the presentation's generator order. Throws std::runtime_error if d > 20.
std::vector<Z2Hom> enumerate_epimorphisms(const Presentation& p);

// True iff phi is defined on exactly p's generators, is not identically zero,
// and every relator has even phi-weighted exponent sum.
bool is_valid(const Presentation& p, const Z2Hom& phi);

// Throws std::invalid_argument when is_valid fails.
void require_epimorphism(const Presentation& p, const Z2Hom& phi);

}  // namespace seifcov
