#pragma once
// Reidemeister-Schreier rewriting for index-2 subgroups: the independent
// oracle against which the closed-form cover answers are checked.

#include <optional>
#include <vector>

#include "seifcov/presentation.hpp"
#include "seifcov/z2hom.hpp"

namespace seifcov {

// Coset representatives are {1, q} with phi(q) = 1.
struct Transversal {
    Generator q;
};

// Default transversal: the h generator when phi(h) = 1, else the first
// generator in presentation order with phi = 1 (for Seifert presentations
// that is the first marked s, else the first marked v).
Transversal default_transversal(const Presentation& p, const Z2Hom& phi);

// All generators usable as q.
std::vector<Transversal> admissible_transversals(const Presentation& p, const Z2Hom& phi);

struct SchreierGenerator {
    int coset;       // 0 or 1: representative 1 or q
    Generator base;  // the generator x being traversed
    Generator kgen;  // the kernel generator's name (y_i for coset 0, z_i for coset 1)
    Word word;       // u x rep(u x)^-1 over the base generators
};

// One Schreier generator per (coset, base generator), minus the trivial
// (coset 0, q): 2 |generators| - 1 in total, in paired order y_i, z_i.
std::vector<SchreierGenerator> schreier_generators(const Presentation& p, const Z2Hom& phi,
                                                   const Transversal& t);

// Reidemeister rewriting of u r u^-1 as a freely reduced word in the Schreier
// generators (trivial ones dropped). coset selects u in {1, q}.
// Relators are processed letter by letter; syllables with |exponent| > 99 are
// rejected with std::runtime_error.
Word rewrite_relator(const Presentation& p, const Z2Hom& phi, const Transversal& t,
                     const Word& r, int coset);

// Presentation of ker(phi) on the 2G-1 Schreier generators with the 2R
// rewritten relators; unsimplified unless simplify is set.
Presentation kernel_presentation(const Presentation& p, const Z2Hom& phi,
                                 std::optional<Transversal> t = std::nullopt,
                                 bool simplify = false);

}  // namespace seifcov
