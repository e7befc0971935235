#pragma once
// Constructive free-group identities used by the cover proofs, packaged as
// substitution certificates and certified by free reduction.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seifcov/word.hpp"

namespace seifcov {

struct SubstitutionCertificate {
    std::vector<std::pair<std::string, Word>> new_generators;  // label -> defining word
    Word lhs, rhs;
    std::map<Generator, int> character;  // +-1 per base letter; empty when signs play no role
    std::vector<std::pair<std::string, int>> expected_signs;   // label -> +-1
    size_t commutator_count = 0;
};

// Product of the character over the letters of odd exponent.
int word_sign(const Word& w, const std::map<Generator, int>& character);

// lhs rhs^-1 freely reduces to the empty word and every expected sign matches.
bool certify(const SubstitutionCertificate& cert);

// g1...g_{2k+1} g1^-1...g_{2k+1}^-1 as a product of k commutators.
SubstitutionCertificate conjugate_product_to_commutators(long long k);

// (a1 b1 c1 d1)...(ak bk ck dk)(c1^-1 d1^-1 a1^-1 b1^-1)... as 2k commutators.
SubstitutionCertificate interleaved_product_to_commutators(long long k);

enum class SurfaceCase {
    CommToSquares,         // [x,y] z^2 = u^2 v^2 w^2, all three new signs -1
    OrientCommutators,     // [x,y][z,t] = [x',y'][z',t'], all four new signs -1
    FourSquaresNormalize,  // t^2 u^2 v^2 w^2 re-based; signs +1,-1,-1,-1
};

SubstitutionCertificate surface_word_substitution(SurfaceCase c);

}  // namespace seifcov
