#pragma once
// Seifert invariant symbols {e;(type,g);(a1,b1),...}, their validity rules,
// the fundamental-group presentation template, fiber-list constructors for
// double covers, and exact orbifold numerics.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "seifcov/presentation.hpp"

namespace seifcov {

using boost::multiprecision::cpp_rational;

// Joint orientability class of base and total space; fixes the pattern of
// fiber-reversing base loops (the epsilon signs) and the genus floor.
enum class TypeSymbol { o1, o2, n1, n2, n3, n4 };

inline constexpr TypeSymbol all_types[] = {TypeSymbol::o1, TypeSymbol::o2, TypeSymbol::n1,
                                           TypeSymbol::n2, TypeSymbol::n3, TypeSymbol::n4};

bool orientable_base(TypeSymbol t);       // o1, o2
bool orientable_total(TypeSymbol t);      // o1, n2
long long genus_min(TypeSymbol t);        // 0,1,1,1,2,3

struct FiberPair {
    long long a;  // nonzero multiplicity, either sign
    long long b;  // coprime to a

    auto operator<=>(const FiberPair&) const = default;
};

struct SeifertInvariants {
    long long e = 0;
    TypeSymbol type = TypeSymbol::o1;
    long long g = 0;  // base genus
    std::vector<FiberPair> fibers;

    auto operator<=>(const SeifertInvariants&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Report-style: accepts raw parsed data, never throws.
ValidationReport validate(const SeifertInvariants& inv);

// Throws std::invalid_argument listing the violations when validate fails.
void require_valid(const SeifertInvariants& inv);

// Number of base-surface generators: 2g for orientable base, g otherwise.
long long genus_prime(TypeSymbol t, long long g);

// The +-1 signs of the v_j conjugation relators, by type table.
std::vector<int> epsilon_vector(const SeifertInvariants& inv);

// Generators s1..sn, v1..v_{g'}, h; relators [s_k,h], s_k^{a_k} h^{b_k},
// v_j h v_j^-1 h^{-eps_j}, and h^{-e} s1..sn V with V the commutator product
// (orientable base) or the square product (non-orientable base). The long
// relator is kept even when it reduces to the empty word.
Presentation fundamental_presentation(const SeifertInvariants& inv);

// (a1,b1),(a1,-b1),...,(an,bn),(an,-bn)
std::vector<FiberPair> build_FOC(const std::vector<FiberPair>& fibers);

// First m pairs halved in a (requires a even there), rest duplicated in place.
std::vector<FiberPair> build_Fm(const std::vector<FiberPair>& fibers, long long m);

// e + sum b_k/a_k, exact.
cpp_rational euler_number(const SeifertInvariants& inv);

// (2-2g or 2-g) - sum (1 - 1/|a_k|), exact.
cpp_rational chi_orb(const SeifertInvariants& inv);

// Replaces each (a,-b) with b>0 ... i.e. each pair with negative b entry ...
// by (a,|b|). Legal only when the total space is non-orientable (o2,n1,n3,n4);
// throws std::invalid_argument otherwise.
SeifertInvariants normalize_fiber_signs(const SeifertInvariants& inv);

}  // namespace seifcov
