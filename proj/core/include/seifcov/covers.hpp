#pragma once
// Closed-form double covers: classify (invariants, phi) and emit the cover's
// Seifert invariants without running the rewriting engine.

#include <utility>

#include "seifcov/seifert.hpp"
#include "seifcov/z2hom.hpp"

namespace seifcov {

enum class CoverTag { FiberCase, BaseOrdinary, BaseExotic, BaseOrientationCover };

const char* cover_tag_name(CoverTag t);

struct CoverCase {
    CoverTag tag;
    long long m = 0;  // #{k : phi(s_k) = 1}; even whenever phi(h) = 0
    long long r = 0;  // #{j : phi(v_j) = 1}
    int mprime = 0;   // FiberCase only, normalized into {0,1}
};

// FiberCase iff phi(h) = 1. Otherwise, with m = #{phi(s_k)=1}: m > 0 is
// BaseOrdinary (the v-bits are irrelevant there); for m = 0 the marked-v set
// decides between the orientation cover, the exotic cases, and the rest.
CoverCase classify(const SeifertInvariants& inv, const Z2Hom& phi);

// Stable permutation putting the phi(s_k) = 1 fibers first, with phi's s-bits
// permuted in lockstep. Requires phi(h) = 0.
std::pair<SeifertInvariants, Z2Hom> reorder_for_phi(const SeifertInvariants& inv,
                                                    const Z2Hom& phi);

// phi(h) = 1: the kernel unwraps the fiber. Asserts the derivable side
// conditions (all a_k odd; phi(s_k) = b_k mod 2; e + #odd-b even) and
// throws std::logic_error if any fails - the constraint solver precludes it.
SeifertInvariants cover_fiber_case(const SeifertInvariants& inv, const Z2Hom& phi);

// phi(h) = 0 on an already reordered input: emits the orientation-cover,
// exotic, or ordinary answer. One refinement over the blanket ordinary rule:
// for types n3/n4 with m = 0 and the marked-v set equal to the set of
// fiber-reversing loops {j : eps_j = -1}, the cover's sign pattern is all-plus
// and the emitted type is n1 with genus 2g-2 (the n4 form would be wrong
// there, and for n3 with g = 2 not even a legal symbol). Non-orientable
// outputs are passed through normalize_fiber_signs.
SeifertInvariants cover_base_case(const SeifertInvariants& inv, const Z2Hom& phi);

// Dispatcher: cover_fiber_case, or reorder_for_phi + cover_base_case.
SeifertInvariants double_cover(const SeifertInvariants& inv, const Z2Hom& phi);

}  // namespace seifcov
