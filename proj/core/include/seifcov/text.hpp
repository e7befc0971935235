#pragma once
// Textual forms: the invariant symbol grammar {E;(T,G);(A,B),...}, the
// gen=bit homomorphism lists, and H1 rendering.

#include <stdexcept>
#include <string>
#include <string_view>

#include "seifcov/abelian.hpp"
#include "seifcov/seifert.hpp"
#include "seifcov/z2hom.hpp"

namespace seifcov {

struct ParseError : std::runtime_error {
    size_t pos;  // byte offset into the input
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

std::string to_string(TypeSymbol t);

// Grammar: '{' E ';' '(' T ',' G ')' ';' [pairs] '}' with pairs a comma list
// of '(' A ',' B ')'. Whitespace is insignificant. Semantic validity is the
// caller's concern (validate); only syntax is rejected here.
SeifertInvariants parse_seifert(std::string_view text);

// Canonical form, no whitespace: {-1;(o1,0);(2,1),(3,1)} or {0;(n3,2);}.
std::string print_seifert(const SeifertInvariants& inv);

// Comma list of gen=bit; unlisted generators default to 0; names must be
// generators of p; bits must be 0 or 1. Empty text is the zero map.
Z2Hom parse_hom(std::string_view text, const Presentation& p);

// Only the bits set to 1, in generator order: "s1=1,s2=1,h=1".
std::string print_hom(const Z2Hom& phi);

// "Z^2 + Z/2 + Z/4"; "Z" for rank one; "0" for the trivial group.
std::string print_h1(const H1Invariants& h);

}  // namespace seifcov
