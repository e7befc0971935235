#pragma once
// Words in a free group: lists of (generator, exponent) syllables.

#include <cstdint>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace seifcov {

// Generator classes. s, v, h are the Seifert presentation classes; the rest
// are synthetic (kernel generators, identity-certificate letters). The enum order
// fixes the sort order of generators, which in turn fixes deterministic
// iteration of homomorphism maps: s's, then v's, then h, then synthetics.
enum class GenClass : uint8_t { s, v, h, x, y, z, t, u, w, g, a, b, c, d };

const char* gen_class_name(GenClass c);

struct Generator {
    GenClass cls;
    int index;  // 1-based; h is always {h, 1} and renders without the index

    auto operator<=>(const Generator&) const = default;
};

struct Syllable {
    Generator g;
    long long e;  // nonzero in reduced words

    auto operator<=>(const Syllable&) const = default;
};

using Word = std::vector<Syllable>;

// Convenience single-syllable word; e may be any integer (0 gives the empty word).
Word letter(Generator g, long long e = 1);

// Freely reduced form: no zero exponents, no adjacent syllables on the same
// generator. Idempotent; length-nonincreasing.
Word free_reduce(const Word& w);

Word mul(const Word& a, const Word& b);
template <class... Ws>
Word mul(const Word& a, const Word& b, const Ws&... rest) {
    Word acc = mul(a, b);
    ((acc = mul(acc, rest)), ...);
    return acc;
}

Word winv(const Word& w);
Word power(const Word& w, long long n);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

long long exponent_sum(const Word& w, Generator g);

// Homomorphic image of w under gen -> word; freely reduced.
// Throws std::invalid_argument if some generator of w is unmapped.
Word substitute(const Word& w, const std::map<Generator, Word>& map);

// Debug rendering: "s1^2 h^-1 v1"; empty word renders as "1".
std::string render(Generator g);
std::string render(const Word& w);

}  // namespace seifcov
