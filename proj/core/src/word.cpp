#include "seifcov/word.hpp"

#include <sstream>
#include <stdexcept>

namespace seifcov {

const char* gen_class_name(GenClass c) {
    switch (c) {
        case GenClass::s: return "s";
        case GenClass::v: return "v";
        case GenClass::h: return "h";
        case GenClass::x: return "x";
        case GenClass::y: return "y";
        case GenClass::z: return "z";
        case GenClass::t: return "t";
        case GenClass::u: return "u";
        case GenClass::w: return "w";
        case GenClass::g: return "g";
        case GenClass::a: return "a";
        case GenClass::b: return "b";
        case GenClass::c: return "c";
        case GenClass::d: return "d";
    }
    return "?";
}

Word letter(Generator g, long long e) {
    if (e == 0) return {};
    return {Syllable{g, e}};
}

// Stack-based reduction: the stack is reduced at all times, so one pass
// over the input suffices (a cancellation exposes the previous syllable,
// which the next push merges with).
Word free_reduce(const Word& w) {
    Word out;
    for (const Syllable& s : w) {
        if (s.e == 0) continue;
        if (!out.empty() && out.back().g == s.g) {
            out.back().e += s.e;
            if (out.back().e == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

Word mul(const Word& a, const Word& b) {
    Word out = free_reduce(a);
    for (const Syllable& s : b) {
        if (s.e == 0) continue;
        if (!out.empty() && out.back().g == s.g) {
            out.back().e += s.e;
            if (out.back().e == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

Word winv(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->g, -it->e});
    return out;
}

Word power(const Word& w, long long n) {
    if (n < 0) return power(winv(w), -n);
    Word out;
    for (long long i = 0; i < n; ++i) out = mul(out, w);
    return out;
}

Word commutator(const Word& a, const Word& b) { return mul(a, b, winv(a), winv(b)); }

long long exponent_sum(const Word& w, Generator g) {
    long long sum = 0;
    for (const Syllable& s : w)
        if (s.g == g) sum += s.e;
    return sum;
}

Word substitute(const Word& w, const std::map<Generator, Word>& map) {
    Word out;
    for (const Syllable& s : w) {
        auto it = map.find(s.g);
        if (it == map.end())
            throw std::invalid_argument("substitute: unmapped generator " + render(s.g));
        out = mul(out, power(it->second, s.e));
    }
    return out;
}

std::string render(Generator g) {
    std::string name = gen_class_name(g.cls);
    if (g.cls == GenClass::h) return name;  // unique generator, index implicit
    return name + std::to_string(g.index);
}

std::string render(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Syllable& s : w) {
        if (!first) os << ' ';
        first = false;
        os << render(s.g);
        if (s.e != 1) os << '^' << s.e;
    }
    return os.str();
}

}  // namespace seifcov
