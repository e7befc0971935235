#include "seifcov/text.hpp"

#include <cctype>
#include <sstream>

namespace seifcov {

std::string to_string(TypeSymbol t) {
    switch (t) {
        case TypeSymbol::o1: return "o1";
        case TypeSymbol::o2: return "o2";
        case TypeSymbol::n1: return "n1";
        case TypeSymbol::n2: return "n2";
        case TypeSymbol::n3: return "n3";
        case TypeSymbol::n4: return "n4";
    }
    return "?";
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    bool accept(char c) {
        if (done() || text[pos] != c) return false;
        ++pos;
        return true;
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        bool neg = accept('-');
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            throw ParseError("expected integer", pos);
        long long val = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            val = val * 10 + (text[pos] - '0');
            if (val > 1000000000) throw ParseError("integer too large", start);
            ++pos;
        }
        return neg ? -val : val;
    }
    TypeSymbol type_token() {
        skip_ws();
        size_t start = pos;
        std::string tok;
        while (pos < text.size() && std::isalnum((unsigned char)text[pos])) tok += text[pos++];
        for (TypeSymbol t : all_types)
            if (tok == to_string(t)) return t;
        throw ParseError("expected type symbol o1|o2|n1|n2|n3|n4, got '" + tok + "'", start);
    }
};

}  // namespace

SeifertInvariants parse_seifert(std::string_view text) {
    Cursor c{text};
    SeifertInvariants inv;
    c.expect('{');
    inv.e = c.integer();
    c.expect(';');
    c.expect('(');
    inv.type = c.type_token();
    c.expect(',');
    inv.g = c.integer();
    c.expect(')');
    c.expect(';');
    if (c.peek() != '}') {
        for (;;) {
            c.expect('(');
            long long a = c.integer();
            c.expect(',');
            long long b = c.integer();
            c.expect(')');
            inv.fibers.push_back({a, b});
            if (c.peek() == ',') {
                c.expect(',');
                continue;
            }
            break;
        }
    }
    c.expect('}');
    if (!c.done()) throw ParseError("trailing characters after symbol", c.pos);
    return inv;
}

std::string print_seifert(const SeifertInvariants& inv) {
    std::ostringstream os;
    os << '{' << inv.e << ";(" << to_string(inv.type) << ',' << inv.g << ");";
    for (size_t k = 0; k < inv.fibers.size(); ++k) {
        if (k) os << ',';
        os << '(' << inv.fibers[k].a << ',' << inv.fibers[k].b << ')';
    }
    os << '}';
    return os.str();
}

Z2Hom parse_hom(std::string_view text, const Presentation& p) {
    Z2Hom phi;
    for (Generator g : p.generators) phi[g] = 0;

    size_t pos = 0;
    auto fail = [&](const std::string& msg, size_t at) { throw ParseError(msg, at); };
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace((unsigned char)text[pos]) || text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        size_t start = pos;
        while (pos < text.size() && text[pos] != '=' && text[pos] != ',') ++pos;
        if (pos >= text.size() || text[pos] != '=') fail("expected '=' after generator name", pos);
        std::string name(text.substr(start, pos - start));
        while (!name.empty() && std::isspace((unsigned char)name.back())) name.pop_back();
        ++pos;  // '='
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
        if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1'))
            fail("expected bit 0 or 1", pos);
        int bit = text[pos] - '0';
        ++pos;

        bool known = false;
        for (Generator g : p.generators)
            if (render(g) == name) {
                phi[g] = bit;
                known = true;
                break;
            }
        if (!known) fail("unknown generator '" + name + "'", start);
    }
    return phi;
}

std::string print_hom(const Z2Hom& phi) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, bit] : phi) {
        if (bit != 1) continue;
        if (!first) os << ',';
        first = false;
        os << render(g) << "=1";
    }
    return os.str();
}

std::string print_h1(const H1Invariants& h) {
    std::ostringstream os;
    bool wrote = false;
    if (h.rank == 1) {
        os << "Z";
        wrote = true;
    } else if (h.rank > 1) {
        os << "Z^" << h.rank;
        wrote = true;
    }
    for (const cpp_int& d : h.torsion) {
        if (wrote) os << " + ";
        os << "Z/" << d;
        wrote = true;
    }
    if (!wrote) os << "0";
    return os.str();
}

}  // namespace seifcov
