#include "seifcov/identities.hpp"

#include <stdexcept>

namespace seifcov {

int word_sign(const Word& w, const std::map<Generator, int>& character) {
    int sign = 1;
    for (const Syllable& s : w) {
        if (s.e % 2 == 0) continue;
        auto it = character.find(s.g);
        if (it == character.end())
            throw std::invalid_argument("word_sign: no sign for " + render(s.g));
        sign *= it->second;
    }
    return sign;
}

bool certify(const SubstitutionCertificate& cert) {
    if (!free_reduce(mul(cert.lhs, winv(cert.rhs))).empty()) return false;
    std::map<std::string, const Word*> by_label;
    for (const auto& [label, w] : cert.new_generators) by_label[label] = &w;
    for (const auto& [label, sign] : cert.expected_signs) {
        auto it = by_label.find(label);
        if (it == by_label.end()) return false;
        if (word_sign(*it->second, cert.character) != sign) return false;
    }
    return true;
}

SubstitutionCertificate conjugate_product_to_commutators(long long k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    SubstitutionCertificate cert;
    auto G = [](long long i) { return letter({GenClass::g, (int)i}); };

    for (long long i = 1; i <= 2 * k + 1; ++i) cert.lhs = mul(cert.lhs, G(i));
    for (long long i = 1; i <= 2 * k + 1; ++i) cert.lhs = mul(cert.lhs, winv(G(i)));

    // Tail product g_{2i+1} ... g_{2k+1}.
    auto U = [&](long long i) {
        Word w;
        for (long long j = 2 * i + 1; j <= 2 * k + 1; ++j) w = mul(w, G(j));
        return w;
    };
    for (long long i = 0; i < k; ++i) {
        Word first = mul(G(2 * i + 1), G(2 * i + 2));
        Word second = mul(U(i + 1), winv(G(2 * i + 1)));
        cert.new_generators.emplace_back("h" + std::to_string(2 * i + 1), first);
        cert.new_generators.emplace_back("h" + std::to_string(2 * i + 2), second);
        cert.rhs = mul(cert.rhs, commutator(first, second));
    }
    cert.commutator_count = (size_t)k;
    return cert;
}

SubstitutionCertificate interleaved_product_to_commutators(long long k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    SubstitutionCertificate cert;
    auto A = [](long long i) { return letter({GenClass::a, (int)i}); };
    auto B = [](long long i) { return letter({GenClass::b, (int)i}); };
    auto C = [](long long i) { return letter({GenClass::c, (int)i}); };
    auto D = [](long long i) { return letter({GenClass::d, (int)i}); };

    for (long long i = 1; i <= k; ++i) cert.lhs = mul(cert.lhs, A(i), B(i), C(i), D(i));
    for (long long i = 1; i <= k; ++i)
        cert.lhs = mul(cert.lhs, winv(C(i)), winv(D(i)), winv(A(i)), winv(B(i)));

    // Accumulated tail V_i = prod_{j<=i} c_j^-1 d_j^-1 a_j^-1 b_j^-1.
    auto V = [&](long long i) {
        Word w;
        for (long long j = 1; j <= i; ++j)
            w = mul(w, winv(C(j)), winv(D(j)), winv(A(j)), winv(B(j)));
        return w;
    };
    size_t label = 0;
    for (long long i = 0; i < k; ++i) {
        Word Vi = V(i);
        Word ba = mul(B(i + 1), A(i + 1));
        Word e1 = mul(winv(Vi), A(i + 1));
        Word e2 = mul(B(i + 1), Vi);
        Word e3 = mul(ba, winv(Vi), C(i + 1), winv(ba));
        Word e4 = mul(ba, D(i + 1), Vi, winv(ba));
        for (const Word* w : {&e1, &e2, &e3, &e4})
            cert.new_generators.emplace_back("h" + std::to_string(++label), *w);
        cert.rhs = mul(cert.rhs, commutator(e1, e2), commutator(e3, e4));
    }
    cert.commutator_count = (size_t)(2 * k);
    return cert;
}

SubstitutionCertificate surface_word_substitution(SurfaceCase c) {
    SubstitutionCertificate cert;
    const Word x = letter({GenClass::x, 1}), y = letter({GenClass::y, 1});
    const Word z = letter({GenClass::z, 1}), t = letter({GenClass::t, 1});
    const Word u = letter({GenClass::u, 1}), v = letter({GenClass::v, 1});
    const Word w = letter({GenClass::w, 1});

    switch (c) {
        case SurfaceCase::CommToSquares: {
            Word nu = mul(x, z);
            Word nv = mul(winv(mul(z, x, z)), y, z);
            Word nw = mul(winv(mul(y, z)), z, z);
            cert.new_generators = {{"u", nu}, {"v", nv}, {"w", nw}};
            cert.lhs = mul(commutator(x, y), z, z);
            cert.rhs = mul(power(nu, 2), power(nv, 2), power(nw, 2));
            cert.character = {{{GenClass::x, 1}, 1}, {{GenClass::y, 1}, 1}, {{GenClass::z, 1}, -1}};
            cert.expected_signs = {{"u", -1}, {"v", -1}, {"w", -1}};
            break;
        }
        case SurfaceCase::OrientCommutators: {
            Word nx = mul(x, y, z);
            Word ny = mul(winv(z), winv(x));
            Word conj = mul(winv(y), z);
            Word nz = mul(winv(conj), z, conj);
            Word nt = mul(t, winv(z), conj);
            cert.new_generators = {{"x'", nx}, {"y'", ny}, {"z'", nz}, {"t'", nt}};
            cert.lhs = mul(commutator(x, y), commutator(z, t));
            cert.rhs = mul(commutator(nx, ny), commutator(nz, nt));
            cert.character = {{{GenClass::x, 1}, 1},
                              {{GenClass::y, 1}, 1},
                              {{GenClass::z, 1}, -1},
                              {{GenClass::t, 1}, -1}};
            cert.expected_signs = {{"x'", -1}, {"y'", -1}, {"z'", -1}, {"t'", -1}};
            break;
        }
        case SurfaceCase::FourSquaresNormalize: {
            // Chained definitions resolved left to right.
            Word nt = mul(t, u, u, v, winv(u));
            Word nu = mul(winv(nt), u, u, v, w);
            Word nw = mul(winv(nu), u, v, w, w);
            Word nv = mul(winv(nu), w, winv(nw));
            cert.new_generators = {{"t'", nt}, {"u'", nu}, {"v'", nv}, {"w'", nw}};
            cert.lhs = mul(power(t, 2), power(u, 2), power(v, 2), power(w, 2));
            cert.rhs = mul(power(nt, 2), power(nu, 2), power(nv, 2), power(nw, 2));
            cert.character = {{{GenClass::t, 1}, 1},
                              {{GenClass::u, 1}, 1},
                              {{GenClass::v, 1}, 1},
                              {{GenClass::w, 1}, -1}};
            cert.expected_signs = {{"t'", 1}, {"u'", -1}, {"v'", -1}, {"w'", -1}};
            break;
        }
    }
    return cert;
}

}  // namespace seifcov
