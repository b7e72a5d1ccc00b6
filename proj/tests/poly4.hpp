// Test-only symbolic polynomials over (x, y, z, w), used to expand the
// structural S/R/T/P recursion forms and compare them, coefficient by
// coefficient, against the hard-coded expanded monomial lists.
#ifndef DIMERCOUNT_TESTS_POLY4_HPP
#define DIMERCOUNT_TESTS_POLY4_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <dimercount/recursion.hpp>

namespace dimercount::testing {

struct Poly4 {
    using Exp = std::array<int, 4>;
    std::map<Exp, std::int64_t> terms;

    static Poly4 var(int i) {
        Poly4 p;
        Exp e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 1;
        p.terms[e] = 1;
        return p;
    }

    Poly4 operator+(const Poly4& o) const {
        Poly4 r = *this;
        for (const auto& [e, c] : o.terms) {
            r.terms[e] += c;
            if (r.terms[e] == 0) r.terms.erase(e);
        }
        return r;
    }

    Poly4 operator*(const Poly4& o) const {
        Poly4 r;
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.terms[e] += ca * cb;
                if (r.terms[e] == 0) r.terms.erase(e);
            }
        return r;
    }

    Poly4 operator*(std::int64_t s) const {
        Poly4 r;
        if (s == 0) return r;
        for (const auto& [e, c] : terms) r.terms[e] = c * s;
        return r;
    }

    bool operator==(const Poly4& o) const { return terms == o.terms; }
};

inline Poly4 from_monomials(const std::vector<Monomial>& monos) {
    Poly4 p;
    for (const Monomial& m : monos) {
        p.terms[m.exp] += m.coeff;
        if (p.terms[m.exp] == 0) p.terms.erase(m.exp);
    }
    return p;
}

// Symbolic expansion of the structural recursion of `family`, written
// directly in the aggregate polynomials S = x+y, R = y+z, T = x+2y+z,
// P = y+2z+w.
inline std::array<Poly4, 4> structural_symbolic(GraphFamily family) {
    const Poly4 x = Poly4::var(0), y = Poly4::var(1), z = Poly4::var(2), w = Poly4::var(3);
    const Poly4 S = x + y, R = y + z, T = x + y * 2 + z, P = y + z * 2 + w;
    if (family == GraphFamily::Hanoi) {
        return {
            T * T * T + S * S * T * 3 + x * S * S * 3 + x * x * x,
            P * T * T + P * S * S + R * S * T * 2 + y * S * S + x * R * S * 2 + x * x * y,
            P * P * T + R * R * T + P * R * S * 2 + y * R * S * 2 + x * R * R + x * y * y,
            P * P * P + P * R * R * 3 + y * R * R * 3 + y * y * y,
        };
    }
    return {
        T * T * T + S * S * T * 3 + x * S * S * 3 + x * x * x + S * T * T * 6 + x * S * T * 6 +
            S * S * S * 6 + x * x * S * 6,
        P * T * T + P * S * S + R * S * T * 2 + y * S * S + x * R * S * 2 + x * x * y +
            R * T * T * 2 + S * T * P * 4 + x * R * T * 2 + S * S * R * 6 + y * S * T * 2 +
            x * S * P * 2 + x * y * S * 4 + x * x * R * 2,
        P * P * T + R * R * T + P * R * S * 2 + y * R * S * 2 + x * R * R + x * y * y +
            S * P * P * 2 + R * T * P * 4 + y * S * P * 2 + S * R * R * 6 + x * R * P * 2 +
            y * R * T * 2 + x * y * R * 4 + y * y * S * 2,
        P * P * P + P * R * R * 3 + y * R * R * 3 + y * y * y + R * P * P * 6 + y * R * P * 6 +
            R * R * R * 6 + y * y * R * 6,
    };
}

}  // namespace dimercount::testing

#endif
