#pragma once

#include <cctype>
#include <string>

#include "rat.hpp"
#include "unipoly.hpp"
#include "errors.hpp"

namespace divpol {

// Trivariate polynomials over Q in the text grammar: variables x, y, t,
// integer/rational coefficients, ^ for powers, explicit or implicit products.
// Stored as ((Q[t])[x])[y].
using QT = UniPoly<Rat>;      // Q[t]
using QXT = UniPoly<QT>;      // Q[t][x]
using QXYT = UniPoly<QXT>;    // Q[t][x][y]

inline QT qt_zero() { return QT{Rat(0)}; }
inline QXT qxt_zero() { return QXT{qt_zero()}; }
inline QXYT qxyt_zero() { return QXYT{qxt_zero()}; }

inline QXYT qxyt_const(const Rat& c) {
    return QXYT::constant(QXT::constant(QT::constant(c)));
}
inline QXYT qxyt_t() { return QXYT::constant(QXT::constant(QT::xpow(Rat(0), 1))); }
inline QXYT qxyt_x() { return QXYT::constant(QXT::xpow(qt_zero(), 1)); }
inline QXYT qxyt_y() { return QXYT::xpow(qxt_zero(), 1); }

namespace parse_detail {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { pos++; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    QXYT parse_expr() {
        QXYT acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') { pos++; acc = acc + parse_term(); }
            else if (c == '-') { pos++; acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    QXYT parse_term() {
        QXYT acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') { pos++; acc = acc * parse_factor(); }
            else if (c == '(' || c == 'x' || c == 'y' || c == 't' || std::isdigit((unsigned char)c))
                acc = acc * parse_factor(); // implicit product
            else break;
        }
        return acc;
    }

    QXYT parse_factor() {
        QXYT b = parse_base();
        if (peek() == '^') {
            pos++;
            long e = parse_uint();
            QXYT r = qxyt_const(Rat(1));
            for (long i = 0; i < e; i++) r = r * b;
            return r;
        }
        return b;
    }

    QXYT parse_base() {
        char c = peek();
        if (c == '-') { pos++; return -parse_factor(); }
        if (c == '+') { pos++; return parse_factor(); }
        if (c == '(') {
            pos++;
            QXYT e = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'");
            return e;
        }
        if (c == 'x') { pos++; return qxyt_x(); }
        if (c == 'y') { pos++; return qxyt_y(); }
        if (c == 't') { pos++; return qxyt_t(); }
        if (std::isdigit((unsigned char)c)) {
            mpz_class num = parse_int();
            if (peek() == '/') {
                pos++;
                mpz_class den = parse_int();
                if (den == 0) throw ParseError("zero denominator");
                return qxyt_const(Rat(num, den));
            }
            return qxyt_const(Rat(num));
        }
        throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(pos));
    }

    mpz_class parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
        if (start == pos) throw ParseError("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    long parse_uint() {
        mpz_class v = parse_int();
        if (v < 0 || v > 1000000) throw ParseError("exponent out of range");
        return mpz_get_si(v.get_mpz_t());
    }
};

} // namespace parse_detail

inline QXYT parse_poly(const std::string& text) {
    parse_detail::Parser p(text);
    QXYT r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input at position " + std::to_string(p.pos));
    return r;
}

// canonical printing: monomials by descending y, then x, then t degree;
// parse(print(f)) == f
inline std::string print_poly(const QXYT& f) {
    std::string out;
    bool first = true;
    for (int dy = f.degree(); dy >= 0; dy--) {
        const QXT& cy = f.coeff(dy);
        for (int dx = cy.degree(); dx >= 0; dx--) {
            const QT& cx = cy.coeff(dx);
            for (int dt = cx.degree(); dt >= 0; dt--) {
                Rat c = cx.coeff(dt);
                if (c.is_zero()) continue;
                bool neg = c < Rat(0);
                Rat a = neg ? -c : c;
                std::string mono;
                auto app = [&](char v, int d) {
                    if (d == 0) return;
                    if (!mono.empty()) mono += "*";
                    mono += v;
                    if (d > 1) mono += "^" + std::to_string(d);
                };
                app('t', dt);
                app('x', dx);
                app('y', dy);
                std::string coef;
                if (mono.empty() || !(a == Rat(1))) coef = a.str();
                std::string term = coef;
                if (!mono.empty()) {
                    if (!coef.empty()) term += "*";
                    term += mono;
                }
                if (first) {
                    out += (neg ? "-" : "") + term;
                    first = false;
                } else {
                    out += (neg ? " - " : " + ") + term;
                }
            }
        }
    }
    if (first) out = "0";
    return out;
}

inline bool poly_uses_t(const QXYT& f) {
    for (int i = 0; i <= f.degree(); i++)
        for (int j = 0; j <= f.coeff(i).degree(); j++)
            if (f.coeff(i).coeff(j).degree() > 0) return true;
    return false;
}

// specialize t = t0 (rational), giving a curve over Q as (Q[x])[y]
inline UniPoly<UniPoly<Rat>> specialize_t(const QXYT& f, const Rat& t0) {
    UniPoly<Rat> zx{Rat(0)};
    UniPoly<UniPoly<Rat>> out{zx};
    for (int i = 0; i <= f.degree(); i++) {
        UniPoly<Rat> cx(Rat(0));
        for (int j = 0; j <= f.coeff(i).degree(); j++)
            cx.set_coeff(j, f.coeff(i).coeff(j).eval_same(t0));
        out.set_coeff(i, cx);
    }
    return out;
}

// substitute t -> t + s
inline QXYT shift_t(const QXYT& f, const Rat& s) {
    QXYT out = qxyt_zero();
    for (int i = 0; i <= f.degree(); i++) {
        QXT cx = qxt_zero();
        for (int j = 0; j <= f.coeff(i).degree(); j++)
            cx.set_coeff(j, poly_shift_var(f.coeff(i).coeff(j), s));
        out.set_coeff(i, cx);
    }
    return out;
}

} // namespace divpol
