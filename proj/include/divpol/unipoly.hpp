#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <vector>
#include <gmpxx.h>

#include "errors.hpp"

namespace divpol {

// n * a for small nonnegative n, by binary addition chains (rings need not
// expose multiplication by machine integers)
template <class R>
R mul_int(const R& a, long n) {
    if (n < 0) return -mul_int(a, -n);
    R acc = a.zero_like(), base = a;
    while (n > 0) {
        if (n & 1) acc = acc + base;
        n >>= 1;
        if (n) base = base + base;
    }
    return acc;
}

// Dense univariate polynomial over a ring R, low degree first, trimmed so the
// leading coefficient is nonzero. Every polynomial carries a prototype zero of
// its coefficient ring so that coefficient contexts (moduli, towers, ...)
// survive through empty polynomials.
template <class R>
class UniPoly {
public:
    explicit UniPoly(const R& proto) : zero_(proto.zero_like()) {}

    UniPoly(const R& proto, std::vector<R> cs) : zero_(proto.zero_like()), c_(std::move(cs)) { trim(); }

    static UniPoly constant(const R& v) {
        UniPoly p(v);
        if (!v.is_zero()) p.c_.push_back(v);
        return p;
    }

    static UniPoly xpow(const R& proto, int k) {
        UniPoly p(proto);
        p.c_.assign(k + 1, proto.zero_like());
        p.c_[k] = proto.one_like();
        return p;
    }

    const R& zero_elem() const { return zero_; }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == c_[0].one_like(); }

    const R& coeff(int i) const {
        if (i < 0 || i >= (int)c_.size()) return zero_;
        return c_[i];
    }

    const R& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    const std::vector<R>& coeffs() const { return c_; }

    void set_coeff(int i, R v) {
        if (i >= (int)c_.size()) {
            if (v.is_zero()) return;
            c_.resize(i + 1, zero_);
        }
        c_[i] = std::move(v);
        trim();
    }

    UniPoly operator-() const {
        UniPoly r(zero_);
        r.c_.reserve(c_.size());
        for (auto& a : c_) r.c_.push_back(-a);
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.zero_);
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (size_t i = 0; i < n; i++) {
            if (i < a.c_.size() && i < b.c_.size()) r.c_.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size()) r.c_.push_back(a.c_[i]);
            else r.c_.push_back(b.c_[i]);
        }
        r.trim();
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.zero_);
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (size_t i = 0; i < n; i++) {
            if (i < a.c_.size() && i < b.c_.size()) r.c_.push_back(a.c_[i] - b.c_[i]);
            else if (i < a.c_.size()) r.c_.push_back(a.c_[i]);
            else r.c_.push_back(-b.c_[i]);
        }
        r.trim();
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
        UniPoly r(a.zero_);
        r.c_ = mul_vec(a.c_, b.c_, a.zero_);
        r.trim();
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

    UniPoly scaled(const R& s) const {
        if (s.is_zero()) return UniPoly(zero_);
        UniPoly r(zero_);
        r.c_.reserve(c_.size());
        for (auto& a : c_) r.c_.push_back(a * s);
        r.trim();
        return r;
    }

    UniPoly scaled_by_int(long n) const {
        UniPoly r(zero_);
        r.c_.reserve(c_.size());
        for (auto& a : c_) r.c_.push_back(mul_int(a, n));
        r.trim();
        return r;
    }

    // multiply by x^k
    UniPoly shifted_up(int k) const {
        if (is_zero() || k == 0) return *this;
        UniPoly r(zero_);
        r.c_.assign(c_.size() + k, zero_);
        for (size_t i = 0; i < c_.size(); i++) r.c_[i + k] = c_[i];
        return r;
    }

    // divide by x^k; low coefficients must vanish
    UniPoly shifted_down(int k) const {
        UniPoly r(zero_);
        if ((int)c_.size() > k) r.c_.assign(c_.begin() + k, c_.end());
        r.trim();
        return r;
    }

    // order of vanishing at 0; returns degree+1 (i.e. size) for the zero poly
    int valuation() const {
        for (size_t i = 0; i < c_.size(); i++)
            if (!c_[i].is_zero()) return (int)i;
        return (int)c_.size();
    }

    UniPoly derivative() const {
        UniPoly r(zero_);
        if (c_.size() <= 1) return r;
        r.c_.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); i++) r.c_.push_back(mul_int(c_[i], (long)i));
        r.trim();
        return r;
    }

    // Horner evaluation in a ring S that embeds R via S(R)
    template <class S>
    S eval(const S& x) const {
        S r = x.zero_like();
        for (int i = degree(); i >= 0; i--) r = r * x + S(c_[i]);
        return r;
    }

    R eval_same(const R& x) const {
        R r = zero_;
        for (int i = degree(); i >= 0; i--) r = r * x + c_[i];
        return r;
    }

    UniPoly reversed() const {
        UniPoly r(zero_);
        r.c_.assign(c_.rbegin(), c_.rend());
        r.trim();
        return r;
    }

    UniPoly truncated(int n) const {
        // coefficients of degree < n
        UniPoly r(zero_);
        if (n > 0) {
            r.c_.assign(c_.begin(), c_.begin() + std::min((size_t)n, c_.size()));
            r.trim();
        }
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); i++)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // interface so UniPoly itself can serve as a coefficient ring
    bool is_unit() const { return c_.size() == 1 && c_[0].is_unit(); }
    UniPoly inv() const {
        if (!is_unit()) throw std::domain_error("UniPoly: not a unit");
        return constant(c_[0].inv());
    }
    UniPoly zero_like() const { return UniPoly(zero_); }
    UniPoly one_like() const { return constant(zero_.one_like()); }

private:
    R zero_;
    std::vector<R> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static std::vector<R> mul_vec(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
        const size_t kara_threshold = 24;
        if (a.size() < kara_threshold || b.size() < kara_threshold) {
            std::vector<R> r(a.size() + b.size() - 1, zero);
            for (size_t i = 0; i < a.size(); i++) {
                if (a[i].is_zero()) continue;
                for (size_t j = 0; j < b.size(); j++) r[i + j] = r[i + j] + a[i] * b[j];
            }
            return r;
        }
        size_t m = std::max(a.size(), b.size()) / 2;
        auto lo = [&](const std::vector<R>& v) {
            return std::vector<R>(v.begin(), v.begin() + std::min(m, v.size()));
        };
        auto hi = [&](const std::vector<R>& v) {
            if (v.size() <= m) return std::vector<R>();
            return std::vector<R>(v.begin() + m, v.end());
        };
        auto addv = [&](const std::vector<R>& x, const std::vector<R>& y) {
            std::vector<R> r(std::max(x.size(), y.size()), zero);
            for (size_t i = 0; i < x.size(); i++) r[i] = r[i] + x[i];
            for (size_t i = 0; i < y.size(); i++) r[i] = r[i] + y[i];
            return r;
        };
        std::vector<R> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
        std::vector<R> z0 = (a0.empty() || b0.empty()) ? std::vector<R>() : mul_vec(a0, b0, zero);
        std::vector<R> z2 = (a1.empty() || b1.empty()) ? std::vector<R>() : mul_vec(a1, b1, zero);
        std::vector<R> s1 = addv(a0, a1), s2 = addv(b0, b1);
        std::vector<R> z1 = (s1.empty() || s2.empty()) ? std::vector<R>() : mul_vec(s1, s2, zero);
        for (size_t i = 0; i < z0.size(); i++) z1[i] = z1[i] - z0[i];
        for (size_t i = 0; i < z2.size(); i++) z1[i] = z1[i] - z2[i];
        std::vector<R> r(a.size() + b.size() - 1, zero);
        for (size_t i = 0; i < z0.size(); i++) r[i] = r[i] + z0[i];
        for (size_t i = 0; i < z1.size(); i++)
            if (i + m < r.size()) r[i + m] = r[i + m] + z1[i];
        for (size_t i = 0; i < z2.size(); i++)
            if (i + 2 * m < r.size()) r[i + 2 * m] = r[i + 2 * m] + z2[i];
        return r;
    }
};

// ---- division, gcd ---------------------------------------------------------

// f = q*g + r with deg r < deg g; requires lc(g) a unit.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divrem(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (g.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    R lci = g.lc().inv();
    UniPoly<R> q(f.zero_elem()), r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        R c = r.lc() * lci;
        q.set_coeff(k, c);
        r = r - g.scaled(c).shifted_up(k);
    }
    return {q, r};
}

template <class R>
UniPoly<R> poly_mod(const UniPoly<R>& f, const UniPoly<R>& g) { return divrem(f, g).second; }

template <class R>
UniPoly<R> divexact(const UniPoly<R>& f, const UniPoly<R>& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::domain_error("divexact: inexact division");
    return q;
}

template <class R>
UniPoly<R> make_monic(const UniPoly<R>& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.lc().inv());
}

// monic gcd over a field
template <class R>
UniPoly<R> poly_gcd(UniPoly<R> a, UniPoly<R> b) {
    while (!b.is_zero()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return make_monic(a);
}

// extended gcd over a field: returns (g, u, v) with g = u*a + v*b, g monic
template <class R>
std::tuple<UniPoly<R>, UniPoly<R>, UniPoly<R>> poly_xgcd(const UniPoly<R>& a, const UniPoly<R>& b) {
    UniPoly<R> r0 = a, r1 = b;
    UniPoly<R> s0 = a.one_like(), s1 = a.zero_like();
    UniPoly<R> t0 = a.zero_like(), t1 = a.one_like();
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UniPoly<R> s = s0 - q * s1, t = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R c = r0.lc().inv();
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

template <class R>
UniPoly<R> poly_powmod(UniPoly<R> base, mpz_class e, const UniPoly<R>& mod) {
    UniPoly<R> r = base.one_like();
    base = poly_mod(base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(r * base, mod);
        base = poly_mod(base * base, mod);
        e >>= 1;
    }
    return r;
}

// substitute x -> x + c
template <class R>
UniPoly<R> poly_shift_var(const UniPoly<R>& f, const R& c) {
    UniPoly<R> x_plus_c(f.zero_elem(), {c, c.one_like()});
    UniPoly<R> r(f.zero_elem());
    for (int i = f.degree(); i >= 0; i--) {
        r = r * x_plus_c;
        r = r + UniPoly<R>::constant(f.coeff(i));
    }
    return r;
}

template <class R, class S, class F>
UniPoly<S> map_poly(const UniPoly<R>& f, const S& proto, F&& fn) {
    UniPoly<S> r(proto);
    for (int i = 0; i <= f.degree(); i++) r.set_coeff(i, fn(f.coeff(i)));
    return r;
}

// ---- resultants -------------------------------------------------------------

// Euclidean resultant over a field.
template <class R>
R resultant_field(UniPoly<R> a, UniPoly<R> b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero polynomial");
    R res = a.zero_elem().one_like();
    bool neg = false;
    while (true) {
        if (b.degree() == 0) {
            R lb = b.lc(), out = res;
            for (int i = 0; i < a.degree(); i++) out = out * lb;
            return neg ? -out : out;
        }
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
            std::swap(a, b);
            continue;
        }
        auto r = poly_mod(a, b);
        if (r.is_zero()) return a.zero_elem();
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        R lb = b.lc();
        for (int i = 0; i < a.degree() - r.degree(); i++) res = res * lb;
        a = std::move(b);
        b = std::move(r);
    }
}

// Subresultant PRS resultant over an integral domain; exact_div(a, b) must
// perform the (guaranteed exact) division a/b in R.
template <class R, class DivF>
R resultant_subres(UniPoly<R> A, UniPoly<R> B, DivF&& exact_div) {
    if (A.is_zero() || B.is_zero()) throw std::domain_error("resultant: zero polynomial");
    const R one = A.zero_elem().one_like();
    auto rpow = [&](const R& x, int n) {
        R r = one;
        for (int i = 0; i < n; i++) r = r * x;
        return r;
    };
    bool neg = false;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) neg = !neg;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        R out = rpow(B.lc(), A.degree());
        return neg ? -out : out;
    }
    R g = one, h = one;
    while (true) {
        int d = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) neg = !neg;
        // pseudo-remainder lc(B)^{d+1} A mod B
        UniPoly<R> Rp = A.scaled(rpow(B.lc(), d + 1));
        while (!Rp.is_zero() && Rp.degree() >= B.degree()) {
            int k = Rp.degree() - B.degree();
            R c = exact_div(Rp.lc(), B.lc());
            Rp = Rp - B.scaled(c).shifted_up(k);
        }
        if (Rp.is_zero()) return A.zero_elem(); // nonconstant common factor
        A = B;
        R denom = g * rpow(h, d);
        UniPoly<R> nb(A.zero_elem());
        for (int i = 0; i <= Rp.degree(); i++) nb.set_coeff(i, exact_div(Rp.coeff(i), denom));
        B = std::move(nb);
        g = A.lc();
        if (d > 0) h = (d == 1) ? g : exact_div(rpow(g, d), rpow(h, d - 1));
        if (B.degree() == 0) break;
    }
    // Res = +/- lc(B)^{deg A} / h^{deg A - 1}
    R num = rpow(B.lc(), A.degree());
    R out = (A.degree() <= 1) ? num : exact_div(num, rpow(h, A.degree() - 1));
    return neg ? -out : out;
}

// Res(f, g) with coefficients in a field: Euclid. This is the public entry
// for resultant computations over Q, F_q and towers.
template <class R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
    return resultant_field(f, g);
}

// discriminant: (-1)^{n(n-1)/2} Res(f, f') / lc(f), over a field
template <class R>
R discriminant_field(const UniPoly<R>& f) {
    auto fp = f.derivative();
    if (fp.is_zero()) return f.zero_elem();
    R r = resultant_field(f, fp);
    int n = f.degree();
    R d = r * f.lc().inv();
    if (((long)n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

} // namespace divpol
