#pragma once

#include "unipoly.hpp"
#include "rat.hpp"
#include "factor_q.hpp"

namespace divpol {

// Element of Q(t): numerator / denominator with gcd 1; the denominator is an
// integer primitive polynomial with positive leading coefficient times the
// stored content, so den = content * primitive.
class RatFunc {
public:
    RatFunc() : num_(Rat(0)), den_(UniPoly<Rat>::constant(Rat(1))) {}
    explicit RatFunc(const UniPoly<Rat>& n) : num_(n), den_(UniPoly<Rat>::constant(Rat(1))) {}
    RatFunc(const UniPoly<Rat>& n, const UniPoly<Rat>& d) : num_(n), den_(d) { normalize(); }
    explicit RatFunc(const Rat& c) : num_(UniPoly<Rat>::constant(c)), den_(UniPoly<Rat>::constant(Rat(1))) {}

    const UniPoly<Rat>& num() const { return num_; }
    const UniPoly<Rat>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_unit() const { return !num_.is_zero(); }

    RatFunc zero_like() const { return RatFunc(); }
    RatFunc one_like() const { return RatFunc(Rat(1)); }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(den_, num_);
    }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    UniPoly<Rat> num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly<Rat>::constant(Rat(1));
            return;
        }
        UniPoly<Rat> g = gcd_q(num_, den_);
        if (g.degree() > 0) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        // scale so den is integer primitive with positive lc, content folded in
        UniPoly<Rat> dprim = primitive_z(den_);
        Rat scale = den_.lc() * dprim.lc().inv();
        num_ = num_.scaled(scale.inv());
        den_ = dprim;
    }
};

} // namespace divpol
