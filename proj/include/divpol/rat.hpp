#pragma once

#include <string>
#include <gmpxx.h>

#include "intutil.hpp"

namespace divpol {

// Arbitrary precision rational, always in lowest terms with positive
// denominator (mpq_class canonical form).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return v_ != 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat zero_like() const { return Rat(); }
    Rat one_like() const { return Rat(1); }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(1 / v_);
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }

    // max(|num|, den) as a crude height
    mpz_class height() const {
        mpz_class n = abs(num()), d = den();
        return n > d ? n : d;
    }

private:
    mpq_class v_;
};

inline Rat rat_from_int(const mpz_class& n) { return Rat(n); }

} // namespace divpol
