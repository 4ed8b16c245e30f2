#pragma once

#include <memory>
#include <string>
#include <vector>

#include "intutil.hpp"
#include "errors.hpp"

namespace divpol {

// Z/p^e with p prime. For e = 1 this is the field F_p; for e > 1 a local ring
// whose units are the residues prime to p.
struct ZmodCtx {
    mpz_class p;
    int e;
    mpz_class m; // p^e

    ZmodCtx(mpz_class p_, int e_) : p(std::move(p_)), e(e_), m(zpow(p, e_)) {}
};

using ZmodCtxPtr = std::shared_ptr<const ZmodCtx>;

inline ZmodCtxPtr make_zmod_ctx(const mpz_class& p, int e) {
    return std::make_shared<ZmodCtx>(p, e);
}

class Zmod {
public:
    Zmod() : ctx_(nullptr), v_(0) {}
    Zmod(ZmodCtxPtr ctx, const mpz_class& v) : ctx_(std::move(ctx)), v_(zmod_floor(v, ctx_->m)) {}

    const ZmodCtxPtr& ctx() const { return ctx_; }
    const mpz_class& rep() const { return v_; }
    mpz_class balanced() const { return zmod_balanced(v_, ctx_->m); }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % ctx_->p != 0; }

    Zmod zero_like() const { return Zmod(ctx_, 0); }
    Zmod one_like() const { return Zmod(ctx_, 1); }

    Zmod inv() const {
        if (!is_unit()) throw std::domain_error("Zmod: not a unit");
        return Zmod(ctx_, zinvmod(v_, ctx_->m));
    }

    Zmod operator-() const { return Zmod(ctx_, ctx_->m - v_); }

    friend Zmod operator+(const Zmod& a, const Zmod& b) { return Zmod(a.ctx_, a.v_ + b.v_); }
    friend Zmod operator-(const Zmod& a, const Zmod& b) { return Zmod(a.ctx_, a.v_ - b.v_ + a.ctx_->m); }
    friend Zmod operator*(const Zmod& a, const Zmod& b) { return Zmod(a.ctx_, a.v_ * b.v_); }
    friend bool operator==(const Zmod& a, const Zmod& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Zmod& a, const Zmod& b) { return a.v_ != b.v_; }

    // p-adic valuation, capped at e
    int valuation() const {
        if (v_ == 0) return ctx_->e;
        int k = 0;
        mpz_class t = v_;
        while (t % ctx_->p == 0) { t /= ctx_->p; k++; }
        return k;
    }

    // exact division by p^k
    Zmod divide_by_pk(int k) const {
        mpz_class pk = zpow(ctx_->p, k);
        if (v_ % pk != 0) throw std::domain_error("Zmod: inexact division by p^k");
        return Zmod(ctx_, v_ / pk);
    }

    Zmod reduce_to(const ZmodCtxPtr& lower) const { return Zmod(lower, v_); }
    Zmod lift_to(const ZmodCtxPtr& higher) const { return Zmod(higher, v_); }

    std::string str() const { return v_.get_str(); }

private:
    ZmodCtxPtr ctx_;
    mpz_class v_;
};

} // namespace divpol
