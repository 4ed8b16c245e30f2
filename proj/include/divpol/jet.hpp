#pragma once

#include <memory>
#include <vector>

#include "zq.hpp"

namespace divpol {

// The ring (Z_q/p^e)[t]/(t^h): truncated power series in t with ZqElem
// coefficients. Elements keep exactly h coefficients (zero-padded), so that
// the truncation order is part of the value.
struct JetCtx {
    ZqCtxPtr base;
    int h;
    JetCtx(ZqCtxPtr b, int h_) : base(std::move(b)), h(h_) {}
};

using JetCtxPtr = std::shared_ptr<const JetCtx>;

inline JetCtxPtr make_jet_ctx(ZqCtxPtr base, int h) {
    return std::make_shared<JetCtx>(std::move(base), h);
}

class JetElem {
public:
    JetElem() = default;
    JetElem(JetCtxPtr ctx, std::vector<ZqElem> c) : ctx_(std::move(ctx)), c_(std::move(c)) {
        c_.resize(ctx_->h, ZqElem::from_int(ctx_->base, 0));
    }

    static JetElem from_zq(const JetCtxPtr& ctx, const ZqElem& x) {
        std::vector<ZqElem> c(ctx->h, ZqElem::from_int(ctx->base, 0));
        c[0] = x;
        return JetElem(ctx, std::move(c));
    }

    static JetElem from_int(const JetCtxPtr& ctx, const mpz_class& n) {
        return from_zq(ctx, ZqElem::from_int(ctx->base, n));
    }

    static JetElem tvar(const JetCtxPtr& ctx) {
        std::vector<ZqElem> c(ctx->h, ZqElem::from_int(ctx->base, 0));
        if (ctx->h > 1) c[1] = ZqElem::from_int(ctx->base, 1);
        return JetElem(ctx, std::move(c));
    }

    static JetElem random(const JetCtxPtr& ctx, Rng& rng) {
        std::vector<ZqElem> c(ctx->h, ZqElem::from_int(ctx->base, 0));
        for (auto& x : c) x = ZqElem::random(ctx->base, rng);
        return JetElem(ctx, std::move(c));
    }

    const JetCtxPtr& ctx() const { return ctx_; }
    const std::vector<ZqElem>& coeffs() const { return c_; }
    const ZqElem& coeff(int i) const { return c_[i]; }

    bool is_zero() const {
        for (auto& x : c_) if (!x.is_zero()) return false;
        return true;
    }

    bool is_unit() const { return c_[0].is_unit(); }

    JetElem zero_like() const { return from_int(ctx_, 0); }
    JetElem one_like() const { return from_int(ctx_, 1); }

    JetElem operator-() const {
        std::vector<ZqElem> c;
        c.reserve(c_.size());
        for (auto& x : c_) c.push_back(-x);
        JetElem r; r.ctx_ = ctx_; r.c_ = std::move(c);
        return r;
    }

    friend JetElem operator+(const JetElem& a, const JetElem& b) {
        std::vector<ZqElem> c;
        c.reserve(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); i++) c.push_back(a.c_[i] + b.c_[i]);
        JetElem r; r.ctx_ = a.ctx_; r.c_ = std::move(c);
        return r;
    }

    friend JetElem operator-(const JetElem& a, const JetElem& b) {
        std::vector<ZqElem> c;
        c.reserve(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); i++) c.push_back(a.c_[i] - b.c_[i]);
        JetElem r; r.ctx_ = a.ctx_; r.c_ = std::move(c);
        return r;
    }

    friend JetElem operator*(const JetElem& a, const JetElem& b) {
        int h = a.ctx_->h;
        std::vector<ZqElem> c(h, ZqElem::from_int(a.ctx_->base, 0));
        for (int i = 0; i < h; i++) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j + i < h; j++) {
                if (b.c_[j].is_zero()) continue;
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
            }
        }
        JetElem r; r.ctx_ = a.ctx_; r.c_ = std::move(c);
        return r;
    }

    friend bool operator==(const JetElem& a, const JetElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const JetElem& a, const JetElem& b) { return !(a == b); }

    JetElem inv() const {
        if (!is_unit()) throw std::domain_error("JetElem: not a unit");
        // Newton: z <- z(2 - x z), doubling the t-adic precision
        JetElem z = from_zq(ctx_, c_[0].inv());
        JetElem two = from_int(ctx_, 2);
        int prec = 1;
        while (prec < ctx_->h) {
            z = z * (two - (*this) * z);
            prec *= 2;
        }
        return z;
    }

    // t-adic valuation, capped at h
    int tval() const {
        for (size_t i = 0; i < c_.size(); i++)
            if (!c_[i].is_zero()) return (int)i;
        return ctx_->h;
    }

    // exact division by t^k: drops the first k coefficients (they must vanish),
    // top k coefficients of the result are unknown -> set to zero; caller is
    // responsible for using the result at a reduced t-precision.
    JetElem divide_by_tk(int k) const {
        for (int i = 0; i < k; i++)
            if (!c_[i].is_zero()) throw std::domain_error("JetElem: inexact division by t^k");
        std::vector<ZqElem> c(c_.begin() + k, c_.end());
        c.resize(ctx_->h, ZqElem::from_int(ctx_->base, 0));
        JetElem r; r.ctx_ = ctx_; r.c_ = std::move(c);
        return r;
    }

    // reduce both precisions: t-truncation to target->h, p-adic to target->base->e
    JetElem reduce_to(const JetCtxPtr& target) const {
        std::vector<ZqElem> c;
        c.reserve(target->h);
        for (int i = 0; i < target->h && i < ctx_->h; i++) c.push_back(c_[i].reduce_to(target->base));
        return JetElem(target, std::move(c));
    }

    // canonical lift: pad with zero jets / keep representatives
    JetElem lift_to(const JetCtxPtr& target) const {
        std::vector<ZqElem> c;
        c.reserve(target->h);
        for (int i = 0; i < ctx_->h && i < target->h; i++) c.push_back(c_[i].lift_to(target->base));
        return JetElem(target, std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); i++) {
            if (i) s += " + t^" + std::to_string(i) + "*";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    JetCtxPtr ctx_;
    std::vector<ZqElem> c_;
};

// Frobenius lift acting coefficient-wise in t
inline JetElem jet_frobenius(const JetElem& x) {
    std::vector<ZqElem> c;
    c.reserve(x.coeffs().size());
    for (auto& z : x.coeffs()) c.push_back(zq_frobenius(z));
    return JetElem(x.ctx(), std::move(c));
}

} // namespace divpol
