#pragma once

#include <memory>
#include <string>
#include <vector>

#include "intutil.hpp"
#include "zmod.hpp"
#include "unipoly.hpp"
#include "rng.hpp"

namespace divpol {

// The ring Z_q / p^e where Z_q is the unramified extension of Z_p with
// residue field F_q, q = p^a. Elements are represented by polynomials of
// degree < a in a generator u, with coefficients in Z/p^e, modulo a fixed
// monic polynomial h(u) whose reduction mod p is irreducible over F_p.
//
// The integer coefficients of h are shared across all precisions e, so that
// reduction maps between precision levels are literal coefficient reductions.
// For e = 1 this is the field F_q.
struct ZqCtx {
    mpz_class p;
    int e;
    int a;
    mpz_class m;                      // p^e
    std::vector<mpz_class> h;         // monic, degree a, integer coefficients in [0, p)
    std::vector<std::vector<mpz_class>> red; // u^{a+k} mod h for k = 0..a-2, coeffs mod m
    mutable std::vector<mpz_class> frob_u;   // sigma(u) as coefficient vector (lazy)

    ZqCtx(mpz_class p_, int e_, int a_, std::vector<mpz_class> h_)
        : p(std::move(p_)), e(e_), a(a_), m(zpow(p, e_)), h(std::move(h_)) {
        build_reduction();
    }

private:
    void build_reduction() {
        // u^a = -(h - u^a) mod h; iterate for higher powers
        red.clear();
        std::vector<mpz_class> cur(a);
        for (int i = 0; i < a; i++) cur[i] = zmod_floor(-h[i], m);
        red.push_back(cur);
        for (int k = 1; k <= a - 2; k++) {
            std::vector<mpz_class> nxt(a, 0);
            // multiply cur by u
            mpz_class top = cur[a - 1];
            for (int i = a - 1; i >= 1; i--) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (int i = 0; i < a; i++) nxt[i] = zmod_floor(nxt[i] + top * red[0][i], m);
            red.push_back(nxt);
            cur = std::move(nxt);
        }
    }
};

using ZqCtxPtr = std::shared_ptr<const ZqCtx>;

class ZqElem {
public:
    ZqElem() = default;
    ZqElem(ZqCtxPtr ctx, std::vector<mpz_class> c) : ctx_(std::move(ctx)), c_(std::move(c)) {
        c_.resize(ctx_->a, 0);
        for (auto& x : c_) x = zmod_floor(x, ctx_->m);
    }

    static ZqElem from_int(const ZqCtxPtr& ctx, const mpz_class& n) {
        std::vector<mpz_class> c(ctx->a, 0);
        c[0] = zmod_floor(n, ctx->m);
        return ZqElem(ctx, std::move(c));
    }

    static ZqElem gen(const ZqCtxPtr& ctx) {
        std::vector<mpz_class> c(ctx->a, 0);
        if (ctx->a > 1) c[1] = 1;
        else c[0] = zmod_floor(-ctx->h[0], ctx->m); // a = 1: u is the root of h
        return ZqElem(ctx, std::move(c));
    }

    static ZqElem random(const ZqCtxPtr& ctx, Rng& rng) {
        std::vector<mpz_class> c(ctx->a);
        for (auto& x : c) x = rng.mpz_below(ctx->m);
        return ZqElem(ctx, std::move(c));
    }

    const ZqCtxPtr& ctx() const { return ctx_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_) if (x != 0) return false;
        return true;
    }

    // unit iff nonzero in the residue field F_q
    bool is_unit() const {
        for (auto& x : c_) if (x % ctx_->p != 0) return true;
        return false;
    }

    ZqElem zero_like() const { return from_int(ctx_, 0); }
    ZqElem one_like() const { return from_int(ctx_, 1); }

    ZqElem operator-() const {
        std::vector<mpz_class> c(ctx_->a);
        for (int i = 0; i < ctx_->a; i++) c[i] = c_[i] == 0 ? mpz_class(0) : ctx_->m - c_[i];
        return ZqElem(ctx_, std::move(c));
    }

    friend ZqElem operator+(const ZqElem& x, const ZqElem& y) {
        std::vector<mpz_class> c(x.ctx_->a);
        for (int i = 0; i < x.ctx_->a; i++) {
            c[i] = x.c_[i] + y.c_[i];
            if (c[i] >= x.ctx_->m) c[i] -= x.ctx_->m;
        }
        ZqElem r; r.ctx_ = x.ctx_; r.c_ = std::move(c);
        return r;
    }

    friend ZqElem operator-(const ZqElem& x, const ZqElem& y) {
        std::vector<mpz_class> c(x.ctx_->a);
        for (int i = 0; i < x.ctx_->a; i++) {
            c[i] = x.c_[i] - y.c_[i];
            if (c[i] < 0) c[i] += x.ctx_->m;
        }
        ZqElem r; r.ctx_ = x.ctx_; r.c_ = std::move(c);
        return r;
    }

    friend ZqElem operator*(const ZqElem& x, const ZqElem& y) {
        const auto& ctx = *x.ctx_;
        int a = ctx.a;
        if (a == 1) {
            ZqElem r; r.ctx_ = x.ctx_;
            r.c_ = {zmod_floor(x.c_[0] * y.c_[0], ctx.m)};
            return r;
        }
        std::vector<mpz_class> conv(2 * a - 1, 0);
        for (int i = 0; i < a; i++) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < a; j++) {
                if (y.c_[j] == 0) continue;
                conv[i + j] += x.c_[i] * y.c_[j];
            }
        }
        std::vector<mpz_class> c(a);
        for (int i = 0; i < a; i++) c[i] = conv[i];
        for (int k = 0; k <= a - 2; k++) {
            const mpz_class& t = conv[a + k];
            if (t == 0) continue;
            const auto& row = ctx.red[k];
            for (int i = 0; i < a; i++)
                if (row[i] != 0) c[i] += t * row[i];
        }
        for (auto& v : c) v = zmod_floor(v, ctx.m);
        ZqElem r; r.ctx_ = x.ctx_; r.c_ = std::move(c);
        return r;
    }

    friend bool operator==(const ZqElem& x, const ZqElem& y) { return x.c_ == y.c_; }
    friend bool operator!=(const ZqElem& x, const ZqElem& y) { return x.c_ != y.c_; }

    ZqElem inv() const;

    ZqElem pow(mpz_class n) const {
        ZqElem r = one_like(), b = *this;
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    // minimum p-adic valuation of the coefficients, capped at e
    int valuation() const {
        int best = ctx_->e;
        for (auto& x : c_) {
            if (x == 0) continue;
            int k = 0;
            mpz_class t = x;
            while (t % ctx_->p == 0) { t /= ctx_->p; k++; }
            best = std::min(best, k);
            if (best == 0) break;
        }
        return best;
    }

    ZqElem divide_by_pk(int k) const {
        mpz_class pk = zpow(ctx_->p, k);
        std::vector<mpz_class> c(ctx_->a);
        for (int i = 0; i < ctx_->a; i++) {
            if (c_[i] % pk != 0) throw std::domain_error("ZqElem: inexact division by p^k");
            c[i] = c_[i] / pk;
        }
        return ZqElem(ctx_, std::move(c));
    }

    ZqElem reduce_to(const ZqCtxPtr& lower) const {
        std::vector<mpz_class> c(c_);
        return ZqElem(lower, std::move(c));
    }

    // canonical lift (same representatives)
    ZqElem lift_to(const ZqCtxPtr& higher) const {
        std::vector<mpz_class> c(c_);
        return ZqElem(higher, std::move(c));
    }

    // residue, as an element of the ctx with e = 1
    ZqElem residue(const ZqCtxPtr& res_ctx) const { return reduce_to(res_ctx); }

    // deterministic total order on residues (for pivot tie-breaking): compare
    // coefficient vectors mod p from high degree down
    int cmp_residue(const ZqElem& o) const {
        for (int i = ctx_->a - 1; i >= 0; i--) {
            mpz_class x = c_[i] % ctx_->p, y = o.c_[i] % ctx_->p;
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < ctx_->a; i++) {
            if (i) s += ",";
            s += c_[i].get_str();
        }
        return s + "]";
    }

private:
    ZqCtxPtr ctx_;
    std::vector<mpz_class> c_;
};

// ---- context construction ---------------------------------------------------

inline bool fp_poly_irreducible(const mpz_class& p, const std::vector<mpz_class>& h) {
    // h monic of degree a over F_p; check irreducibility via x^{p^k} tests
    auto ctx = make_zmod_ctx(p, 1);
    Zmod z0(ctx, 0);
    UniPoly<Zmod> H(z0);
    for (size_t i = 0; i < h.size(); i++) H.set_coeff((int)i, Zmod(ctx, h[i]));
    int a = H.degree();
    UniPoly<Zmod> x = UniPoly<Zmod>::xpow(z0, 1);
    // x^{p^a} == x mod h, and gcd(x^{p^{a/l}} - x, h) == const for prime l | a
    UniPoly<Zmod> xp = poly_powmod(x, zpow(p, a), H);
    if (!(xp == poly_mod(x, H))) return false;
    for (int l = 2; l <= a; l++) {
        if (a % l != 0) continue;
        bool isprime = true;
        for (int d = 2; d * d <= l; d++) if (l % d == 0) { isprime = false; break; }
        if (!isprime) continue;
        UniPoly<Zmod> xq = poly_powmod(x, zpow(p, a / l), H);
        auto g = poly_gcd(xq - x, H);
        if (g.degree() > 0) return false;
    }
    return true;
}

// deterministic irreducible monic polynomial of degree a over F_p
inline std::vector<mpz_class> find_irreducible_fp(const mpz_class& p, int a) {
    if (a == 1) return {mpz_class(0), mpz_class(1)}; // u
    // sweep sparse candidates first, then denser ones
    for (mpz_class c1 = 0; c1 < p; c1++) {
        for (mpz_class c0 = 1; c0 < p; c0++) {
            std::vector<mpz_class> h(a + 1, 0);
            h[a] = 1;
            h[1] = c1;
            h[0] = c0;
            if (fp_poly_irreducible(p, h)) return h;
        }
    }
    for (mpz_class c2 = 0; c2 < p; c2++)
        for (mpz_class c1 = 0; c1 < p; c1++)
            for (mpz_class c0 = 1; c0 < p; c0++) {
                std::vector<mpz_class> h(a + 1, 0);
                h[a] = 1;
                if (a > 2) h[2] = c2;
                h[1] = c1;
                h[0] = c0;
                if (fp_poly_irreducible(p, h)) return h;
            }
    throw MathError("find_irreducible_fp: no polynomial found");
}

inline ZqCtxPtr make_zq_ctx(const mpz_class& p, int e, int a) {
    std::vector<mpz_class> h = find_irreducible_fp(p, a);
    h.resize(a + 1, 0);
    std::vector<mpz_class> hc(h.begin(), h.begin() + a); // non-leading coefficients
    return std::make_shared<ZqCtx>(p, e, a, hc);
}

inline ZqCtxPtr make_zq_ctx_with_h(const mpz_class& p, int e, int a, const std::vector<mpz_class>& h_low) {
    return std::make_shared<ZqCtx>(p, e, a, h_low);
}

inline ZqElem ZqElem_inv_impl(const ZqElem& x) {
    const auto& ctx = x.ctx();
    if (!x.is_unit()) throw std::domain_error("ZqElem: not a unit");
    // invert in the residue field via extended Euclid over F_p, then lift
    auto fp = make_zmod_ctx(ctx->p, 1);
    Zmod z0(fp, 0);
    UniPoly<Zmod> H(z0), X(z0);
    for (int i = 0; i < ctx->a; i++) H.set_coeff(i, Zmod(fp, ctx->h[i]));
    H.set_coeff(ctx->a, Zmod(fp, 1));
    for (int i = 0; i < ctx->a; i++) X.set_coeff(i, Zmod(fp, x.coeffs()[i]));
    if (ctx->a == 1) {
        // plain Z/p^e
        mpz_class v = x.coeffs()[0];
        return ZqElem(ctx, {zinvmod(v, ctx->m)});
    }
    auto [g, u, v] = poly_xgcd(X, H);
    if (g.degree() != 0) throw std::domain_error("ZqElem: gcd not constant");
    std::vector<mpz_class> z(ctx->a, 0);
    for (int i = 0; i <= u.degree(); i++) z[i] = u.coeff(i).rep();
    ZqElem zz(ctx, std::move(z));
    // Newton: z <- z (2 - x z), quadratic convergence in p
    ZqElem two = ZqElem::from_int(ctx, 2);
    int prec = 1;
    while (prec < ctx->e) {
        zz = zz * (two - x * zz);
        prec *= 2;
    }
    return zz;
}

inline ZqElem ZqElem::inv() const { return ZqElem_inv_impl(*this); }

// sigma(u): the root of h that reduces to u^p mod p (the Frobenius lift)
inline ZqElem zq_frobenius_gen(const ZqCtxPtr& ctx) {
    if (ctx->frob_u.empty()) {
        ZqElem u = ZqElem::gen(ctx);
        ZqElem s = u.pow(ctx->p); // u^p: correct mod p
        // h as a polynomial evaluator over the ring
        auto evalh = [&](const ZqElem& t) {
            ZqElem r = ZqElem::from_int(ctx, 1) * t.zero_like();
            // Horner for monic h = u^a + sum h_i u^i
            r = t.one_like();
            for (int i = ctx->a - 1; i >= 0; i--) r = r * t + ZqElem::from_int(ctx, ctx->h[i]);
            return r;
        };
        auto evalhp = [&](const ZqElem& t) {
            // derivative of monic degree-a h
            ZqElem r = ZqElem::from_int(ctx, ctx->a);
            for (int i = ctx->a - 1; i >= 1; i--) r = r * t + ZqElem::from_int(ctx, mpz_class(i) * ctx->h[i]);
            return r;
        };
        int prec = 1;
        while (prec < ctx->e) {
            s = s - evalh(s) * evalhp(s).inv();
            prec *= 2;
        }
        ctx->frob_u = s.coeffs();
    }
    return ZqElem(ctx, ctx->frob_u);
}

// apply the Frobenius lift coefficient-wise: x(u) -> x(sigma(u))
inline ZqElem zq_frobenius(const ZqElem& x) {
    const auto& ctx = x.ctx();
    if (ctx->a == 1) return x;
    ZqElem su = zq_frobenius_gen(ctx);
    ZqElem r = x.zero_like();
    for (int i = ctx->a - 1; i >= 0; i--) r = r * su + ZqElem::from_int(ctx, x.coeffs()[i]);
    return r;
}

} // namespace divpol
