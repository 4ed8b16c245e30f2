#pragma once

#include <vector>

#include "unipoly.hpp"
#include "zq.hpp"
#include "rng.hpp"

namespace divpol {

using FqPoly = UniPoly<ZqElem>;

inline mpz_class fq_card(const ZqCtxPtr& ctx) { return zpow(ctx->p, ctx->a); }

// coefficient-wise p-th root on F_q: c -> c^{p^(a-1)}
inline FqPoly fq_pth_root(const FqPoly& f) {
    const auto& ctx = f.zero_elem().ctx();
    mpz_class p = ctx->p;
    mpz_class root_exp = zpow(p, ctx->a - 1);
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    FqPoly g(f.zero_elem());
    for (int i = 0; i <= f.degree(); i += (int)pl)
        g.set_coeff(i / (int)pl, f.coeff(i).pow(root_exp));
    return g;
}

// squarefree decomposition over F_q: f = prod g_i^i up to a unit
inline std::vector<std::pair<FqPoly, int>> fq_squarefree_decomp(const FqPoly& f0) {
    std::vector<std::pair<FqPoly, int>> out;
    FqPoly f = make_monic(f0);
    const auto& ctx = f.zero_elem().ctx();
    unsigned long p = mpz_get_ui(ctx->p.get_mpz_t());

    std::function<void(const FqPoly&, int)> rec = [&](const FqPoly& g, int mult) {
        if (g.degree() <= 0) return;
        FqPoly gp = g.derivative();
        if (gp.is_zero()) {
            rec(fq_pth_root(g), mult * (int)p);
            return;
        }
        FqPoly c = poly_gcd(g, gp);
        FqPoly w = divexact(g, c);
        int i = 1;
        while (w.degree() > 0) {
            FqPoly y = poly_gcd(w, c);
            FqPoly fac = divexact(w, y);
            if (fac.degree() > 0) out.push_back({fac, mult * i});
            w = y;
            c = divexact(c, y);
            i++;
        }
        if (c.degree() > 0) rec(fq_pth_root(c), mult * (int)p);
    };
    rec(f, 1);
    return out;
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
inline void fq_edf(const FqPoly& f, int d, Rng& rng, std::vector<FqPoly>& out) {
    if (f.degree() == d) {
        out.push_back(make_monic(f));
        return;
    }
    const auto& ctx = f.zero_elem().ctx();
    mpz_class q = fq_card(ctx);
    while (true) {
        // random element of F_q[x]/(f)
        FqPoly r(f.zero_elem());
        for (int i = 0; i < f.degree(); i++) r.set_coeff(i, ZqElem::random(ctx, rng));
        if (r.degree() < 1) continue;
        FqPoly g = poly_gcd(r, f);
        if (g.degree() == 0 || g.degree() == f.degree()) {
            if (ctx->p == 2) {
                // trace map T(r) = r + r^2 + ... + r^{2^(a d - 1)}
                FqPoly acc = poly_mod(r, f), cur = acc;
                long steps = (long)ctx->a * d;
                for (long i = 1; i < steps; i++) {
                    cur = poly_mod(cur * cur, f);
                    acc = acc + cur;
                }
                g = poly_gcd(acc, f);
            } else {
                mpz_class e = (zpow(q, d) - 1) / 2;
                FqPoly s = poly_powmod(r, e, f);
                g = poly_gcd(s - s.one_like(), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fq_edf(g, d, rng, out);
            fq_edf(divexact(f, g), d, rng, out);
            return;
        }
    }
}

// full factorization over F_q; deterministic for a fixed rng seed
inline std::vector<std::pair<FqPoly, int>> factor_fq(const FqPoly& f, Rng& rng) {
    if (f.is_zero()) throw std::domain_error("factor_fq: zero polynomial");
    std::vector<std::pair<FqPoly, int>> out;
    if (f.degree() == 0) return out;
    const auto& ctx = f.zero_elem().ctx();
    mpz_class q = fq_card(ctx);
    for (auto& [sf, mult] : fq_squarefree_decomp(f)) {
        // distinct-degree then equal-degree
        FqPoly g = sf;
        FqPoly x = FqPoly::xpow(f.zero_elem(), 1);
        FqPoly xq = x;
        int d = 0;
        while (g.degree() > 0) {
            d++;
            if (2 * d > g.degree()) {
                out.push_back({make_monic(g), mult});
                break;
            }
            xq = poly_powmod(xq, q, g);
            FqPoly gd = poly_gcd(xq - x, g);
            if (gd.degree() > 0) {
                std::vector<FqPoly> eq;
                fq_edf(gd, d, rng, eq);
                for (auto& e : eq) out.push_back({e, mult});
                g = divexact(g, gd);
                xq = poly_mod(xq, g);
            }
        }
    }
    return out;
}

// roots of f in F_q; deterministic for a fixed rng seed
inline std::vector<ZqElem> fq_roots(const FqPoly& f, Rng& rng) {
    const auto& ctx = f.zero_elem().ctx();
    mpz_class q = fq_card(ctx);
    FqPoly x = FqPoly::xpow(f.zero_elem(), 1);
    FqPoly xq = poly_powmod(x, q, f);
    FqPoly lin = poly_gcd(xq - x, f);
    std::vector<ZqElem> roots;
    if (lin.degree() <= 0) return roots;
    std::vector<FqPoly> facs;
    fq_edf(lin, 1, rng, facs);
    for (auto& g : facs) roots.push_back(-g.coeff(0));
    return roots;
}

inline bool fq_irreducible(const FqPoly& f, Rng& rng) {
    if (f.degree() <= 0) return false;
    auto fac = factor_fq(f, rng);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace divpol
