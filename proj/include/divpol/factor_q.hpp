#pragma once

#include <vector>

#include "unipoly.hpp"
#include "rat.hpp"
#include "zmod.hpp"
#include "factor_fq.hpp"

namespace divpol {

using QPoly = UniPoly<Rat>;

// rational content: gcd of numerators / lcm of denominators
inline Rat content_q(const QPoly& f) {
    mpz_class g = 0, l = 1;
    for (int i = 0; i <= f.degree(); i++) {
        const Rat& c = f.coeff(i);
        if (c.is_zero()) continue;
        g = zgcd(g, c.num());
        l = zlcm(l, c.den());
    }
    if (g == 0) return Rat(0);
    return Rat(g, l);
}

// integer, primitive, positive leading coefficient
inline QPoly primitive_z(const QPoly& f) {
    if (f.is_zero()) return f;
    Rat c = content_q(f);
    QPoly g = f.scaled(c.inv());
    if (g.lc() < Rat(0)) g = -g;
    return g;
}

inline UniPoly<Zmod> reduce_mod_p(const QPoly& f, const ZmodCtxPtr& ctx) {
    UniPoly<Zmod> g{Zmod(ctx, 0)};
    for (int i = 0; i <= f.degree(); i++) {
        const Rat& c = f.coeff(i);
        mpz_class d = c.den();
        if (d % ctx->p == 0) throw std::domain_error("reduce_mod_p: denominator divisible by p");
        g.set_coeff(i, Zmod(ctx, c.num() * zinvmod(d, ctx->m)));
    }
    return g;
}

// gcd over Q, monic; modular fast path for the common coprime case
inline QPoly gcd_q(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : make_monic(b);
    if (b.is_zero()) return make_monic(a);
    QPoly A = primitive_z(a), B = primitive_z(b);
    // quick coprimality check modulo a few primes
    mpz_class bad = A.lc().num() * B.lc().num();
    int checked = 0;
    for (mpz_class p = 10007; checked < 2; p = z_next_prime(p)) {
        if (bad % p == 0) continue;
        checked++;
        auto ctx = make_zmod_ctx(p, 1);
        auto g = poly_gcd(reduce_mod_p(A, ctx), reduce_mod_p(B, ctx));
        if (g.degree() == 0) return A.one_like();
    }
    // primitive PRS
    while (!B.is_zero()) {
        // pseudo remainder lc(B)^(d+1) A mod B
        int d = A.degree() - B.degree();
        QPoly R = A;
        if (d < 0) { std::swap(A, B); continue; }
        Rat lb = B.lc();
        Rat mult(1);
        for (int i = 0; i <= d; i++) mult *= lb;
        R = R.scaled(mult);
        while (!R.is_zero() && R.degree() >= B.degree()) {
            int k = R.degree() - B.degree();
            Rat c = R.lc() / lb;
            R = R - B.scaled(c).shifted_up(k);
        }
        A = B;
        B = R.is_zero() ? R : primitive_z(R);
    }
    return make_monic(A);
}

// Yun's squarefree decomposition over Q: f = prod g_i^i up to a constant
inline std::vector<std::pair<QPoly, int>> squarefree_decomp_q(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() <= 0) return out;
    QPoly F = make_monic(f);
    QPoly G = gcd_q(F, F.derivative());
    QPoly C = divexact(F, G);
    QPoly D = divexact(F.derivative(), G) - C.derivative();
    int i = 1;
    while (C.degree() > 0) {
        QPoly B = gcd_q(C, D);
        if (B.degree() > 0) out.push_back({B, i});
        C = divexact(C, B);
        D = divexact(D, B) - C.derivative();
        i++;
    }
    return out;
}

namespace zass {

// multi-factor linear Hensel lifting: G = l * prod(g_i) mod p^k, g_i monic
struct HenselData {
    ZmodCtxPtr ctx1;                     // mod p
    std::vector<UniPoly<Zmod>> inv_bez;  // (prod_{j != i} g_j)^{-1} mod (g_i, p)
};

inline std::vector<QPoly> hensel_lift_factors(const QPoly& G, std::vector<UniPoly<Zmod>> g,
                                              const mpz_class& p, int target_k) {
    int r = (int)g.size();
    auto ctx1 = make_zmod_ctx(p, 1);
    // Bezout data at level p
    std::vector<UniPoly<Zmod>> inv_bez;
    for (int i = 0; i < r; i++) {
        UniPoly<Zmod> prod{Zmod(ctx1, 1)};
        prod = prod.one_like();
        for (int j = 0; j < r; j++) {
            if (j == i) continue;
            prod = poly_mod(prod * g[j], g[i]);
        }
        auto [d, u, v] = poly_xgcd(prod, g[i]);
        if (d.degree() != 0) throw MathError("hensel: factors not coprime");
        inv_bez.push_back(poly_mod(u, g[i]));
    }

    mpz_class l = G.lc().num(); // G integer primitive
    // integer coefficient vectors for the lifted factors
    std::vector<std::vector<mpz_class>> gi(r);
    for (int i = 0; i < r; i++) {
        gi[i].assign(g[i].degree() + 1, 0);
        for (int d = 0; d <= g[i].degree(); d++) gi[i][d] = g[i].coeff(d).rep();
    }
    mpz_class pk = p;
    for (int k = 1; k < target_k; k++, pk *= p) {
        mpz_class pk1 = pk * p;
        // error E = (G - l * prod g_i) / p^k mod p
        // compute prod over Z/p^{k+1}
        auto ctxk1 = make_zmod_ctx(p, k + 1);
        UniPoly<Zmod> prod{Zmod(ctxk1, 1)};
        prod = prod.one_like();
        for (int i = 0; i < r; i++) {
            UniPoly<Zmod> gik{Zmod(ctxk1, 0)};
            for (size_t d = 0; d < gi[i].size(); d++) gik.set_coeff((int)d, Zmod(ctxk1, gi[i][d]));
            prod = prod * gik;
        }
        UniPoly<Zmod> Gk = reduce_mod_p(G, ctxk1);
        UniPoly<Zmod> Err = Gk - prod.scaled(Zmod(ctxk1, l));
        // divide by p^k
        UniPoly<Zmod> E{Zmod(ctx1, 0)};
        for (int d = 0; d <= Err.degree(); d++) {
            mpz_class v = Err.coeff(d).rep();
            if (v % pk != 0) throw MathError("hensel: error not divisible by p^k");
            E.set_coeff(d, Zmod(ctx1, v / pk));
        }
        if (E.is_zero()) continue;
        // corrections d_i = E * l^{-1} * inv_bez_i mod (g_i, p)
        Zmod linv = Zmod(ctx1, l).inv();
        for (int i = 0; i < r; i++) {
            UniPoly<Zmod> di = poly_mod(E.scaled(linv) * inv_bez[i], g[i]);
            for (int d = 0; d <= di.degree(); d++) {
                gi[i].resize(std::max(gi[i].size(), (size_t)d + 1), 0);
                gi[i][d] = zmod_floor(gi[i][d] + pk * di.coeff(d).rep(), pk1);
            }
        }
    }
    // return factors as integer polynomials with balanced coefficients mod p^target
    std::vector<QPoly> out;
    mpz_class M = zpow(p, target_k);
    for (int i = 0; i < r; i++) {
        QPoly f{Rat(0)};
        for (size_t d = 0; d < gi[i].size(); d++) f.set_coeff((int)d, Rat(zmod_balanced(gi[i][d], M)));
        out.push_back(f);
    }
    return out;
}

} // namespace zass

// Factor a squarefree primitive integer polynomial into irreducibles over Q
// (returned monic). Classic Zassenhaus: factor mod p, Hensel lift, recombine
// subsets. Degree cap 64.
inline std::vector<QPoly> factor_squarefree_q(const QPoly& G0) {
    QPoly G = primitive_z(G0);
    int n = G.degree();
    if (n > 64) throw MathError("factor_q: degree cap 64 exceeded");
    if (n == 1) return {make_monic(G)};
    // choose a prime keeping G squarefree of full degree; among a handful of
    // candidates keep the one with the fewest modular factors (and exit early
    // when some reduction is irreducible)
    mpz_class l = G.lc().num();
    mpz_class p_try = 3;
    Rng edf_rng(0x5eedf00dULL);
    std::vector<UniPoly<Zmod>> gmod;
    mpz_class p = 0;
    int tried = 0;
    while (tried < 4) {
        p_try = z_next_prime(p_try);
        if (l % p_try == 0) continue;
        auto ctx = make_zmod_ctx(p_try, 1);
        auto Gp = reduce_mod_p(G, ctx);
        if (Gp.degree() != n) continue;
        if (poly_gcd(Gp, Gp.derivative()).degree() != 0) continue;
        tried++;
        auto fq = make_zq_ctx(p_try, 1, 1);
        UniPoly<ZqElem> Gq{ZqElem::from_int(fq, 0)};
        for (int i = 0; i <= Gp.degree(); i++) Gq.set_coeff(i, ZqElem::from_int(fq, Gp.coeff(i).rep()));
        auto fac = factor_fq(Gq, edf_rng);
        if (fac.size() == 1) return {make_monic(G)};
        if (gmod.empty() || fac.size() < gmod.size()) {
            gmod.clear();
            for (auto& [f, m] : fac) {
                (void)m;
                UniPoly<Zmod> g{Zmod(ctx, 0)};
                for (int i = 0; i <= f.degree(); i++) g.set_coeff(i, Zmod(ctx, f.coeff(i).coeffs()[0]));
                gmod.push_back(g);
            }
            p = p_try;
        }
    }

    // Landau-Mignotte style bound on factor coefficients
    mpz_class H = 0;
    for (int i = 0; i <= n; i++) {
        mpz_class a = abs(G.coeff(i).num());
        if (a > H) H = a;
    }
    mpz_class B = (mpz_class(n + 1) * H) << (n + 1);
    B *= abs(l);
    int k = 1;
    mpz_class pk = p;
    while (pk <= 2 * B) { pk *= p; k++; }

    std::vector<QPoly> lifted = zass::hensel_lift_factors(G, gmod, p, k);
    mpz_class M = pk;

    // subset recombination
    std::vector<QPoly> out;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); i++) alive[i] = (int)i;
    QPoly rem = G;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        QPoly prod = QPoly::constant(Rat(rem.lc().num()));
        for (int idx : subset) prod = prod * lifted[idx];
        // balance mod M and take the primitive part
        QPoly bal{Rat(0)};
        for (int i = 0; i <= prod.degree(); i++)
            bal.set_coeff(i, Rat(zmod_balanced(prod.coeff(i).num(), M)));
        bal = primitive_z(bal);
        if (bal.degree() == 0) return false;
        auto [q, r] = divrem(rem, bal);
        if (!r.is_zero()) return false;
        // exact rational division succeeded -> bal is a true factor
        out.push_back(make_monic(bal));
        rem = primitive_z(q);
        return true;
    };

    size_t card = 1;
    while (2 * card <= alive.size()) {
        // iterate subsets of the alive indices of size card
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; i++) idx[i] = i;
        bool found = false;
        while (true) {
            std::vector<int> subset;
            for (size_t i : idx) subset.push_back(alive[i]);
            if (try_subset(subset)) {
                std::vector<int> na;
                for (size_t i = 0, j = 0; i < alive.size(); i++) {
                    if (j < idx.size() && idx[j] == i) { j++; continue; }
                    na.push_back(alive[i]);
                }
                alive = na;
                found = true;
                break;
            }
            // next combination
            int pos = (int)card - 1;
            while (pos >= 0 && idx[pos] == alive.size() - card + pos) pos--;
            if (pos < 0) break;
            idx[pos]++;
            for (size_t i = pos + 1; i < card; i++) idx[i] = idx[i - 1] + 1;
        }
        if (!found) card++;
    }
    if (rem.degree() > 0) out.push_back(make_monic(rem));
    return out;
}

// complete factorization over Q into monic irreducibles with multiplicities
inline std::vector<std::pair<QPoly, int>> factor_q(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_q: zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    for (auto& [sf, mult] : squarefree_decomp_q(f)) {
        for (auto& g : factor_squarefree_q(sf)) out.push_back({g, mult});
    }
    return out;
}

inline bool q_irreducible(const QPoly& f) {
    auto fac = factor_q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace divpol
