#pragma once

#include <optional>

#include "rat.hpp"
#include "unipoly.hpp"
#include "zmod.hpp"
#include "localmat.hpp"

namespace divpol {

// p-adic rational reconstruction: the unique n/d with |n| <= numbound,
// 0 < d <= denbound, gcd(d, p) = 1 and n = r d mod p^e, or nullopt.
// Requires 2 * numbound * denbound < p^e.
inline std::optional<Rat> rational_reconstruct(const Zmod& r, const mpz_class& numbound, const mpz_class& denbound) {
    const mpz_class& m = r.ctx()->m;
    if (2 * numbound * denbound >= m)
        throw std::domain_error("rational_reconstruct: bounds too large for the modulus");
    mpz_class r0 = m, r1 = r.rep();
    mpz_class t0 = 0, t1 = 1;
    while (r1 > numbound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class n = r1, d = t1;
    if (d < 0) { d = -d; n = -n; }
    if (d > denbound) return std::nullopt;
    if (zgcd(n, d) != 1) return std::nullopt;
    if (zgcd(d, r.ctx()->p) != 1) return std::nullopt;
    // verify the congruence
    if (zmod_floor(n - r.rep() * d, m) != 0) return std::nullopt;
    return Rat(n, d);
}

// symmetric bounds: |n|, d <= floor(sqrt((m-1)/2))
inline std::optional<Rat> rational_reconstruct_balanced(const Zmod& r) {
    mpz_class b = zsqrt_floor((r.ctx()->m - 1) / 2);
    return rational_reconstruct(r, b, b);
}

template <class R>
struct PadeResult {
    UniPoly<R> num;
    UniPoly<R> den;
    int deg_num_used; // actual degrees (degree drop is tolerated and reported)
    int deg_den_used;
};

// Pade approximant of a truncated series s (coefficients s.coeff(0..order-1)):
// find (N, D) with deg N <= degN, deg D <= degD, D(0) a unit, and
// N = s D mod t^(degN+degD+1). Solved through the nullspace of the Toeplitz
// system so that denominator degree drop is tolerated. Returns nullopt when no
// solution with invertible constant term exists.
template <class R>
std::optional<PadeResult<R>> pade_approximant(const UniPoly<R>& s, int degN, int degD, int order) {
    if (degN + degD + 1 > order)
        throw std::domain_error("pade_approximant: not enough series coefficients");
    const R zero = s.zero_elem();
    // unknowns d_0..d_degD; equations: coeff_{degN+1..degN+degD}(s * D) = 0
    Mat<R> M(degD, degD + 1, zero);
    for (int i = 0; i < degD; i++) {
        int target = degN + 1 + i;
        for (int j = 0; j <= degD; j++) {
            int k = target - j;
            M.at(i, j) = (k >= 0) ? s.coeff(k) : zero;
        }
    }
    std::vector<std::vector<R>> ker;
    try {
        ker = kernel_good_reduction(M);
    } catch (const BadReduction&) {
        return std::nullopt;
    }
    for (auto& v : ker) {
        if (!v[0].is_unit()) continue;
        R inv0 = v[0].inv();
        UniPoly<R> D(zero);
        for (int j = 0; j <= degD; j++) D.set_coeff(j, v[j] * inv0);
        UniPoly<R> prod = (s.truncated(degN + degD + 1) * D).truncated(degN + degD + 1);
        // the high part vanishes by construction; keep the low part
        UniPoly<R> N = prod.truncated(degN + 1);
        // guard: verify the defining congruence on the window
        UniPoly<R> check = (s.truncated(degN + degD + 1) * D).truncated(degN + degD + 1) - N;
        if (!check.is_zero()) continue;
        return PadeResult<R>{N, D, N.degree(), D.degree()};
    }
    return std::nullopt;
}

// expand N/D as a power series to the requested order (D(0) must be a unit)
template <class R>
UniPoly<R> series_expand_ratio(const UniPoly<R>& N, const UniPoly<R>& D, int order) {
    const R zero = N.zero_elem();
    if (D.coeff(0).is_zero() || !D.coeff(0).is_unit())
        throw std::domain_error("series_expand_ratio: denominator constant term not a unit");
    R c0 = D.coeff(0).inv();
    UniPoly<R> out(zero);
    // long division: out_k = c0 * (N_k - sum_{j>=1} D_j out_{k-j})
    for (int k = 0; k < order; k++) {
        R acc = N.coeff(k);
        for (int j = 1; j <= D.degree() && j <= k; j++)
            acc = acc - D.coeff(j) * out.coeff(k - j);
        out.set_coeff(k, acc * c0);
    }
    return out;
}

} // namespace divpol
