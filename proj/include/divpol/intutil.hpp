#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace divpol {

inline mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class zlcm(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class zpow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline mpz_class zmod_floor(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// representative in (-m/2, m/2]
inline mpz_class zmod_balanced(const mpz_class& a, const mpz_class& m) {
    mpz_class r = zmod_floor(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline mpz_class zinvmod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("zinvmod: not invertible");
    return r;
}

inline mpz_class zpowmod(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool z_is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline mpz_class z_next_prime(const mpz_class& n) {
    mpz_class r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline mpz_class zdivexact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline mpz_class zsqrt_floor(const mpz_class& a) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool z_is_square(const mpz_class& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline size_t z_digits10(const mpz_class& a) {
    if (a == 0) return 1;
    mpz_class b = abs(a);
    return mpz_sizeinbase(b.get_mpz_t(), 10);
}

// all primes < bound (simple sieve; bound expected to be modest)
inline std::vector<unsigned long> primes_below(unsigned long bound) {
    std::vector<bool> comp(bound, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < bound; i++) {
        if (!comp[i]) {
            out.push_back(i);
            for (unsigned long j = 2 * i; j < bound; j += i) comp[j] = true;
        }
    }
    return out;
}

// divisors of n from its factorization (n expected small)
inline std::vector<mpz_class> small_divisors(const mpz_class& n) {
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class m = abs(n);
    mpz_class d = 2;
    while (d * d <= m) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) { m /= d; e++; }
            fac.push_back({d, e});
        }
        d = (d == 2) ? mpz_class(3) : mpz_class(d + 2);
    }
    if (m > 1) fac.push_back({m, 1});
    std::vector<mpz_class> divs{1};
    for (auto& [p, e] : fac) {
        size_t old = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; k++) {
            pk *= p;
            for (size_t i = 0; i < old; i++) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace divpol
