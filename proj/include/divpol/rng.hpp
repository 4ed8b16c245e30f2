#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace divpol {

// Deterministic, platform-independent RNG (xoshiro256** seeded by splitmix64).
// All randomness in the library flows through explicitly passed Rng objects,
// so identical seeds reproduce identical runs bit for bit.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (int i = 0; i < 4; i++) s_[i] = splitmix(x);
    }

    uint64_t u64() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, n), n > 0
    uint64_t below(uint64_t n) {
        // rejection sampling to stay unbiased
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = u64(); } while (v >= lim);
        return v % n;
    }

    // uniform in [0, m), m > 0
    mpz_class mpz_below(const mpz_class& m) {
        size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        mpz_class v;
        while (true) {
            v = 0;
            for (size_t i = 0; i < words; i++) {
                v <<= 64;
                mpz_class w((unsigned long)(u64() >> 32));
                w <<= 32;
                w += (unsigned long)(u64() >> 32);
                v += w;
            }
            v >>= (words * 64 - bits);
            if (v < m) return v;
        }
    }

    // independent stream; distinct ids give (practically) independent sequences
    Rng fork(uint64_t stream_id) {
        uint64_t base = u64_peek() ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        return Rng(base);
    }

private:
    uint64_t s_[4];

    uint64_t u64_peek() const { return s_[0] ^ s_[3]; }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static uint64_t splitmix(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

} // namespace divpol
