#pragma once

#include "dispstruct/field.hpp"

namespace ds {

// Counter-based SplitMix64 stream. split() derives an independent stream.
class Rng {
public:
    explicit Rng(u64 seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    u64 next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }
    u64 below(u64 n) {
        if (n == 0) throw std::invalid_argument("empty range");
        u64 limit = ~0ULL - (~0ULL % n);
        u64 x;
        do x = next();
        while (x >= limit);
        return x % n;
    }
    Fp field() { return Fp(below(prime())); }
    Fp nonzero() { return Fp(1 + below(prime() - 1)); }
    Rng split(u64 stream) const { return Rng(key_ ^ mix(stream + 0xbb67ae8584caa73bULL)); }

private:
    static u64 mix(u64 z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    u64 key_;
    u64 ctr_ = 0;
};

}  // namespace ds
