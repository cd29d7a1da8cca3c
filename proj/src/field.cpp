#include "dispstruct/field.hpp"

#include <vector>

namespace ds {

void set_prime(PrimeChoice c) {
    if (c == PrimeChoice::Default) {
        detail::g_mod = {998244353ULL, (~0ULL) / 998244353ULL, 3, 23, true};
    } else {
        // 29 * 2^57 + 1
        detail::g_mod = {4179340454199820289ULL, 0, 3, 57, false};
    }
}

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % sp == 0) return n == sp;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s && comp; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

void set_prime_value(u64 p) {
    if (p >= (1ULL << 62) || !is_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^62");
    u64 phi = p - 1;
    int adic = 0;
    while (phi > 0 && (phi & 1) == 0) {
        phi >>= 1;
        ++adic;
    }
    std::vector<u64> factors;
    u64 rest = p - 1;
    for (u64 f = 2; f * f <= rest; ++f) {
        if (rest % f) continue;
        factors.push_back(f);
        while (rest % f == 0) rest /= f;
    }
    if (rest > 1) factors.push_back(rest);
    u64 g = 1;
    if (p > 2) {
        for (g = 2;; ++g) {
            bool ok = true;
            for (u64 f : factors) ok = ok && powmod64(g, (p - 1) / f, p) != 1;
            if (ok) break;
        }
    }
    bool small = p < (1ULL << 32);
    detail::g_mod = {p, small ? (~0ULL) / p : 0, g, adic, small};
}

PrimeChoice parse_prime(const std::string& name) {
    if (name == "default" || name == "998244353") return PrimeChoice::Default;
    if (name == "p62" || name == "4179340454199820289") return PrimeChoice::P62;
    throw std::invalid_argument("unknown prime: " + name);
}

// Extended Euclid on machine integers; values are < 2^63 so signed 128-bit is enough.
Fp Fp::inv() const {
    if (v_ == 0) throw ZeroInverse();
    __int128 a = v_, b = prime(), x0 = 1, x1 = 0;
    while (b != 0) {
        __int128 q = a / b;
        __int128 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    __int128 p = prime();
    x0 %= p;
    if (x0 < 0) x0 += p;
    return raw(static_cast<u64>(x0));
}

std::string to_string(Fp a) { return std::to_string(a.value()); }

Fp parse_fp(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty field element");
    bool neg = s[0] == '-';
    u128 acc = 0;
    for (size_t i = neg ? 1 : 0; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad field element: " + s);
        acc = (acc * 10 + static_cast<u64>(c - '0')) % prime();
    }
    Fp r = Fp::raw(static_cast<u64>(acc));
    return neg ? -r : r;
}

Fp root_of_unity(int k) {
    const Modulus& m = modulus();
    if (k < 0 || k > m.two_adicity) throw std::out_of_range("transform length exceeds prime capacity");
    Fp g(m.generator);
    return g.pow((m.p - 1) >> k);
}

}  // namespace ds
