#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ds {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("inverse of zero") {}
};

enum class PrimeChoice { Default, P62 };

// Active modulus. Set once at startup; all Fp values assume it.
struct Modulus {
    u64 p;
    u64 barrett;      // floor(2^64 / p), used only when p < 2^32
    u64 generator;    // primitive root mod p
    int two_adicity;  // largest s with 2^s | p - 1
    bool small;
};

namespace detail {
inline Modulus g_mod{998244353ULL, (~0ULL) / 998244353ULL, 3, 23, true};
}

inline const Modulus& modulus() { return detail::g_mod; }
inline u64 prime() { return detail::g_mod.p; }

void set_prime(PrimeChoice c);
// Any prime below 2^62; generator and two-adicity are computed. Used for small-field checks.
void set_prime_value(u64 p);
bool is_prime(u64 n);
PrimeChoice parse_prime(const std::string& name);

class Fp {
public:
    constexpr Fp() = default;
    Fp(u64 x) : v_(x % prime()) {}
    static Fp raw(u64 x) {
        Fp r;
        r.v_ = x;
        return r;
    }
    static Fp from_signed(long long x) {
        if (x >= 0) return Fp(static_cast<u64>(x));
        return -Fp(static_cast<u64>(-(x + 1)) + 1);
    }

    u64 value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const {
        u64 s = v_ + o.v_;
        if (s >= prime()) s -= prime();
        return raw(s);
    }
    Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + (prime() - o.v_)); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : prime() - v_); }
    Fp operator*(Fp o) const {
        const Modulus& m = detail::g_mod;
        if (m.small) {
            u64 x = v_ * o.v_;
            u64 q = static_cast<u64>((static_cast<u128>(x) * m.barrett) >> 64);
            u64 r = x - q * m.p;
            return raw(r >= m.p ? r - m.p : r);
        }
        return raw(static_cast<u64>((static_cast<u128>(v_) * o.v_) % m.p));
    }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    Fp pow(u64 e) const {
        Fp b = *this, r = raw(1);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    Fp inv() const;
    Fp operator/(Fp o) const { return *this * o.inv(); }

    bool operator==(const Fp&) const = default;

private:
    u64 v_ = 0;
};

std::string to_string(Fp a);
Fp parse_fp(const std::string& s);

// Primitive 2^k-th root of unity; throws if k exceeds the two-adicity.
Fp root_of_unity(int k);

}  // namespace ds
