#pragma once

#include <functional>
#include <initializer_list>

#include "dispstruct/instances.hpp"
#include "dispstruct/pade.hpp"
#include "doctest.h"

namespace dt {

using namespace ds;

// Switches the active prime for one test case.
struct PrimeScope {
    explicit PrimeScope(u64 p) { set_prime_value(p); }
    ~PrimeScope() { set_prime(PrimeChoice::Default); }
};

inline Poly P(std::initializer_list<long long> c) {
    Poly p;
    for (long long x : c) p.push_back(Fp::from_signed(x));
    trim(p);
    return p;
}

inline Vec V(std::initializer_list<long long> c) {
    Vec v;
    for (long long x : c) v.push_back(Fp::from_signed(x));
    return v;
}

inline DenseMatrix M(std::initializer_list<std::initializer_list<long long>> rows) {
    size_t r = rows.size(), c = rows.begin()->size();
    DenseMatrix A(r, c);
    size_t i = 0;
    for (auto& row : rows) {
        size_t j = 0;
        for (long long x : row) A(i, j++) = Fp::from_signed(x);
        ++i;
    }
    return A;
}

inline Vec unit(size_t n, size_t i) {
    Vec e(n);
    e[i] = Fp(1);
    return e;
}

// Dense matrix of a linear map F^n -> F^rows.
inline DenseMatrix densify(size_t rows, size_t n, const std::function<Vec(const Vec&)>& f) {
    DenseMatrix A(rows, n);
    for (size_t j = 0; j < n; ++j) A.set_col(j, f(unit(n, j)));
    return A;
}

inline Poly naive_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

}  // namespace dt

namespace dt {

// Long division remainder, one coefficient at a time.
inline Poly naive_rem(Poly a, const Poly& b) {
    trim(a);
    long db = deg(b);
    Fp li = lead(b).inv();
    while (deg(a) >= db) {
        size_t s = a.size() - 1 - static_cast<size_t>(db);
        Fp c = a.back() * li;
        for (size_t i = 0; i <= static_cast<size_t>(db); ++i) a[s + i] -= c * b[i];
        trim(a);
    }
    return a;
}

}  // namespace dt
