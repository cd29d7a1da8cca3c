#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dispstruct/errors.hpp"
#include "dispstruct/field.hpp"

namespace ds {

// Coefficient i is the coefficient of x^i. Zero is the empty vector.
using Poly = std::vector<Fp>;
using Vec = std::vector<Fp>;

void trim(Poly& a);
Poly trimmed(Poly a);
long deg(const Poly& a);  // -1 for zero
Fp lead(const Poly& a);
Fp eval(const Poly& a, Fp x);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Fp c);
void add_into(Poly& acc, const Poly& b, size_t shift = 0);

// a mod x^k, a div x^k, x^k * a
Poly truncate(const Poly& a, size_t k);
Poly shift_down(const Poly& a, size_t k);
Poly shift_up(const Poly& a, size_t k);

// Coefficient vector of fixed length n (pads with zeros, throws if too long).
Vec to_vec(const Poly& a, size_t n);

void ntt(std::vector<Fp>& a, bool inverse);
void set_strict_ntt(bool strict);  // when set, products beyond NTT capacity throw DegreeOverflow
size_t ntt_size(size_t len);       // smallest power of two >= len

Poly mul_schoolbook(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly mul_trunc(const Poly& a, const Poly& b, size_t k);
// c_i = sum_j a_j b_{i+j} for i < n (transposed product)
Vec middle_product(const Poly& a, const Vec& b, size_t n);

Poly rev(const Poly& a, long d);
Poly series_inv(const Poly& a, size_t k);

void set_newton_threshold(size_t t);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);

struct Xgcd {
    Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
// a^{-1} mod m; throws ZeroInverse if gcd(a, m) != 1
Poly inv_mod(const Poly& a, const Poly& m);

// Remainder by a fixed modulus with a cached Newton inverse.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(Poly b);
    const Poly& poly() const { return b_; }
    size_t degree() const { return b_.size() - 1; }
    Poly rem(const Poly& a) const;
    std::pair<Poly, Poly> divrem(const Poly& a) const;

private:
    Poly b_;
    Poly rinv_;  // inverse of rev(b) mod x^{deg b}
};

// Y_P v and Y_P^{-1} v for the triangular Hankel symmetrizer of monic P.
Vec y_apply(const Poly& P, const Vec& v, bool inverse);

// Values a(u q^i), i < n, and the inverse map.
Vec geom_eval(Fp u, Fp q, const Poly& a, size_t n);
Poly geom_interp(Fp u, Fp q, const Vec& values);

enum class Flavor { General, SinglePower, Geometric };

class PolyFamily {
public:
    struct Node {
        size_t lo, hi;  // member range [lo, hi)
        int left = -1, right = -1;
        Poly poly;
        Poly rev_poly;  // rev(poly, deg poly)
        Divisor div;
    };

    static PolyFamily build(std::vector<Poly> polys, Flavor hint = Flavor::General);

    size_t size() const { return polys_.size(); }
    size_t total_degree() const { return m_; }
    const Poly& product() const { return nodes_[0].poly; }
    const Poly& member(size_t i) const { return polys_[i]; }
    const std::vector<Poly>& members() const { return polys_; }
    size_t degree(size_t i) const { return polys_[i].size() - 1; }
    size_t offset(size_t i) const { return offsets_[i]; }
    const Poly& E(size_t i) const { return E_[i]; }
    const Poly& F(size_t i) const { return F_[i]; }
    const Divisor& divisor(size_t i) const { return member_div_[i]; }
    const std::vector<Node>& tree() const { return nodes_; }
    Flavor flavor() const { return flavor_; }
    Fp geom_u() const { return gu_; }
    Fp geom_q() const { return gq_; }
    Fp power_phi() const { return phi_; }

    // Split a stacked vector of length m into per-member polynomials and back.
    std::vector<Poly> split(const Vec& v) const;
    Vec stack(const std::vector<Poly>& parts) const;

private:
    int build_node(size_t lo, size_t hi);

    std::vector<Poly> polys_;
    std::vector<size_t> offsets_;
    size_t m_ = 0;
    std::vector<Node> nodes_;
    std::vector<Divisor> member_div_;
    std::vector<Poly> E_, F_;
    Flavor flavor_ = Flavor::General;
    Fp gu_, gq_, phi_;
};

std::vector<Poly> red_family(const PolyFamily& fam, const Poly& a);
Poly comb_family(const PolyFamily& fam, const std::vector<Poly>& parts);
std::vector<Poly> comb_family_inv(const PolyFamily& fam, const Poly& a);
Poly crt_family(const PolyFamily& fam, const std::vector<Poly>& residues);
// W_P^t u, or W_P^{-t} u when inverse is set. u has length m.
Vec red_transposed(const PolyFamily& fam, const Vec& u, bool inverse);
// Transpose of multiplication by F modulo P, via power projections.
Vec modmul_transposed_pp(const Poly& F, const Poly& P, const Vec& w);

}  // namespace ds
