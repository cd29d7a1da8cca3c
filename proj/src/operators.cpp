#include "dispstruct/operators.hpp"

namespace ds {

Vec companion_apply(const PolyFamily& fam, const Vec& v, bool transposed) {
    if (v.size() != fam.total_degree()) throw DimensionMismatch("companion input length");
    Vec out(v.size());
    for (size_t b = 0; b < fam.size(); ++b) {
        const Poly& f = fam.member(b);
        size_t k = fam.degree(b), o = fam.offset(b);
        if (!transposed) {
            Fp last = v[o + k - 1];
            for (size_t i = 0; i < k; ++i) out[o + i] = (i ? v[o + i - 1] : Fp()) - f[i] * last;
        } else {
            Fp acc;
            for (size_t i = 0; i < k; ++i) acc += f[i] * v[o + i];
            for (size_t i = 0; i + 1 < k; ++i) out[o + i] = v[o + i + 1];
            out[o + k - 1] = -acc;
        }
    }
    return out;
}

Vec modmul_apply(const Poly& F, const Poly& P, const Vec& v) {
    size_t k = static_cast<size_t>(deg(P));
    Poly r = rem(trimmed(v), P);
    return to_vec(rem(mul(rem(F, P), r), P), k);
}

Vec modmul_apply_transposed(const Poly& F, const Poly& P, const Vec& v) {
    return y_apply(P, modmul_apply(F, P, y_apply(P, v, false)), true);
}

Vec y_apply_family(const PolyFamily& fam, const Vec& v, bool inverse) {
    if (v.size() != fam.total_degree()) throw DimensionMismatch("symmetrizer input length");
    Vec out(v.size());
    for (size_t b = 0; b < fam.size(); ++b) {
        size_t k = fam.degree(b), o = fam.offset(b);
        Vec part(v.begin() + o, v.begin() + o + k);
        Vec r = y_apply(fam.member(b), part, inverse);
        std::copy(r.begin(), r.end(), out.begin() + o);
    }
    return out;
}

Vec w_apply(const PolyFamily& fam, const Vec& v) { return fam.stack(red_family(fam, trimmed(v))); }

DisplacementOperator::DisplacementOperator(OpKind kind, FamilyPtr P, FamilyPtr Q, bool transpose_P, bool transpose_Q)
    : kind_(kind), P_(std::move(P)), Q_(std::move(Q)), tP_(transpose_P), tQ_(transpose_Q), cache_(std::make_shared<Cache>()) {}

namespace {
Poly q_side(const DisplacementOperator& op) {
    const Poly& q = op.Q().product();
    return op.kind() == OpKind::Sylvester ? q : rev(q, static_cast<long>(op.n()));
}
}  // namespace

bool DisplacementOperator::invertible() const {
    std::call_once(cache_->inv_once, [&] { cache_->invertible = gcd(P_->product(), q_side(*this)).size() == 1; });
    return cache_->invertible;
}

const std::vector<Poly>& DisplacementOperator::q_inverses() const {
    if (!invertible()) throw SingularOperator();
    std::call_once(cache_->q_once, [&] {
        std::vector<Poly> red = red_family(*P_, q_side(*this));
        std::vector<Poly> inv(red.size());
        for (size_t i = 0; i < red.size(); ++i) inv[i] = inv_mod(red[i], P_->member(i));
        cache_->q_inv = std::move(inv);
    });
    return cache_->q_inv;
}

DisplacementOperator DisplacementOperator::transposed() const {
    return DisplacementOperator(kind_, Q_, P_, !tQ_, !tP_);
}

DisplacementOperator DisplacementOperator::basic() const { return DisplacementOperator(kind_, P_, Q_, false, true); }

DisplacementOperator hankel_operator(size_t m, size_t n) {
    Poly xm(m + 1), xn1(n + 1);
    xm[m] = Fp(1);
    xn1[n] = Fp(1);
    xn1[0] = -Fp(1);
    return DisplacementOperator(OpKind::Sylvester, make_family({xm}, Flavor::SinglePower), make_family({xn1}, Flavor::SinglePower), false, true);
}

DisplacementOperator toeplitz_operator(size_t m, size_t n) {
    Poly a(m + 1), b(n + 1);
    a[m] = Fp(1);
    a[0] = -Fp(1);
    b[n] = Fp(1);
    b[0] = Fp(1);
    return DisplacementOperator(OpKind::Sylvester, make_family({a}, Flavor::SinglePower), make_family({b}, Flavor::SinglePower), false, true);
}

}  // namespace ds
