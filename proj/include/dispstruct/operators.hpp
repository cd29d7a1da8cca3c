#pragma once

#include <memory>
#include <mutex>

#include "dispstruct/poly.hpp"

namespace ds {

// Block companion M_P (or its transpose) applied to a stacked vector.
Vec companion_apply(const PolyFamily& fam, const Vec& v, bool transposed);

// F * pol(v) mod P; v may be longer than deg P.
Vec modmul_apply(const Poly& F, const Poly& P, const Vec& v);
// Transpose of the above for |v| = deg P, through the symmetrizer.
Vec modmul_apply_transposed(const Poly& F, const Poly& P, const Vec& v);

// Blockwise symmetrizer of a family.
Vec y_apply_family(const PolyFamily& fam, const Vec& v, bool inverse);

// Multiple reduction of pol(v), stacked. Any length of v.
Vec w_apply(const PolyFamily& fam, const Vec& v);

enum class OpKind { Sylvester, Stein };

using FamilyPtr = std::shared_ptr<const PolyFamily>;

inline FamilyPtr make_family(std::vector<Poly> polys, Flavor hint = Flavor::General) {
    return std::make_shared<const PolyFamily>(PolyFamily::build(std::move(polys), hint));
}

// L(A) = M A - A N (Sylvester) or A - M A N (Stein) with M = M_P or M_P^t, N = M_Q or M_Q^t.
class DisplacementOperator {
public:
    DisplacementOperator(OpKind kind, FamilyPtr P, FamilyPtr Q, bool transpose_P, bool transpose_Q);

    OpKind kind() const { return kind_; }
    const PolyFamily& P() const { return *P_; }
    const PolyFamily& Q() const { return *Q_; }
    FamilyPtr P_ptr() const { return P_; }
    FamilyPtr Q_ptr() const { return Q_; }
    bool transpose_P() const { return tP_; }
    bool transpose_Q() const { return tQ_; }
    size_t m() const { return P_->total_degree(); }
    size_t n() const { return Q_->total_degree(); }
    bool is_basic() const { return !tP_ && tQ_; }

    bool invertible() const;
    // 1/Q mod P_i (Sylvester) or 1/rev(Q) mod P_i (Stein); throws SingularOperator.
    const std::vector<Poly>& q_inverses() const;

    // M v and N v (and transposes) with the operator's own transpose flags.
    Vec apply_M(const Vec& v, bool transposed = false) const { return companion_apply(*P_, v, tP_ != transposed); }
    Vec apply_N(const Vec& v, bool transposed = false) const { return companion_apply(*Q_, v, tQ_ != transposed); }

    // Same kind, families swapped: the operator satisfied by the transpose.
    DisplacementOperator transposed() const;
    // Same kind and families with the flags of the basic operator.
    DisplacementOperator basic() const;

private:
    struct Cache {
        std::once_flag inv_once, q_once;
        bool invertible = false;
        std::vector<Poly> q_inv;
    };

    OpKind kind_;
    FamilyPtr P_, Q_;
    bool tP_, tQ_;
    std::shared_ptr<Cache> cache_;
};

// Hankel-type operator nabla_{Z_{m,0}, Z_{n,1}^t}.
DisplacementOperator hankel_operator(size_t m, size_t n);
// Toeplitz-like: nabla_{Z_{m,1}, Z_{n,-1}^t}
DisplacementOperator toeplitz_operator(size_t m, size_t n);

}  // namespace ds
