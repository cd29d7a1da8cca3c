#pragma once

#include <functional>
#include <optional>

#include "dispstruct/oracle.hpp"

namespace ds {

// L(A) = G H^t. last_row is only used with partly regular operators.
struct Generator {
    DisplacementOperator op;
    DenseMatrix G, H;
    std::optional<Vec> last_row;

    size_t alpha() const { return G.cols; }
    size_t m() const { return op.m(); }
    size_t n() const { return op.n(); }
};

// Checks row counts and equal column counts; throws DimensionMismatch.
void check_generator(const Generator& gen);

DenseMatrix map_columns(const DenseMatrix& A, const std::function<Vec(const Vec&)>& f);

Vec gen_matvec(const Generator& gen, const Vec& u);
DenseMatrix reconstruct_dense(const Generator& gen);
Generator gen_transpose(const Generator& gen);
Generator gen_compress(const Generator& gen);

// Operator satisfied by A^{-1}: families swapped, flags carried over.
DisplacementOperator inverse_operator(const DisplacementOperator& op);

// gen describes Y_P^{left} A Y_Q^{right} for the basic operator of the same kind.
struct BasicForm {
    Generator gen;
    bool left_y = false, right_y = false;
};
BasicForm to_basic(const Generator& gen);
// Generator of A^{-1} for inverse_operator(orig) from one of (Y_P^l A Y_Q^r)^{-1}.
Generator from_basic_inverse(const DisplacementOperator& orig, const Generator& inv_of_basic);

// Reduction of a basic generator to the Hankel operator nabla_{Z_{m,0}, Z_{n,1}^t}.
// Sylvester: the Hankel matrix is L A R. Stein: it is L A R J.
struct HankelContext {
    Generator basic;  // the input
    Vec t, u, r, s;
    bool identity = false;  // input already Hankel type, L = R = I

    Vec L(const Vec& v, bool transposed = false) const;
    Vec R(const Vec& v, bool transposed = false) const;
    // A x = b  <=>  H y = left(b), x = right(y), H the Hankel matrix
    Vec left(const Vec& b) const { return L(b); }
    Vec right(const Vec& y) const;
};

struct HankelForm {
    Generator gen;
    HankelContext ctx;
};
HankelForm to_hankel(const Generator& basic);
// inv_gen: generator of H^{-1} for nabla_{Z_{n,1}^t, Z_{m,0}} (square case).
Generator from_hankel_inverse(const HankelContext& ctx, const Generator& inv_gen);

// nabla_{Z_{n,1}^t, Z_{m,0}}
DisplacementOperator hankel_inverse_operator(size_t m);

}  // namespace ds
