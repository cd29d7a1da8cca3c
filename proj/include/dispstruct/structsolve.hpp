#pragma once

#include <optional>

#include "dispstruct/structmul.hpp"

namespace ds {

enum class Outcome { Ok, Singular, NoSolution, Failure };
const char* outcome_name(Outcome o);

// Unit upper triangular Toeplitz matrix whose first row is v (v[0] = 1).
struct TriangularToeplitz {
    Vec v;

    explicit TriangularToeplitz(Vec first_row);
    size_t size() const { return v.size(); }
    Vec apply(const Vec& x, bool transposed = false) const;
    Vec solve(const Vec& x, bool transposed = false) const;
    DenseMatrix apply(const DenseMatrix& X, bool transposed = false) const;
    DenseMatrix dense() const;
};

// A with Z_{m,0} A - A Z_{n,0}^t = G H^t and last row u. The operator is singular,
// the last row pins A down.
struct PartlyRegular {
    DenseMatrix G, H;
    Vec u;

    size_t m() const { return G.rows; }
    size_t n() const { return H.rows; }
    size_t alpha() const { return G.cols; }
    // Same matrix for the invertible operator with Z_{m,1} on the left.
    Generator regular() const;
};
DenseMatrix densify(const PartlyRegular& A);

// Data of A_l^{-1} for the leading l x l block: Y = -A_l^{-1} G_l, Z = A_l^{-t} H_l,
// v = first row of A_l^{-1}.
struct LeadingInverse {
    size_t ell = 0;
    DenseMatrix Y, Z;
    Vec v;

    // A_l^{-1} for the invertible operator with Z_{l,1}^t on the left.
    Generator regular() const;
};

// Generator of U(v1) A U(v2)^t for A given by a Hankel-type generator (hankel_operator(m, n)).
PartlyRegular precond(const DenseMatrix& G, const DenseMatrix& H, const TriangularToeplitz& v1,
                      const TriangularToeplitz& v2);

// l = largest order with every leading principal minor up to l nonzero.
LeadingInverse largest_rec(const PartlyRegular& A);
LeadingInverse largest(const PartlyRegular& A);
// Empty when A lacks generic rank profile; otherwise l = rank(A).
std::optional<LeadingInverse> lp_inv(const PartlyRegular& A);

struct SolveOptions {
    std::optional<u64> sample_size;  // |S|, default 2 k (k + 1)
    u64 seed = 0;
    // fixed preconditioners, bypassing the generator
    std::optional<Vec> v1, v2;
};

struct HankelInverse {
    Outcome status = Outcome::Failure;
    DenseMatrix Y, Z;  // -A^{-1} G and A^{-t} H
};
struct SolveResult {
    Outcome status = Outcome::Failure;
    Vec x;
};

// Cores for Z_{m,0} A - A Z_{n,1}^t = G H^t.
HankelInverse hankel_inv(const DenseMatrix& G, const DenseMatrix& H, const SolveOptions& opt = {});
SolveResult hankel_solve(const DenseMatrix& G, const DenseMatrix& H, const Vec& b, const SolveOptions& opt = {});

struct InverseResult {
    Outcome status = Outcome::Failure;
    std::optional<Generator> inverse;  // for inverse_operator(gen.op)
};

// Any invertible operator, through the basic and Hankel reductions.
InverseResult inv(const Generator& gen, const SolveOptions& opt = {});
SolveResult solve(const Generator& gen, const Vec& b, const SolveOptions& opt = {});

}  // namespace ds
