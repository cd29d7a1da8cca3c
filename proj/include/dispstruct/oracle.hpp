#pragma once

#include <vector>

#include "dispstruct/operators.hpp"

namespace ds {

// Row-major dense matrix over F_p.
struct DenseMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Fp> a;

    DenseMatrix() = default;
    DenseMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Fp& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    Fp operator()(size_t i, size_t j) const { return a[i * cols + j]; }
    bool operator==(const DenseMatrix&) const = default;

    static DenseMatrix identity(size_t n);
    static DenseMatrix from_columns(size_t rows, const std::vector<Vec>& cols);
    Vec col(size_t j) const;
    Vec row(size_t i) const;
    void set_col(size_t j, const Vec& v);
    DenseMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
};

DenseMatrix transpose(const DenseMatrix& A);
DenseMatrix dense_mul(const DenseMatrix& A, const DenseMatrix& B);
Vec dense_mul(const DenseMatrix& A, const Vec& v);
DenseMatrix dense_add(const DenseMatrix& A, const DenseMatrix& B);
DenseMatrix dense_sub(const DenseMatrix& A, const DenseMatrix& B);
DenseMatrix dense_scale(const DenseMatrix& A, Fp c);
// [A | B]
DenseMatrix hcat(const DenseMatrix& A, const DenseMatrix& B);
bool is_zero(const DenseMatrix& A);

struct Rref {
    DenseMatrix R;                // reduced row echelon form, rank rows kept
    std::vector<size_t> pivots;   // pivot column of each kept row
};
Rref rref(const DenseMatrix& A);
size_t dense_rank(const DenseMatrix& A);
DenseMatrix dense_inv(const DenseMatrix& A);  // throws SingularMatrix

struct DenseSolution {
    bool consistent = false;
    Vec x;                     // particular solution
    std::vector<Vec> kernel;   // basis of the nullspace
};
DenseSolution dense_solve(const DenseMatrix& A, const Vec& b);

// Densified block companion matrix.
DenseMatrix dense_companion(const PolyFamily& fam, bool transposed);
DenseMatrix dense_apply_operator(const DisplacementOperator& L, const DenseMatrix& A);
// Unique A with L(A) = rhs, by the vectorized system (m n <= 2^16).
DenseMatrix dense_solve_displacement(const DisplacementOperator& L, const DenseMatrix& rhs);

}  // namespace ds
