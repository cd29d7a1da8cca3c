#include "dispstruct/oracle.hpp"

namespace ds {

DenseMatrix DenseMatrix::identity(size_t n) {
    DenseMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I(i, i) = Fp(1);
    return I;
}

DenseMatrix DenseMatrix::from_columns(size_t rows, const std::vector<Vec>& cs) {
    DenseMatrix A(rows, cs.size());
    for (size_t j = 0; j < cs.size(); ++j) A.set_col(j, cs[j]);
    return A;
}

Vec DenseMatrix::col(size_t j) const {
    Vec v(rows);
    for (size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec DenseMatrix::row(size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

void DenseMatrix::set_col(size_t j, const Vec& v) {
    if (v.size() != rows) throw DimensionMismatch("column length");
    for (size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

DenseMatrix DenseMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows || c0 + nc > cols) throw DimensionMismatch("block out of range");
    DenseMatrix B(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) B(i, j) = (*this)(r0 + i, c0 + j);
    return B;
}

DenseMatrix transpose(const DenseMatrix& A) {
    DenseMatrix T(A.cols, A.rows);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

DenseMatrix dense_mul(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.cols != B.rows) throw DimensionMismatch("dense product");
    DenseMatrix C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            Fp x = A(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < B.cols; ++j) C(i, j) += x * B(k, j);
        }
    return C;
}

Vec dense_mul(const DenseMatrix& A, const Vec& v) {
    if (A.cols != v.size()) throw DimensionMismatch("dense matrix-vector product");
    Vec r(A.rows);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) r[i] += A(i, j) * v[j];
    return r;
}

DenseMatrix dense_add(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw DimensionMismatch("dense sum");
    DenseMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

DenseMatrix dense_sub(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw DimensionMismatch("dense difference");
    DenseMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

DenseMatrix dense_scale(const DenseMatrix& A, Fp c) {
    DenseMatrix C = A;
    for (auto& x : C.a) x *= c;
    return C;
}

DenseMatrix hcat(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.rows != B.rows) throw DimensionMismatch("horizontal concatenation");
    DenseMatrix C(A.rows, A.cols + B.cols);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
        for (size_t j = 0; j < B.cols; ++j) C(i, A.cols + j) = B(i, j);
    }
    return C;
}

bool is_zero(const DenseMatrix& A) {
    for (auto x : A.a)
        if (!x.is_zero()) return false;
    return true;
}

Rref rref(const DenseMatrix& A) {
    DenseMatrix R = A;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < R.cols && r < R.rows; ++c) {
        size_t p = r;
        while (p < R.rows && R(p, c).is_zero()) ++p;
        if (p == R.rows) continue;
        if (p != r)
            for (size_t j = 0; j < R.cols; ++j) std::swap(R(p, j), R(r, j));
        Fp inv = R(r, c).inv();
        for (size_t j = c; j < R.cols; ++j) R(r, j) *= inv;
        for (size_t i = 0; i < R.rows; ++i) {
            if (i == r || R(i, c).is_zero()) continue;
            Fp f = R(i, c);
            for (size_t j = c; j < R.cols; ++j) R(i, j) -= f * R(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    R.a.resize(r * R.cols);
    R.rows = r;
    return {R, piv};
}

size_t dense_rank(const DenseMatrix& A) { return rref(A).pivots.size(); }

DenseMatrix dense_inv(const DenseMatrix& A) {
    if (A.rows != A.cols) throw DimensionMismatch("inverse of a non-square matrix");
    size_t n = A.rows;
    Rref r = rref(hcat(A, DenseMatrix::identity(n)));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularMatrix();
    return r.R.block(0, n, n, n);
}

DenseSolution dense_solve(const DenseMatrix& A, const Vec& b) {
    if (b.size() != A.rows) throw DimensionMismatch("right-hand side length");
    DenseMatrix aug(A.rows, A.cols + 1);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    Rref r = rref(aug);
    DenseSolution s;
    s.consistent = r.pivots.empty() || r.pivots.back() != A.cols;
    std::vector<bool> is_piv(A.cols, false);
    for (size_t k = 0; k < r.pivots.size(); ++k)
        if (r.pivots[k] < A.cols) is_piv[r.pivots[k]] = true;
    if (s.consistent) {
        s.x.assign(A.cols, Fp());
        for (size_t k = 0; k < r.pivots.size(); ++k) s.x[r.pivots[k]] = r.R(k, A.cols);
    }
    for (size_t f = 0; f < A.cols; ++f) {
        if (is_piv[f]) continue;
        Vec k(A.cols);
        k[f] = Fp(1);
        for (size_t i = 0; i < r.pivots.size(); ++i)
            if (r.pivots[i] < A.cols) k[r.pivots[i]] = -r.R(i, f);
        s.kernel.push_back(std::move(k));
    }
    return s;
}

DenseMatrix dense_companion(const PolyFamily& fam, bool transposed) {
    size_t m = fam.total_degree();
    DenseMatrix M(m, m);
    for (size_t b = 0; b < fam.size(); ++b) {
        const Poly& f = fam.member(b);
        size_t k = fam.degree(b), o = fam.offset(b);
        for (size_t i = 1; i < k; ++i) M(o + i, o + i - 1) = Fp(1);
        for (size_t i = 0; i < k; ++i) M(o + i, o + k - 1) = -f[i];
    }
    return transposed ? transpose(M) : M;
}

DenseMatrix dense_apply_operator(const DisplacementOperator& L, const DenseMatrix& A) {
    if (A.rows != L.m() || A.cols != L.n()) throw DimensionMismatch("operator format");
    DenseMatrix M = dense_companion(L.P(), L.transpose_P());
    DenseMatrix N = dense_companion(L.Q(), L.transpose_Q());
    if (L.kind() == OpKind::Sylvester) return dense_sub(dense_mul(M, A), dense_mul(A, N));
    return dense_sub(A, dense_mul(dense_mul(M, A), N));
}

namespace {

bool is_hankel_type(const DisplacementOperator& L) {
    if (L.kind() != OpKind::Sylvester || L.transpose_P() || !L.transpose_Q()) return false;
    if (L.P().size() != 1 || L.Q().size() != 1) return false;
    const Poly& p = L.P().member(0);
    const Poly& q = L.Q().member(0);
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!p[i].is_zero()) return false;
    for (size_t i = 1; i + 1 < q.size(); ++i)
        if (!q[i].is_zero()) return false;
    return q[0] == -Fp(1);
}

// a_{i,j} = a_{i-1,j+1} - r_{i,j+1}, indices of j taken mod n.
DenseMatrix hankel_recurrence(const DenseMatrix& R) {
    size_t m = R.rows, n = R.cols;
    DenseMatrix A(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t jn = (j + 1) % n;
            A(i, j) = (i ? A(i - 1, jn) : Fp()) - R(i, jn);
        }
    return A;
}

}  // namespace

DenseMatrix dense_solve_displacement(const DisplacementOperator& L, const DenseMatrix& rhs) {
    size_t m = L.m(), n = L.n();
    if (rhs.rows != m || rhs.cols != n) throw DimensionMismatch("operator format");
    if (is_hankel_type(L)) return hankel_recurrence(rhs);
    if (m * n > (size_t{1} << 16)) throw SizeLimit("vectorized displacement system too large");
    DenseMatrix M = dense_companion(L.P(), L.transpose_P());
    DenseMatrix N = dense_companion(L.Q(), L.transpose_Q());
    size_t s = m * n;
    // unknown a_{k,l} sits at l*m + k, equation (i,j) at j*m + i
    DenseMatrix K(s, s);
    Vec b(s);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) {
            size_t e = j * m + i;
            b[e] = rhs(i, j);
            if (L.kind() == OpKind::Sylvester) {
                for (size_t k = 0; k < m; ++k) K(e, j * m + k) += M(i, k);
                for (size_t l = 0; l < n; ++l) K(e, l * m + i) -= N(l, j);
            } else {
                K(e, e) += Fp(1);
                for (size_t k = 0; k < m; ++k) {
                    if (M(i, k).is_zero()) continue;
                    for (size_t l = 0; l < n; ++l) K(e, l * m + k) -= M(i, k) * N(l, j);
                }
            }
        }
    DenseSolution sol = dense_solve(K, b);
    if (!sol.kernel.empty()) throw SingularOperator();
    DenseMatrix A(m, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) A(i, j) = sol.x[j * m + i];
    return A;
}

}  // namespace ds
