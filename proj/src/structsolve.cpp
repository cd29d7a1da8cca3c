#include "dispstruct/structsolve.hpp"

#include <algorithm>

#include "dispstruct/rng.hpp"

namespace ds {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Ok: return "ok";
        case Outcome::Singular: return "singular";
        case Outcome::NoSolution: return "no_solution";
        case Outcome::Failure: return "failure";
    }
    return "?";
}

namespace {

Vec unit_vec(size_t n, size_t i) {
    Vec e(n);
    e[i] = Fp(1);
    return e;
}

Vec slice(const Vec& v, size_t start, size_t len) { return Vec(v.begin() + start, v.begin() + start + len); }

Vec pad(const Vec& v, size_t offset, size_t total) {
    Vec out(total);
    std::copy(v.begin(), v.end(), out.begin() + offset);
    return out;
}

Vec vsub(Vec a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

DenseMatrix rows_of(const DenseMatrix& A, size_t start, size_t len) { return A.block(start, 0, len, A.cols); }
DenseMatrix first_cols(const DenseMatrix& A, size_t c) { return A.block(0, 0, A.rows, std::min(c, A.cols)); }

DenseMatrix pad_rows(const DenseMatrix& X, size_t offset, size_t total) {
    DenseMatrix out(total, X.cols);
    for (size_t i = 0; i < X.rows; ++i)
        for (size_t j = 0; j < X.cols; ++j) out(offset + i, j) = X(i, j);
    return out;
}

DenseMatrix column(const Vec& v) { return DenseMatrix::from_columns(v.size(), {v}); }

FamilyPtr power_family(size_t n, Fp phi) {
    Poly p(n + 1);
    p[n] = Fp(1);
    p[0] = -phi;
    return make_family({p}, Flavor::SinglePower);
}

// rank of X Y^t without forming it
size_t rank_of_product(const DenseMatrix& X, const DenseMatrix& Y) {
    if (X.rows == 0 || Y.rows == 0) return 0;
    Rref rx = rref(X);
    if (rx.pivots.empty()) return 0;
    return dense_rank(dense_mul(Y, transpose(rx.R)));
}

LeadingInverse empty_inverse(size_t alpha) {
    LeadingInverse L;
    L.Y = DenseMatrix(0, alpha);
    L.Z = DenseMatrix(0, alpha);
    return L;
}

LeadingInverse dense_leading(const PartlyRegular& A) {
    DenseMatrix D = densify(A);
    size_t k = std::min(D.rows, D.cols), ell = 0;
    DenseMatrix W = D.block(0, 0, k, k);
    // elimination without pivoting stops at the first vanishing leading minor
    for (; ell < k; ++ell) {
        Fp piv = W(ell, ell);
        if (piv.is_zero()) break;
        Fp pi = piv.inv();
        for (size_t i = ell + 1; i < k; ++i) {
            Fp f = W(i, ell) * pi;
            if (f.is_zero()) continue;
            for (size_t j = ell; j < k; ++j) W(i, j) -= f * W(ell, j);
        }
    }
    LeadingInverse L = empty_inverse(A.alpha());
    L.ell = ell;
    if (ell == 0) return L;
    DenseMatrix Ai = dense_inv(D.block(0, 0, ell, ell));
    L.Y = dense_scale(dense_mul(Ai, rows_of(A.G, 0, ell)), -Fp(1));
    L.Z = dense_mul(transpose(Ai), rows_of(A.H, 0, ell));
    L.v = Ai.row(0);
    return L;
}

Vec draw_vector(Rng& rng, size_t n, u64 sample) {
    Vec v(n);
    if (n) v[0] = Fp(1);
    for (size_t i = 1; i < n; ++i) v[i] = Fp(rng.below(sample));
    return v;
}

std::pair<Vec, Vec> preconditioners(size_t m, size_t n, size_t k, const SolveOptions& opt) {
    u64 sample = opt.sample_size ? *opt.sample_size : std::min<u64>(2 * u64(k) * (k + 1), prime());
    if (sample == 0 || sample > prime()) throw PreconditionViolated("sample set size must be in [1, p]");
    Rng rng(opt.seed);
    Vec v1 = opt.v1 ? *opt.v1 : draw_vector(rng, m, sample);
    Vec v2 = opt.v2 ? *opt.v2 : draw_vector(rng, n, sample);
    if (v1.size() != m || v2.size() != n) throw DimensionMismatch("preconditioner lengths");
    return {v1, v2};
}

}  // namespace

TriangularToeplitz::TriangularToeplitz(Vec first_row) : v(std::move(first_row)) {
    if (!v.empty() && v[0] != Fp(1)) throw PreconditionViolated("first entry of a preconditioner must be 1");
}

Vec TriangularToeplitz::apply(const Vec& x, bool transposed) const {
    size_t n = v.size();
    if (x.size() != n) throw DimensionMismatch("Toeplitz apply");
    // U = J L J with L lower triangular Toeplitz, U^t = L
    if (transposed) return to_vec(mul_trunc(trimmed(v), trimmed(x), n), n);
    Vec r = to_vec(mul_trunc(trimmed(v), trimmed(Vec(x.rbegin(), x.rend())), n), n);
    return Vec(r.rbegin(), r.rend());
}

Vec TriangularToeplitz::solve(const Vec& x, bool transposed) const {
    size_t n = v.size();
    if (x.size() != n) throw DimensionMismatch("Toeplitz solve");
    if (n == 0) return {};
    Poly vi = series_inv(trimmed(v), n);
    if (transposed) return to_vec(mul_trunc(vi, trimmed(x), n), n);
    Vec r = to_vec(mul_trunc(vi, trimmed(Vec(x.rbegin(), x.rend())), n), n);
    return Vec(r.rbegin(), r.rend());
}

DenseMatrix TriangularToeplitz::apply(const DenseMatrix& X, bool transposed) const {
    return map_columns(X, [&](const Vec& c) { return apply(c, transposed); });
}

DenseMatrix TriangularToeplitz::dense() const {
    size_t n = v.size();
    DenseMatrix U(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) U(i, j) = v[j - i];
    return U;
}

Generator PartlyRegular::regular() const {
    // Z_{m,1} A - A Z_{n,0}^t = G H^t + e_1 u^t
    DisplacementOperator op(OpKind::Sylvester, power_family(m(), Fp(1)), power_family(n(), Fp(0)), false, true);
    return Generator{op, hcat(G, column(unit_vec(m(), 0))), hcat(H, column(u)), std::nullopt};
}

Generator LeadingInverse::regular() const {
    // Z_{l,1}^t B - B Z_{l,0} = Y Z^t + e_l v^t for B = A_l^{-1}
    DisplacementOperator op(OpKind::Sylvester, power_family(ell, Fp(1)), power_family(ell, Fp(0)), true, false);
    return Generator{op, hcat(Y, column(unit_vec(ell, ell - 1))), hcat(Z, column(v)), std::nullopt};
}

DenseMatrix densify(const PartlyRegular& A) {
    size_t m = A.m(), n = A.n();
    if (A.H.cols != A.G.cols || A.u.size() != n) throw DimensionMismatch("partly regular generator");
    DenseMatrix D(m, n);
    if (m == 0) return D;
    DenseMatrix GH = dense_mul(A.G, transpose(A.H));
    for (size_t j = 0; j < n; ++j) D(m - 1, j) = A.u[j];
    // (G H^t)_{ij} = a_{i-1,j} - a_{i,j-1}
    for (size_t i = m - 1; i >= 1; --i)
        for (size_t j = 0; j < n; ++j) D(i - 1, j) = GH(i, j) + (j ? D(i, j - 1) : Fp());
    return D;
}

PartlyRegular precond(const DenseMatrix& G, const DenseMatrix& H, const TriangularToeplitz& v1,
                      const TriangularToeplitz& v2) {
    size_t m = G.rows, n = H.rows;
    if (G.cols != H.cols || v1.size() != m || v2.size() != n) throw DimensionMismatch("precond shapes");
    Generator A{hankel_operator(m, n), G, H, std::nullopt};
    Generator At = gen_transpose(A);
    const Vec& a = v1.v;
    const Vec& b = v2.v;

    DenseMatrix G1(m, 2), H1(m, 2), G2(n, 2), H2(n, 2);
    for (size_t i = 0; i < m; ++i) {
        if (i > 0) G1(i, 0) = a[m - i];  // Z J v1
        if (i + 1 < m) H1(i, 1) = a[i + 1];  // Z^t v1
    }
    G1(0, 1) = -Fp(1);
    H1(m - 1, 0) = Fp(1);
    for (size_t i = 0; i < n; ++i) {
        G2(i, 0) = i + 1 < n ? b[i + 1] : b[0];  // Z_{n,1}^t v2
        if (i > 0) H2(i, 1) = b[n - i];  // Z J v2
    }
    G2(n - 1, 1) = -Fp(1);
    H2(0, 0) = Fp(1);

    PartlyRegular out;
    out.G = hcat(hcat(v1.apply(G), G1), v1.apply(struct_mul(A, G2)));
    out.H = hcat(hcat(v2.apply(H), v2.apply(struct_mul(At, H1))), H2);
    out.u = v2.apply(gen_matvec(At, v1.apply(unit_vec(m, m - 1), true)));
    return out;
}

LeadingInverse largest_rec(const PartlyRegular& A) {
    size_t m = A.m(), n = A.n(), alpha = A.alpha();
    size_t k0 = std::min(m, n);
    if (k0 == 0) return empty_inverse(alpha);
    if (k0 < 2 * alpha || k0 == 1) return dense_leading(A);

    size_t k = (k0 + 1) / 2;
    Generator reg = A.regular();
    Generator regT = gen_transpose(reg);
    Vec row = gen_matvec(regT, unit_vec(m, k - 1));
    PartlyRegular top{rows_of(A.G, 0, k), rows_of(A.H, 0, k), slice(row, 0, k)};
    LeadingInverse L11 = largest_rec(top);
    if (L11.ell < k) return L11;

    Generator inv11 = L11.regular();
    Generator inv11T = gen_transpose(inv11);
    PartlyRegular S;
    S.G = dense_add(rows_of(A.G, k, m - k), rows_of(struct_mul(reg, pad_rows(L11.Y, 0, n)), k, m - k));
    S.H = dense_sub(rows_of(A.H, k, n - k), rows_of(struct_mul(regT, pad_rows(L11.Z, 0, m)), k, n - k));
    Vec t = gen_matvec(inv11T, slice(A.u, 0, k));
    S.u = vsub(slice(A.u, k, n - k), slice(gen_matvec(regT, pad(t, 0, m)), k, n - k));

    // a zero (1,1) entry of S gives ell_S = 0 and the early return
    LeadingInverse LS = largest_rec(S);
    size_t s = LS.ell;
    if (s == 0) return L11;

    LeadingInverse L;
    L.ell = k + s;
    DenseMatrix X = rows_of(struct_mul(reg, pad_rows(LS.Y, k, n)), 0, k);
    DenseMatrix Ytop = dense_sub(L11.Y, struct_mul(inv11, X));
    DenseMatrix X2 = rows_of(struct_mul(regT, pad_rows(LS.Z, k, m)), 0, k);
    DenseMatrix Ztop = dense_sub(L11.Z, struct_mul(inv11T, X2));
    L.Y = pad_rows(Ytop, 0, L.ell);
    L.Z = pad_rows(Ztop, 0, L.ell);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < alpha; ++j) {
            L.Y(k + i, j) = LS.Y(i, j);
            L.Z(k + i, j) = LS.Z(i, j);
        }
    Vec q = slice(gen_matvec(regT, pad(L11.v, 0, m)), k, s);
    Vec w = gen_matvec(gen_transpose(LS.regular()), q);
    for (Fp& x : w) x = -x;
    Vec p = slice(gen_matvec(regT, pad(w, k, m)), 0, k);
    Vec vtop = vsub(L11.v, gen_matvec(inv11T, p));
    L.v = vtop;
    L.v.insert(L.v.end(), w.begin(), w.end());
    return L;
}

LeadingInverse largest(const PartlyRegular& A) {
    size_t m = A.m(), n = A.n(), alpha = A.alpha();
    if (A.H.cols != alpha || A.u.size() != n) throw DimensionMismatch("partly regular generator");
    if (m == 0 || n == 0) return empty_inverse(alpha);
    size_t pb = ntt_size(std::max(m, n));
    if (pb == m && pb == n) return largest_rec(A);

    PartlyRegular B;
    if (pb == n) {
        B.G = DenseMatrix(pb, alpha + 1);
        B.H = hcat(A.H, column(A.u));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < alpha; ++j) B.G(i, j) = A.G(i, j);
        B.G(m, alpha) = Fp(1);
        B.u = Vec(pb);
    } else {
        Vec last_col = gen_matvec(A.regular(), unit_vec(n, n - 1));
        if (pb == m) {
            B.G = hcat(A.G, dense_scale(column(last_col), -Fp(1)));
            B.H = DenseMatrix(pb, alpha + 1);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < alpha; ++j) B.H(i, j) = A.H(i, j);
            B.H(n, alpha) = Fp(1);
            B.u = A.u;
            B.u.resize(pb);
        } else {
            B.u = Vec(pb);
            std::optional<DenseSolution> shrink;
            if (pb < alpha + 2) {
                DenseSolution sol = dense_solve(A.G, last_col);
                if (sol.consistent) shrink = sol;
            }
            if (shrink) {
                // G u'' = last column: the third border column folds into the first two
                B.G = DenseMatrix(pb, alpha + 1);
                B.H = DenseMatrix(pb, alpha + 1);
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < alpha; ++j) B.G(i, j) = A.G(i, j);
                B.G(m, alpha) = Fp(1);
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = 0; j < alpha; ++j) B.H(i, j) = A.H(i, j);
                    B.H(i, alpha) = A.u[i];
                }
                for (size_t j = 0; j < alpha; ++j) B.H(n, j) = -shrink->x[j];
            } else {
                B.G = DenseMatrix(pb, alpha + 2);
                B.H = DenseMatrix(pb, alpha + 2);
                for (size_t i = 0; i < m; ++i) {
                    for (size_t j = 0; j < alpha; ++j) B.G(i, j) = A.G(i, j);
                    B.G(i, alpha + 1) = -last_col[i];
                }
                B.G(m, alpha) = Fp(1);
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = 0; j < alpha; ++j) B.H(i, j) = A.H(i, j);
                    B.H(i, alpha) = A.u[i];
                }
                B.H(n, alpha + 1) = Fp(1);
            }
        }
    }
    LeadingInverse L = largest_rec(B);
    L.Y = first_cols(L.Y, alpha);
    L.Z = first_cols(L.Z, alpha);
    return L;
}

std::optional<LeadingInverse> lp_inv(const PartlyRegular& A) {
    LeadingInverse L = largest(A);
    size_t m = A.m(), n = A.n(), l = L.ell;
    if (l == m || l == n) return L;
    Generator reg = A.regular();
    Generator regT = gen_transpose(reg);
    DenseMatrix GS = rows_of(A.G, l, m - l), HS = rows_of(A.H, l, n - l);
    Vec uS = slice(A.u, l, n - l);
    if (l > 0) {
        GS = dense_add(GS, rows_of(struct_mul(reg, pad_rows(L.Y, 0, n)), l, m - l));
        HS = dense_sub(HS, rows_of(struct_mul(regT, pad_rows(L.Z, 0, m)), l, n - l));
        Vec t = gen_matvec(gen_transpose(L.regular()), slice(A.u, 0, l));
        uS = vsub(uS, slice(gen_matvec(regT, pad(t, 0, m)), l, n - l));
    }
    // generator of the Schur complement for an invertible operator
    size_t r0 = rank_of_product(hcat(GS, column(unit_vec(m - l, 0))), hcat(HS, column(uS)));
    if (r0 != 0) return std::nullopt;
    return L;
}

HankelInverse hankel_inv(const DenseMatrix& G, const DenseMatrix& H, const SolveOptions& opt) {
    size_t m = G.rows, alpha = G.cols;
    if (H.rows != m || H.cols != alpha) throw DimensionMismatch("inversion needs a square matrix");
    HankelInverse out;
    if (m == 0) {
        out.status = Outcome::Ok;
        return out;
    }
    auto [a, b] = preconditioners(m, m, m, opt);
    TriangularToeplitz U1(a), U2(b);
    std::optional<LeadingInverse> L = lp_inv(precond(G, H, U1, U2));
    if (!L) return out;
    if (L->ell < m) {
        out.status = Outcome::Singular;
        return out;
    }
    out.status = Outcome::Ok;
    out.Y = U2.apply(first_cols(L->Y, alpha), true);
    out.Z = U1.apply(first_cols(L->Z, alpha), true);
    return out;
}

SolveResult hankel_solve(const DenseMatrix& G, const DenseMatrix& H, const Vec& b, const SolveOptions& opt) {
    size_t m = G.rows, n = H.rows;
    if (G.cols != H.cols || b.size() != m) throw DimensionMismatch("solve shapes");
    SolveResult out;
    if (m == 0 || n == 0) {
        out.status = Outcome::Ok;
        out.x = Vec(n);
        if (n > 0) out.x[0] = Fp(1);
        return out;
    }
    auto [a, c] = preconditioners(m, n, std::min(m, n), opt);
    TriangularToeplitz U1(a), U2(c);
    PartlyRegular At = precond(G, H, U1, U2);
    std::optional<LeadingInverse> L = lp_inv(At);
    if (!L) return out;
    size_t r = L->ell;
    Generator reg = At.regular();
    Vec bt = U1.apply(b);
    Vec xt(n);
    std::optional<Generator> inv;
    if (r > 0) {
        inv = L->regular();
        Vec x1 = gen_matvec(*inv, slice(bt, 0, r));
        std::copy(x1.begin(), x1.end(), xt.begin());
    }
    if (r < m) {
        Vec check = gen_matvec(reg, xt);
        if (slice(check, r, m - r) != slice(bt, r, m - r)) {
            out.status = Outcome::NoSolution;
            return out;
        }
    }
    if (r < n) {
        // add the kernel direction [A_r^{-1} A_12 e_1; -e_1]
        if (r > 0) {
            Vec col = slice(gen_matvec(reg, unit_vec(n, r)), 0, r);
            Vec corr = gen_matvec(*inv, col);
            for (size_t i = 0; i < r; ++i) xt[i] += corr[i];
        }
        xt[r] = -Fp(1);
    }
    out.status = Outcome::Ok;
    out.x = U2.apply(xt, true);
    return out;
}

InverseResult inv(const Generator& gen, const SolveOptions& opt) {
    check_generator(gen);
    if (gen.m() != gen.n()) throw DimensionMismatch("inversion needs a square matrix");
    if (!gen.op.invertible()) throw SingularOperator();
    BasicForm f = to_basic(gen);
    HankelForm hf = to_hankel(f.gen);
    HankelInverse hi = hankel_inv(hf.gen.G, hf.gen.H, opt);
    InverseResult out;
    out.status = hi.status;
    if (hi.status != Outcome::Ok) return out;
    Generator ig{hankel_inverse_operator(gen.m()), hi.Y, hi.Z, std::nullopt};
    out.inverse = from_basic_inverse(gen.op, from_hankel_inverse(hf.ctx, ig));
    return out;
}

SolveResult solve(const Generator& gen, const Vec& b, const SolveOptions& opt) {
    check_generator(gen);
    if (b.size() != gen.m()) throw DimensionMismatch("right-hand side length");
    if (!gen.op.invertible()) throw SingularOperator();
    BasicForm f = to_basic(gen);
    Vec bb = f.left_y ? y_apply_family(gen.op.P(), b, false) : b;
    HankelForm hf = to_hankel(f.gen);
    SolveResult r = hankel_solve(hf.gen.G, hf.gen.H, hf.ctx.left(bb), opt);
    if (r.status != Outcome::Ok) return r;
    Vec x = hf.ctx.right(r.x);
    if (f.right_y) x = y_apply_family(gen.op.Q(), x, false);
    r.x = std::move(x);
    return r;
}

}  // namespace ds
