#include "dispstruct/structmul.hpp"

#include <atomic>

namespace ds {

namespace {

std::atomic<size_t> g_cutoff{16};

bool pow2(size_t x) { return x && !(x & (x - 1)); }

size_t ceil_div(size_t a, size_t b) { return (a + b - 1) / b; }

// rows j < count hold the j-th x^c chunk of each U_k
PolyMatrix chunk_rows(const std::vector<Poly>& U, size_t count, size_t c) {
    PolyMatrix out(count, U.size(), c);
    for (size_t k = 0; k < U.size(); ++k)
        for (size_t j = 0; j < count && j * c < U[k].size(); ++j) {
            Poly part(U[k].begin() + j * c, U[k].begin() + std::min(U[k].size(), (j + 1) * c));
            trim(part);
            out(j, k) = std::move(part);
        }
    return out;
}

std::vector<Poly> recombine(const PolyMatrix& Y, size_t c) {
    std::vector<Poly> R(Y.cols);
    for (size_t i = 0; i < Y.cols; ++i) {
        for (size_t j = 0; j < Y.rows; ++j) add_into(R[i], Y(j, i), j * c);
        trim(R[i]);
    }
    return R;
}

PolyMatrix transpose_pm(const PolyMatrix& A) {
    PolyMatrix T(A.cols, A.rows, A.degree_bound);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

// U^t X for an abar x cols matrix X, through the chunked rewrite
std::vector<Poly> left_times(const std::vector<Poly>& U, const PolyMatrix& X, size_t m, size_t count) {
    size_t c = std::max<size_t>(1, ceil_div(m, count));
    return recombine(pm_mul(chunk_rows(U, count, c), X), c);
}

void check_sizes(const std::vector<Poly>& U, size_t m, size_t n, const std::vector<Poly>& V, const std::vector<Poly>& W) {
    for (const Poly& u : U)
        if (u.size() > m) throw BoundTooSmall();
    for (const Poly& v : V)
        if (v.size() > n) throw BoundTooSmall();
    for (const Poly& w : W)
        if (w.size() > n) throw BoundTooSmall();
}

}  // namespace

void set_mul_cutoff(size_t nu) { g_cutoff = nu; }
size_t mul_cutoff() { return g_cutoff; }

std::vector<Poly> mul_rec(const std::vector<Poly>& U, const PolyMatrix& V, const PolyMatrix& W, size_t m, size_t nu,
                          size_t abar, size_t gamma) {
    if (!pow2(abar) || !pow2(gamma) || !pow2(nu) || gamma > abar || U.size() != abar || V.rows != abar ||
        W.rows != abar || V.cols != gamma || W.cols != gamma)
        throw PreconditionViolated("mul_rec shapes");
    if (gamma == abar || nu <= g_cutoff || nu == 1) {
        PolyMatrix VW = pm_mul(V, transpose_pm(W));
        for (Poly& e : VW.entries) e = truncate(e, nu);
        VW.degree_bound = nu;
        return left_times(U, VW, m, abar);
    }
    size_t half = nu / 2;
    PolyMatrix V0(abar, gamma, half), W0(abar, gamma, half);
    PolyMatrix V2(abar, 2 * gamma, half), W2(abar, 2 * gamma, half);
    for (size_t k = 0; k < abar; ++k)
        for (size_t j = 0; j < gamma; ++j) {
            V0(k, j) = truncate(V(k, j), half);
            W0(k, j) = truncate(W(k, j), half);
            V2(k, j) = V0(k, j);
            V2(k, gamma + j) = shift_down(V(k, j), half);
            W2(k, j) = shift_down(W(k, j), half);
            W2(k, gamma + j) = W0(k, j);
        }
    std::vector<Poly> R = mul_rec(U, V2, W2, m, half, abar, 2 * gamma);
    // U^t V0 W0^t, with U^t V0 taken first (gamma columns only)
    size_t c = std::max<size_t>(1, ceil_div(m, gamma));
    PolyMatrix UV = pm_mul(chunk_rows(U, gamma, c), V0);
    std::vector<Poly> low = recombine(pm_mul(UV, transpose_pm(W0)), c);
    for (size_t i = 0; i < abar; ++i) {
        Poly r = shift_up(R[i], half);
        R[i] = add(r, low[i]);
    }
    return R;
}

std::vector<Poly> mul(const std::vector<Poly>& U, const std::vector<Poly>& V, const std::vector<Poly>& W, size_t m,
                      size_t n) {
    size_t alpha = U.size();
    if (V.size() != alpha || W.size() != alpha) throw DimensionMismatch("mul operand lengths");
    if (alpha > n) throw PreconditionViolated("alpha > n");
    check_sizes(U, m, n, V, W);
    if (alpha == 0) return {};
    size_t nbar = ntt_size(n), delta = nbar - n, abar = ntt_size(alpha);
    std::vector<Poly> Ub(abar);
    PolyMatrix Vb(abar, 1, nbar), Wb(abar, 1, nbar);
    for (size_t k = 0; k < alpha; ++k) {
        Ub[k] = trimmed(U[k]);
        Vb(k, 0) = trimmed(V[k]);
        Wb(k, 0) = shift_up(trimmed(W[k]), delta);
    }
    std::vector<Poly> R = mul_rec(Ub, Vb, Wb, m, nbar, abar, 1);
    R.resize(alpha);
    for (Poly& r : R) r = shift_down(r, delta);
    return R;
}

std::vector<Poly> mul_unbalanced(const std::vector<Poly>& U, const std::vector<Poly>& V, const std::vector<Poly>& W,
                                 size_t m, size_t n) {
    size_t alpha = U.size(), beta = W.size();
    if (V.size() != alpha) throw DimensionMismatch("mul_unbalanced operand lengths");
    if (alpha > n) throw PreconditionViolated("alpha > n");
    if (alpha == 0 || beta == 0) return std::vector<Poly>(beta);
    if (alpha == beta) return mul(U, V, W, m, n);
    std::vector<Poly> R(beta);
    if (alpha < beta) {
        for (size_t s = 0; s < beta; s += alpha) {
            std::vector<Poly> Wc(alpha);
            for (size_t i = 0; i < alpha && s + i < beta; ++i) Wc[i] = W[s + i];
            std::vector<Poly> Rc = mul(U, V, Wc, m, n);
            for (size_t i = 0; i < alpha && s + i < beta; ++i) R[s + i] = std::move(Rc[i]);
        }
        return R;
    }
    for (size_t s = 0; s < alpha; s += beta) {
        std::vector<Poly> Uc(beta), Vc(beta);
        for (size_t k = 0; k < beta && s + k < alpha; ++k) {
            Uc[k] = U[s + k];
            Vc[k] = V[s + k];
        }
        std::vector<Poly> Rc = mul(Uc, Vc, W, m, n);
        for (size_t i = 0; i < beta; ++i) R[i] = add(R[i], Rc[i]);
    }
    return R;
}

std::vector<Poly> mulQ(const std::vector<Poly>& U, const std::vector<Poly>& V, const std::vector<Poly>& W, size_t m,
                       const Poly& Q) {
    long dq = deg(Q);
    if (dq < 1 || lead(Q) != Fp(1)) throw PreconditionViolated("Q must be monic of positive degree");
    size_t n = static_cast<size_t>(dq);
    size_t alpha = U.size(), beta = W.size();
    if (V.size() != alpha) throw DimensionMismatch("mulQ operand lengths");
    if (alpha > n) throw PreconditionViolated("alpha > n");
    check_sizes(U, m, n, V, W);
    std::vector<Poly> R(beta);
    if (alpha == 0 || beta == 0 || m == 0) return R;
    // T = sum_k U_k V_k as a 1 x alpha by alpha x 1 product, each operand transformed once
    PolyMatrix Urow(1, alpha, m), Vcol(alpha, 1, n);
    for (size_t k = 0; k < alpha; ++k) {
        Urow(0, k) = trimmed(U[k]);
        Vcol(k, 0) = trimmed(V[k]);
    }
    Poly T = pm_mul(Urow, Vcol)(0, 0);
    std::vector<Poly> S(beta);
    if (n > 1) {
        Poly rq = series_inv(rev(Q, dq), n - 1);
        std::vector<Poly> Ut(alpha), Vt(alpha), Wt(beta);
        for (size_t k = 0; k < alpha; ++k) {
            Ut[k] = rev(U[k], static_cast<long>(m) - 1);
            Vt[k] = mul_trunc(rev(V[k], dq - 1), rq, n - 1);
        }
        for (size_t i = 0; i < beta; ++i) Wt[i] = truncate(rev(W[i], dq - 1), n - 1);
        // precision n-1 may be below alpha = n: split U, V
        std::vector<Poly> St(beta);
        for (size_t s = 0; s < alpha; s += n - 1) {
            size_t e = std::min(alpha, s + n - 1);
            std::vector<Poly> Uc(Ut.begin() + s, Ut.begin() + e), Vc(Vt.begin() + s, Vt.begin() + e);
            std::vector<Poly> Sc = mul_unbalanced(Uc, Vc, Wt, m, n - 1);
            for (size_t i = 0; i < beta; ++i) St[i] = add(St[i], Sc[i]);
        }
        for (size_t i = 0; i < beta; ++i) S[i] = rev(St[i], static_cast<long>(m + n) - 3);
    }
    // [T, -Q] times the 2 x beta matrix [W; S]
    PolyMatrix TQ(1, 2, m + n), WS(2, beta, n);
    TQ(0, 0) = T;
    TQ(0, 1) = scale(Q, -Fp(1));
    for (size_t i = 0; i < beta; ++i) {
        WS(0, i) = trimmed(W[i]);
        WS(1, i) = std::move(S[i]);
    }
    // deg R_i < m + n - 1, so the cyclic product of that length is exact
    PolyMatrix out = pm_mul(TQ, WS, m + n - 1);
    for (size_t i = 0; i < beta; ++i) R[i] = std::move(out(0, i));
    return R;
}

DenseMatrix struct_mul(const Generator& gen, const DenseMatrix& B) {
    check_generator(gen);
    size_t m = gen.m(), n = gen.n(), beta = B.cols;
    if (B.rows != n) throw DimensionMismatch("struct_mul: B has the wrong number of rows");
    if (!gen.op.invertible()) throw SingularOperator();
    DenseMatrix C(m, beta);
    if (gen.alpha() == 0 || beta == 0) return C;

    BasicForm f = to_basic(gen);
    const DisplacementOperator& op = f.gen.op;
    const PolyFamily& P = op.P();
    const PolyFamily& Q = op.Q();
    bool stein = op.kind() == OpKind::Stein;

    std::vector<Poly> Bp(beta);
    for (size_t i = 0; i < beta; ++i) {
        Vec x = B.col(i);
        if (f.right_y) x = y_apply_family(Q, x, true);
        Bp[i] = comb_family(Q, Q.split(y_apply_family(Q, x, false)));
    }
    size_t alpha = f.gen.alpha();
    std::vector<Poly> gamma(alpha), eta(alpha);
    for (size_t k = 0; k < alpha; ++k) {
        gamma[k] = crt_family(P, P.split(f.gen.G.col(k)));
        if (stein) gamma[k] = rev(gamma[k], static_cast<long>(m) - 1);
        eta[k] = crt_family(Q, Q.split(f.gen.H.col(k)));
    }
    // generator columns in groups of at most n, partial results summed
    std::vector<Poly> R(beta);
    for (size_t s = 0; s < alpha; s += n) {
        size_t e = std::min(alpha, s + n);
        std::vector<Poly> Uc(gamma.begin() + s, gamma.begin() + e), Vc(eta.begin() + s, eta.begin() + e);
        std::vector<Poly> Rc = mulQ(Uc, Vc, Bp, m, Q.product());
        for (size_t i = 0; i < beta; ++i) R[i] = add(R[i], Rc[i]);
    }
    const Divisor& pdiv = P.tree()[0].div;
    const auto& qinv = op.q_inverses();
    for (size_t i = 0; i < beta; ++i) {
        Poly r = stein ? rev(R[i], static_cast<long>(m + n) - 2) : R[i];
        std::vector<Poly> parts = red_family(P, pdiv.rem(r));
        for (size_t j = 0; j < parts.size(); ++j) parts[j] = P.divisor(j).rem(mul(parts[j], qinv[j]));
        Vec y = P.stack(parts);
        if (f.left_y) y = y_apply_family(gen.op.P(), y, true);
        C.set_col(i, y);
    }
    return C;
}

}  // namespace ds
