#include "dispstruct/generators.hpp"

#include <algorithm>

namespace ds {

void check_generator(const Generator& gen) {
    if (gen.G.rows != gen.m() || gen.H.rows != gen.n()) throw DimensionMismatch("generator rows do not match the operator format");
    if (gen.G.cols != gen.H.cols) throw DimensionMismatch("G and H have different lengths");
    if (gen.last_row && gen.last_row->size() != gen.n()) throw DimensionMismatch("last row length");
}

DenseMatrix map_columns(const DenseMatrix& A, const std::function<Vec(const Vec&)>& f) {
    std::vector<Vec> cols(A.cols);
    size_t rows = A.rows;
    for (size_t j = 0; j < A.cols; ++j) {
        cols[j] = f(A.col(j));
        rows = cols[j].size();
    }
    return DenseMatrix::from_columns(rows, cols);
}

DisplacementOperator inverse_operator(const DisplacementOperator& op) {
    return DisplacementOperator(op.kind(), op.Q_ptr(), op.P_ptr(), op.transpose_Q(), op.transpose_P());
}

DisplacementOperator hankel_inverse_operator(size_t m) {
    DisplacementOperator h = hankel_operator(m, m);
    return inverse_operator(h);
}

namespace {

// gamma_k = crt_P(column k of G), eta_k = crt_Q(column k of H)
struct BasicPlan {
    std::vector<Poly> gamma, eta;
};

BasicPlan make_plan(const Generator& gen) {
    BasicPlan plan;
    const PolyFamily& P = gen.op.P();
    const PolyFamily& Q = gen.op.Q();
    for (size_t k = 0; k < gen.alpha(); ++k) {
        plan.gamma.push_back(crt_family(P, P.split(gen.G.col(k))));
        plan.eta.push_back(crt_family(Q, Q.split(gen.H.col(k))));
    }
    return plan;
}

Vec basic_matvec(const Generator& gen, const BasicPlan& plan, const Vec& u) {
    const DisplacementOperator& op = gen.op;
    const PolyFamily& P = op.P();
    const PolyFamily& Q = op.Q();
    size_t n = op.n();
    Poly b = comb_family(Q, Q.split(y_apply_family(Q, u, false)));
    const Divisor& qdiv = Q.tree()[0].div;
    Poly c;
    for (size_t k = 0; k < plan.gamma.size(); ++k) {
        if (plan.gamma[k].empty()) continue;
        Poly t = qdiv.rem(mul(plan.eta[k], b));
        if (op.kind() == OpKind::Stein) t = rev(t, static_cast<long>(n) - 1);
        c = add(c, mul(plan.gamma[k], t));
    }
    std::vector<Poly> parts = red_family(P, c);
    const auto& qinv = op.q_inverses();
    for (size_t i = 0; i < parts.size(); ++i) parts[i] = P.divisor(i).rem(mul(parts[i], qinv[i]));
    return P.stack(parts);
}

}  // namespace

BasicForm to_basic(const Generator& gen) {
    check_generator(gen);
    BasicForm f{gen, gen.op.transpose_P(), !gen.op.transpose_Q()};
    if (gen.op.is_basic()) return f;
    const PolyFamily& P = gen.op.P();
    const PolyFamily& Q = gen.op.Q();
    f.gen.op = gen.op.basic();
    f.gen.last_row.reset();
    if (f.left_y) f.gen.G = map_columns(gen.G, [&](const Vec& v) { return y_apply_family(P, v, false); });
    if (f.right_y) f.gen.H = map_columns(gen.H, [&](const Vec& v) { return y_apply_family(Q, v, false); });
    return f;
}

Generator from_basic_inverse(const DisplacementOperator& orig, const Generator& inv_of_basic) {
    Generator out{inverse_operator(orig), inv_of_basic.G, inv_of_basic.H, std::nullopt};
    if (!orig.transpose_Q()) out.G = map_columns(out.G, [&](const Vec& v) { return y_apply_family(orig.Q(), v, false); });
    if (orig.transpose_P()) out.H = map_columns(out.H, [&](const Vec& v) { return y_apply_family(orig.P(), v, false); });
    return out;
}

Vec gen_matvec(const Generator& gen, const Vec& u) {
    check_generator(gen);
    if (u.size() != gen.n()) throw DimensionMismatch("matvec input length");
    if (!gen.op.invertible()) throw SingularOperator();
    BasicForm f = to_basic(gen);
    Vec x = f.right_y ? y_apply_family(gen.op.Q(), u, true) : u;
    Vec y = basic_matvec(f.gen, make_plan(f.gen), x);
    return f.left_y ? y_apply_family(gen.op.P(), y, true) : y;
}

DenseMatrix reconstruct_dense(const Generator& gen) {
    check_generator(gen);
    if (!gen.op.invertible()) throw SingularOperator();
    BasicForm f = to_basic(gen);
    BasicPlan plan = make_plan(f.gen);
    size_t m = gen.m(), n = gen.n();
    DenseMatrix A(m, n);
    for (size_t j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = Fp(1);
        Vec x = f.right_y ? y_apply_family(gen.op.Q(), e, true) : e;
        Vec y = basic_matvec(f.gen, plan, x);
        if (f.left_y) y = y_apply_family(gen.op.P(), y, true);
        A.set_col(j, y);
    }
    return A;
}

Generator gen_transpose(const Generator& gen) {
    check_generator(gen);
    Generator t{gen.op.transposed(), gen.H, gen.G, std::nullopt};
    if (gen.op.kind() == OpKind::Sylvester) t.G = dense_scale(gen.H, -Fp(1));
    return t;
}

Generator gen_compress(const Generator& gen) {
    check_generator(gen);
    if (gen.alpha() == 0) return gen;
    // G = G[:, J] R, so G H^t = G[:, J] (H R^t)^t
    Rref rg = rref(gen.G);
    std::vector<Vec> gcols;
    for (size_t c : rg.pivots) gcols.push_back(gen.G.col(c));
    DenseMatrix H1 = dense_mul(gen.H, transpose(rg.R));
    Rref rh = rref(H1);
    std::vector<Vec> hcols;
    for (size_t c : rh.pivots) hcols.push_back(H1.col(c));
    Generator out = gen;
    out.G = dense_mul(DenseMatrix::from_columns(gen.m(), gcols), transpose(rh.R));
    out.H = DenseMatrix::from_columns(gen.n(), hcols);
    if (rg.pivots.empty()) out.G = DenseMatrix(gen.m(), 0);
    return out;
}

namespace {

Vec reversed(const Vec& v) { return Vec(v.rbegin(), v.rend()); }

Vec shift_down_vec(const Vec& v) {  // Z_{m,0} v
    Vec r(v.size());
    for (size_t i = 1; i < v.size(); ++i) r[i] = v[i - 1];
    return r;
}

Vec shift_up_vec(const Vec& v) {  // Z_{m,0}^t v
    Vec r(v.size());
    for (size_t i = 0; i + 1 < v.size(); ++i) r[i] = v[i + 1];
    return r;
}

Vec cyclic_up(const Vec& v) {  // Z_{n,1}^t v
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[(i + 1) % v.size()];
    return r;
}

bool hankel_type(const DisplacementOperator& op) {
    if (op.kind() != OpKind::Sylvester || !op.is_basic() || op.P().size() != 1 || op.Q().size() != 1) return false;
    const Poly& p = op.P().member(0);
    const Poly& q = op.Q().member(0);
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!p[i].is_zero()) return false;
    for (size_t i = 1; i + 1 < q.size(); ++i)
        if (!q[i].is_zero()) return false;
    return q[0] == -Fp(1);
}

DenseMatrix column(const Vec& v) { return DenseMatrix::from_columns(v.size(), {v}); }

DenseMatrix hcat3(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c) { return hcat(hcat(a, b), c); }

}  // namespace

Vec HankelContext::L(const Vec& v, bool transposed) const {
    if (identity) return v;
    const PolyFamily& P = basic.op.P();
    if (!transposed) return reversed(red_transposed(P, y_apply_family(P, v, true), false));
    return y_apply_family(P, w_apply(P, reversed(v)), true);
}

Vec HankelContext::R(const Vec& v, bool transposed) const {
    if (identity) return v;
    const PolyFamily& Q = basic.op.Q();
    if (!transposed) return y_apply_family(Q, w_apply(Q, reversed(v)), true);
    return reversed(red_transposed(Q, y_apply_family(Q, v, true), false));
}

Vec HankelContext::right(const Vec& y) const {
    if (basic.op.kind() == OpKind::Stein) return R(reversed(y));
    return R(y);
}

HankelForm to_hankel(const Generator& basic) {
    check_generator(basic);
    if (!basic.op.is_basic()) throw std::invalid_argument("to_hankel expects a basic operator");
    if (!basic.op.invertible()) throw SingularOperator();
    HankelForm hf{basic, HankelContext{basic, {}, {}, {}, {}, false}};
    hf.gen.last_row.reset();
    if (hankel_type(basic.op)) {
        hf.ctx.identity = true;
        return hf;
    }
    size_t m = basic.m(), n = basic.n();
    const PolyFamily& P = basic.op.P();
    const PolyFamily& Q = basic.op.Q();
    HankelContext& c = hf.ctx;
    c.t = Vec(m);
    c.t[0] = Fp(1);
    c.s = Vec(n);
    c.s[0] = Fp(1);
    Vec phat = to_vec(truncate(P.product(), m), m);
    c.u = y_apply_family(P, w_apply(P, phat), true);
    Vec qhat = to_vec(truncate(Q.product(), n), n);
    qhat[0] += Fp(1);
    c.r = y_apply_family(Q, w_apply(Q, qhat), true);
    for (auto& x : c.r) x = -x;

    Vec Ar = gen_matvec(basic, c.r);
    Vec Atu = gen_matvec(gen_transpose(basic), c.u);
    DenseMatrix LG = map_columns(basic.G, [&](const Vec& v) { return c.L(v); });
    DenseMatrix RtH = map_columns(basic.H, [&](const Vec& v) { return c.R(v, true); });
    Generator& g = hf.gen;
    g.op = hankel_operator(m, n);
    if (basic.op.kind() == OpKind::Sylvester) {
        g.G = hcat3(column(c.t), LG, column(c.L(Ar)));
        g.H = hcat3(column(c.R(Atu, true)), RtH, column(c.s));
    } else {
        Vec mt(m);
        mt[0] = -Fp(1);
        DenseMatrix G2 = hcat3(column(mt), LG, column(shift_down_vec(c.L(Ar))));
        DenseMatrix H2 = hcat3(column(c.R(companion_apply(Q, Atu, false), true)), RtH, column(c.s));
        g.G = dense_scale(G2, -Fp(1));
        g.H = map_columns(H2, [](const Vec& v) { return reversed(cyclic_up(v)); });
    }
    return hf;
}

Generator from_hankel_inverse(const HankelContext& ctx, const Generator& inv_gen) {
    check_generator(inv_gen);
    DisplacementOperator out_op = inverse_operator(ctx.basic.op);
    if (ctx.identity) return Generator{out_op, inv_gen.G, inv_gen.H, std::nullopt};
    const PolyFamily& Q = ctx.basic.op.Q();
    Generator inv_t = gen_transpose(inv_gen);
    Generator out{out_op, {}, {}, std::nullopt};
    DenseMatrix LtH = map_columns(inv_gen.H, [&](const Vec& v) { return ctx.L(v, true); });
    if (ctx.basic.op.kind() == OpKind::Sylvester) {
        Vec Kt = gen_matvec(inv_gen, ctx.t);
        Vec Kts = gen_matvec(inv_t, ctx.s);
        DenseMatrix RG = map_columns(inv_gen.G, [&](const Vec& v) { return ctx.R(v); });
        out.G = hcat3(column(ctx.r), RG, column(ctx.R(Kt)));
        out.H = hcat3(column(ctx.L(Kts, true)), LtH, column(ctx.u));
    } else {
        // inv_gen describes J X with X the inverse of L A R
        Vec Xt = reversed(gen_matvec(inv_gen, ctx.t));
        Vec Xts = gen_matvec(inv_t, reversed(ctx.s));
        DenseMatrix RGd = map_columns(inv_gen.G, [&](const Vec& v) { return ctx.R(cyclic_up(reversed(v))); });
        Vec mr = ctx.r;
        for (auto& x : mr) x = -x;
        out.G = hcat3(column(mr), RGd, column(companion_apply(Q, ctx.R(Xt), true)));
        out.H = hcat3(column(ctx.L(shift_up_vec(Xts), true)), LtH, column(ctx.u));
    }
    return gen_compress(out);
}

}  // namespace ds
