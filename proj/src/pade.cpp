#include "dispstruct/pade.hpp"

#include <algorithm>
#include <numeric>

namespace ds {

namespace {

size_t total(const std::vector<size_t>& v) { return std::accumulate(v.begin(), v.end(), size_t{0}); }

Poly x_power(size_t k) {
    Poly p(k + 1);
    p[k] = Fp(1);
    return p;
}

// stacked residues of x^k R_{.,j}
Vec shifted_column(const PadeProblem& pb, const PolyFamily& P, size_t j, size_t k, Fp c) {
    std::vector<Poly> parts(pb.moduli.size());
    for (size_t i = 0; i < parts.size(); ++i)
        parts[i] = scale(rem(shift_up(pb.residuals[i][j], k), pb.moduli[i]), c);
    return P.stack(parts);
}

}  // namespace

void check_pade(const PadeProblem& pb) {
    size_t d = pb.moduli.size(), a = pb.bounds.size();
    if (d == 0 || a == 0) throw BadDegreeProfile("need at least one modulus and one unknown");
    if (pb.residuals.size() != d) throw DimensionMismatch("one residual row per modulus");
    for (const auto& row : pb.residuals)
        if (row.size() != a) throw DimensionMismatch("one residual per unknown");
    for (size_t b : pb.bounds)
        if (b == 0) throw BadDegreeProfile("degree bounds must be positive");
    size_t m = 0;
    for (const Poly& P : pb.moduli) {
        if (deg(P) < 1 || lead(P) != Fp(1)) throw BadDegreeProfile("moduli must be monic and nonconstant");
        m += static_cast<size_t>(deg(P));
    }
    if (total(pb.bounds) < m) throw BadDegreeProfile("more equations than unknowns");
}

DenseMatrix pade_dense(const PadeProblem& pb) {
    check_pade(pb);
    FamilyPtr P = make_family(pb.moduli);
    DenseMatrix A(P->total_degree(), total(pb.bounds));
    size_t s = 0;
    for (size_t j = 0; j < pb.bounds.size(); ++j)
        for (size_t t = 0; t < pb.bounds[j]; ++t) A.set_col(s++, shifted_column(pb, *P, j, t, Fp(1)));
    return A;
}

Generator pade_generator(const PadeProblem& pb, Fp phi) {
    check_pade(pb);
    size_t a = pb.bounds.size(), N = total(pb.bounds);
    FamilyPtr P = make_family(pb.moduli);
    Poly q = x_power(N);
    q[0] -= phi;
    FamilyPtr Q = make_family({q}, Flavor::SinglePower);
    DisplacementOperator op(OpKind::Stein, P, Q, false, true);
    size_t m = P->total_degree();
    DenseMatrix G(m, a), H(N, a);
    size_t start = 0;
    for (size_t j = 0; j < a; ++j) {
        size_t prev = j ? j - 1 : a - 1;
        Vec g = shifted_column(pb, *P, j, 0, Fp(1));
        Vec h = shifted_column(pb, *P, prev, pb.bounds[prev], j ? Fp(1) : phi);
        for (size_t i = 0; i < m; ++i) g[i] -= h[i];
        G.set_col(j, g);
        H(start, j) = Fp(1);
        start += pb.bounds[j];
    }
    return Generator{op, G, H, std::nullopt};
}

bool pade_check(const PadeProblem& pb, const std::vector<Poly>& f) {
    if (f.size() != pb.bounds.size()) return false;
    bool nonzero = false;
    for (size_t j = 0; j < f.size(); ++j) {
        if (deg(f[j]) >= static_cast<long>(pb.bounds[j])) return false;
        nonzero |= deg(f[j]) >= 0;
    }
    if (!nonzero) return false;
    for (size_t i = 0; i < pb.moduli.size(); ++i) {
        Poly acc;
        for (size_t j = 0; j < f.size(); ++j) acc = add(acc, mul(f[j], pb.residuals[i][j]));
        if (deg(rem(acc, pb.moduli[i])) >= 0) return false;
    }
    return true;
}

PadeResult pade_solve(const PadeProblem& pb, u64 seed, const SolveOptions& opt) {
    check_pade(pb);
    Rng rng(seed);
    PadeResult out;
    std::optional<Generator> gen;
    for (int attempt = 0; attempt < 64 && !gen; ++attempt) {
        Fp phi = rng.nonzero();
        Generator g = pade_generator(pb, phi);
        if (g.op.invertible()) {
            gen = std::move(g);
            out.phi = phi;
        }
    }
    if (!gen) return out;
    out.generator_length = gen->alpha();
    SolveOptions so = opt;
    so.seed = rng.next();
    SolveResult s = solve(*gen, Vec(gen->m()), so);
    if (s.status != Outcome::Ok) {
        out.status = s.status;
        return out;
    }
    bool zero = true;
    for (Fp c : s.x) zero &= c.is_zero();
    if (zero) {
        out.status = Outcome::NoSolution;
        return out;
    }
    // first nonzero unknown scaled to 1
    Fp lead_inv = (*std::find_if(s.x.begin(), s.x.end(), [](Fp c) { return !c.is_zero(); })).inv();
    for (Fp& c : s.x) c *= lead_inv;
    size_t o = 0;
    for (size_t b : pb.bounds) {
        Poly p(s.x.begin() + o, s.x.begin() + o + b);
        trim(p);
        out.f.push_back(std::move(p));
        o += b;
    }
    out.status = pade_check(pb, out.f) ? Outcome::Ok : Outcome::Failure;
    if (out.status != Outcome::Ok) out.f.clear();
    return out;
}

PadeProblem planted_pade(Rng& rng, std::vector<Poly> moduli, std::vector<size_t> bounds) {
    PadeProblem pb{std::move(moduli), {}, std::move(bounds)};
    size_t a = pb.bounds.size();
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Poly> f(a);
        for (size_t j = 0; j < a; ++j) f[j] = random_poly(rng, pb.bounds[j]);
        pb.residuals.assign(pb.moduli.size(), std::vector<Poly>(a));
        bool ok = true;
        for (size_t i = 0; i < pb.moduli.size() && ok; ++i) {
            const Poly& P = pb.moduli[i];
            Poly acc;
            for (size_t j = 0; j + 1 < a; ++j) {
                pb.residuals[i][j] = random_poly(rng, static_cast<size_t>(deg(P)));
                acc = add(acc, mul(f[j], pb.residuals[i][j]));
            }
            if (a == 1) {
                // only f_1 R = 0: plant a zero residual
                continue;
            }
            if (deg(gcd(f[a - 1], P)) != 0) {
                ok = false;
                break;
            }
            pb.residuals[i][a - 1] = rem(scale(mul(acc, inv_mod(f[a - 1], P)), -Fp(1)), P);
        }
        if (ok) {
            check_pade(pb);
            return pb;
        }
    }
    throw InfeasibleSpec("could not plant a Pade instance");
}

}  // namespace ds
