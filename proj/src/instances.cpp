#include "dispstruct/instances.hpp"

namespace ds {

Poly random_poly(Rng& rng, size_t len) {
    Poly p(len);
    for (auto& c : p) c = rng.field();
    trim(p);
    return p;
}

Poly random_monic(Rng& rng, size_t d) {
    Poly p(d + 1);
    for (size_t i = 0; i < d; ++i) p[i] = rng.field();
    p[d] = Fp(1);
    return p;
}

DenseMatrix random_matrix(Rng& rng, size_t rows, size_t cols) {
    DenseMatrix A(rows, cols);
    for (auto& x : A.a) x = rng.field();
    return A;
}

Vec random_vec(Rng& rng, size_t n) {
    Vec v(n);
    for (auto& x : v) x = rng.field();
    return v;
}

FamilyPtr random_family(Rng& rng, size_t m, Flavor flavor, size_t max_part) {
    if (m == 0) throw InfeasibleSpec("family of total degree 0");
    if (flavor == Flavor::SinglePower) {
        Poly p(m + 1);
        p[0] = -rng.field();
        p[m] = Fp(1);
        return make_family({p}, Flavor::SinglePower);
    }
    if (flavor == Flavor::Geometric) {
        if (m >= prime() - 1) throw InfeasibleSpec("more geometric points than field elements");
        for (int attempt = 0; attempt < 100; ++attempt) {
            Fp u = rng.nonzero(), q = rng.nonzero();
            bool ok = true;
            Fp qk = q;
            for (size_t k = 1; k < m && ok; ++k, qk *= q) ok = !(qk == Fp(1));
            if (!ok) continue;
            std::vector<Poly> polys;
            Fp x = u;
            for (size_t i = 0; i < m; ++i, x *= q) polys.push_back({-x, Fp(1)});
            return make_family(std::move(polys), Flavor::Geometric);
        }
        throw InfeasibleSpec("no geometric progression of the requested length found");
    }
    if (max_part == 0) max_part = 1;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Poly> polys;
        size_t left = m;
        while (left > 0) {
            size_t d = 1 + rng.below(std::min(left, max_part));
            polys.push_back(random_monic(rng, d));
            left -= d;
        }
        try {
            return make_family(std::move(polys));
        } catch (const NotCoprime&) {
        }
    }
    throw InfeasibleSpec("could not draw a coprime family");
}

DisplacementOperator random_operator(Rng& rng, size_t m, size_t n, const OperatorSpec& spec) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        DisplacementOperator op(spec.kind, random_family(rng, m, spec.flavor_P, spec.max_part), random_family(rng, n, spec.flavor_Q, spec.max_part),
                                spec.transpose_P, spec.transpose_Q);
        if (op.invertible()) return op;
    }
    throw InfeasibleSpec("could not draw an invertible operator");
}

Generator random_generator(Rng& rng, const DisplacementOperator& op, size_t alpha) {
    return Generator{op, random_matrix(rng, op.m(), alpha), random_matrix(rng, op.n(), alpha), std::nullopt};
}

}  // namespace ds
