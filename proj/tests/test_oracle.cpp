#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace dt;

TEST_CASE("dense inverse and rank") {
    CHECK(dense_inv(DenseMatrix::identity(4)) == DenseMatrix::identity(4));
    CHECK(dense_rank(M({{1, 0}, {0, 0}})) == 1);
    CHECK_THROWS_AS(dense_inv(M({{1, 2}, {2, 4}})), SingularMatrix);
    Rng rng(40);
    for (int it = 0; it < 20; ++it) {
        size_t n = 1 + rng.below(32);
        DenseMatrix A = random_matrix(rng, n, n);
        if (dense_rank(A) < n) continue;
        REQUIRE(dense_mul(A, dense_inv(A)) == DenseMatrix::identity(n));
    }
}

TEST_CASE("dense solve") {
    Rng rng(41);
    DenseMatrix A = dense_mul(random_matrix(rng, 6, 3), random_matrix(rng, 3, 5));
    Vec x0 = random_vec(rng, 5);
    DenseSolution s = dense_solve(A, dense_mul(A, x0));
    CHECK(s.consistent);
    CHECK(dense_mul(A, s.x) == dense_mul(A, x0));
    CHECK(s.kernel.size() == 2);
    for (auto& k : s.kernel) CHECK(dense_mul(A, k) == Vec(6));
    DenseSolution bad = dense_solve(M({{1, 0}, {0, 0}}), V({0, 1}));
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("applying an operator") {
    PrimeScope s(7);
    auto P2 = make_family({P({-2, 1}), P({-3, 1})});
    auto Q2 = make_family({P({0, 1}), P({-1, 1})});
    DisplacementOperator op(OpKind::Sylvester, P2, Q2, false, true);
    CHECK(is_zero(dense_apply_operator(op, DenseMatrix(2, 2))));
    CHECK(dense_apply_operator(op, M({{4, 1}, {5, 4}})) == M({{1, 1}, {1, 1}}));
    DisplacementOperator same(OpKind::Sylvester, P2, P2, false, false);
    CHECK(is_zero(dense_apply_operator(same, DenseMatrix::identity(2))));
    CHECK(dense_solve_displacement(op, M({{1, 1}, {1, 1}})) == M({{4, 1}, {5, 4}}));
    CHECK(is_zero(dense_solve_displacement(op, DenseMatrix(2, 2))));
    CHECK_THROWS_AS(dense_apply_operator(op, DenseMatrix(3, 2)), DimensionMismatch);
}

TEST_CASE("displacement solve roundtrip, all variants") {
    Rng rng(42);
    for (int it = 0; it < 80; ++it) {
        OperatorSpec spec{it % 2 ? OpKind::Stein : OpKind::Sylvester, (it >> 1) % 2 == 1, (it >> 2) % 2 == 1};
        size_t m = 1 + rng.below(10), n = 1 + rng.below(10);
        DisplacementOperator op = random_operator(rng, m, n, spec);
        DenseMatrix A = random_matrix(rng, m, n);
        REQUIRE(dense_solve_displacement(op, dense_apply_operator(op, A)) == A);
    }
}

TEST_CASE("Hankel fast path agrees with the vectorized system") {
    Rng rng(43);
    for (int it = 0; it < 20; ++it) {
        size_t m = 1 + rng.below(10), n = 1 + rng.below(10);
        DisplacementOperator h = hankel_operator(m, n);
        DenseMatrix A = random_matrix(rng, m, n);
        DenseMatrix R = dense_apply_operator(h, A);
        REQUIRE(dense_solve_displacement(h, R) == A);
        // same operator, families rebuilt so that the shortcut is not taken
        Poly q(n + 1);
        q[n] = Fp(1);
        q[0] = -Fp(1);
        Poly p(m + 1);
        p[m] = Fp(1);
        DisplacementOperator alt(OpKind::Sylvester, make_family({p}), make_family({q}), false, true);
        REQUIRE(dense_solve_displacement(alt, R) == A);
    }
}

TEST_CASE("singular operators are rejected exactly when gcd says so") {
    Rng rng(44);
    int singular = 0;
    for (int it = 0; it < 60; ++it) {
        PrimeScope s(11);  // small field so that common roots are frequent
        OpKind kind = it % 2 ? OpKind::Stein : OpKind::Sylvester;
        size_t m = 1 + rng.below(4), n = 1 + rng.below(4);
        DisplacementOperator op(kind, random_family(rng, m, Flavor::General, 2), random_family(rng, n, Flavor::General, 2), rng.below(2), rng.below(2));
        bool threw = false;
        try {
            dense_solve_displacement(op, DenseMatrix(m, n));
        } catch (const SingularOperator&) {
            threw = true;
        }
        REQUIRE(threw == !op.invertible());
        singular += threw;
    }
    CHECK(singular > 0);
}

TEST_CASE("size limit") {
    Poly big(258);
    big[0] = Fp(1);
    big[257] = Fp(1);
    auto fam = make_family({big});
    DisplacementOperator op(OpKind::Stein, fam, fam, false, true);
    CHECK_THROWS_AS(dense_solve_displacement(op, DenseMatrix(op.m(), op.n())), SizeLimit);
}
