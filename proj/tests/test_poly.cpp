#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace dt;

TEST_CASE("product") {
    CHECK(mul(P({1, 1}), P({1, -1})) == P({1, 0, -1}));
    CHECK(mul(P({3, 4}), Poly{}).empty());
    Rng rng(10);
    Poly a = random_monic(rng, 50), b = random_monic(rng, 50);
    CHECK(mul(a, b) == naive_mul(a, b));
}

TEST_CASE("transform and schoolbook agree up to degree 256") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(rng, 1 + rng.below(257)), b = random_poly(rng, 1 + rng.below(257));
        REQUIRE(mul(a, b) == mul_schoolbook(a, b));
    }
}

TEST_CASE("transform roundtrip and capacity") {
    Rng rng(12);
    std::vector<Fp> a(64);
    for (auto& x : a) x = rng.field();
    auto b = a;
    ntt(b, false);
    ntt(b, true);
    CHECK(a == b);
    PrimeScope s(7);  // two-adicity 1
    Poly x = random_poly(rng, 40), y = random_poly(rng, 40);
    CHECK(mul(x, y) == naive_mul(x, y));
    set_strict_ntt(true);
    CHECK_THROWS_AS(mul(x, y), DegreeOverflow);
    set_strict_ntt(false);
}

TEST_CASE("division") {
    auto [q, r] = divrem(P({-1, 0, 1}), P({-1, 1}));
    CHECK(q == P({1, 1}));
    CHECK(r.empty());
    Rng rng(13);
    Poly a = random_poly(rng, 41), b = random_poly(rng, 18);
    auto [q2, r2] = divrem(a, b);
    CHECK(add(mul(q2, b), r2) == a);
    CHECK(deg(r2) < 17);
    auto [q3, r3] = divrem(a, P({1}));
    CHECK(q3 == a);
    CHECK(r3.empty());
    CHECK_THROWS_AS(divrem(a, Poly{}), DivisionByZero);
}

TEST_CASE("division identity, both paths") {
    Rng rng(14);
    for (size_t thr : {size_t(4), size_t(32), size_t(1000)}) {
        set_newton_threshold(thr);
        for (int i = 0; i < 60; ++i) {
            Poly b = random_poly(rng, 1 + rng.below(120));
            if (b.empty()) continue;
            Poly a = random_poly(rng, rng.below(300));
            auto [q, r] = divrem(a, b);
            REQUIRE(add(mul(q, b), r) == a);
            REQUIRE(deg(r) < deg(b));
            Divisor d(b);
            auto [q2, r2] = d.divrem(a);
            REQUIRE(q2 == q);
            REQUIRE(r2 == r);
        }
    }
    set_newton_threshold(32);
}

TEST_CASE("reversal") {
    CHECK(rev(P({0, 2, 1}), 2) == P({1, 2}));
    CHECK(rev(P({5}), 0) == P({5}));
    CHECK_THROWS_AS(rev(P({1, 1, 1}), 1), BoundTooSmall);
    Rng rng(15);
    Poly a = random_poly(rng, 20);
    a[0] = Fp(3);
    CHECK(rev(rev(a, 25), 25) == a);
}

TEST_CASE("series inverse") {
    CHECK(series_inv(P({1, -1}), 3) == P({1, 1, 1}));
    CHECK(series_inv(P({1}), 10) == P({1}));
    CHECK_THROWS_AS(series_inv(P({0, 1}), 3), NonUnitConstantTerm);
    Rng rng(16);
    for (int i = 0; i < 20; ++i) {
        Poly a = random_poly(rng, 80);
        a[0] = rng.nonzero();
        CHECK(mul_trunc(a, series_inv(a, 64), 64) == P({1}));
    }
}

TEST_CASE("extended gcd") {
    Xgcd x = xgcd(P({-1, 1}), P({-2, 1}));
    CHECK(x.g == P({1}));
    CHECK(add(mul(x.s, P({-1, 1})), mul(x.t, P({-2, 1}))) == P({1}));
    Poly a = P({6, 0, 2});
    Xgcd z = xgcd(a, Poly{});
    Fp li = Fp(2).inv();
    CHECK(z.g == scale(a, li));
    CHECK(z.s == Poly{li});
    CHECK(z.t.empty());
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        Poly c = random_monic(rng, rng.below(5));
        Poly u = mul(c, random_poly(rng, 1 + rng.below(30))), v = mul(c, random_poly(rng, 1 + rng.below(30)));
        if (u.empty() && v.empty()) continue;
        Xgcd w = xgcd(u, v);
        CHECK(add(mul(w.s, u), mul(w.t, v)) == w.g);
        CHECK(lead(w.g) == Fp(1));
        if (!u.empty()) CHECK(rem(u, w.g).empty());
        if (!v.empty()) CHECK(rem(v, w.g).empty());
    }
}

namespace {
// nonzero resultant <=> full rank Sylvester matrix
bool resultant_nonzero(const Poly& a, const Poly& b) {
    size_t da = deg(a), db = deg(b), s = da + db;
    DenseMatrix S(s, s);
    for (size_t i = 0; i < db; ++i)
        for (size_t j = 0; j <= da; ++j) S(i, i + j) = a[j];
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j <= db; ++j) S(db + i, i + j) = b[j];
    return dense_rank(S) == s;
}
}  // namespace

TEST_CASE("Cauchy families are coprime over F_7") {
    PrimeScope s(7);
    Poly p = mul(P({-2, 1}), P({-3, 1})), q = mul(P({0, 1}), P({-1, 1}));
    CHECK(gcd(p, q) == P({1}));
    CHECK(resultant_nonzero(p, q));
    CHECK(gcd(p, mul(q, P({-2, 1}))) == P({-2, 1}));
    CHECK_FALSE(resultant_nonzero(p, mul(q, P({-2, 1}))));
}

TEST_CASE("modular inverse") {
    Rng rng(18);
    Poly m = random_monic(rng, 12);
    for (int i = 0; i < 20; ++i) {
        Poly a = random_poly(rng, 12);
        if (gcd(a.empty() ? P({0}) : a, m).size() != 1) continue;
        CHECK(mulmod(a, inv_mod(a, m), m) == P({1}));
    }
    CHECK_THROWS_AS(inv_mod(P({-1, 1}), mul(P({-1, 1}), P({2, 1}))), ZeroInverse);
}

TEST_CASE("family construction over F_7") {
    PrimeScope s(7);
    PolyFamily fam = PolyFamily::build({P({-1, 1}), P({-2, 1})});
    CHECK(fam.product() == P({2, 4, 1}));
    CHECK(fam.total_degree() == 2);
    for (size_t i = 0; i < 2; ++i) CHECK(mulmod(fam.E(i), fam.F(i), fam.member(i)) == P({1}));
    PolyFamily one = PolyFamily::build({P({-3, 0, 0, 1})}, Flavor::SinglePower);
    CHECK(one.E(0) == P({1}));
    CHECK(one.F(0) == P({1}));
    CHECK(one.flavor() == Flavor::SinglePower);
    CHECK(one.power_phi() == Fp(3));
    CHECK_THROWS_AS(PolyFamily::build({P({-1, 1}), P({-1, 1})}), NotCoprime);
    CHECK_THROWS_AS(PolyFamily::build({P({1, 2})}), NotMonic);
    CHECK_THROWS_AS(PolyFamily::build({P({1})}), NotMonic);
    try {
        PolyFamily::build({P({-1, 1}), P({-5, 1}), mul(P({-5, 1}), P({1, 1}))});
        FAIL("expected NotCoprime");
    } catch (const NotCoprime& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 2);
    }
}

TEST_CASE("flavor hints are verified") {
    PolyFamily wrong = PolyFamily::build({P({1, 1, 1})}, Flavor::SinglePower);
    CHECK(wrong.flavor() == Flavor::General);
    PolyFamily geo = PolyFamily::build({P({-3, 1}), P({-6, 1}), P({-12, 1})}, Flavor::Geometric);
    CHECK(geo.flavor() == Flavor::Geometric);
    CHECK(geo.geom_u() == Fp(3));
    CHECK(geo.geom_q() == Fp(2));
    PolyFamily notgeo = PolyFamily::build({P({-3, 1}), P({-6, 1}), P({-13, 1})}, Flavor::Geometric);
    CHECK(notgeo.flavor() == Flavor::General);
}

TEST_CASE("tree is balanced by degree") {
    PolyFamily fam = PolyFamily::build({P({2, 0, 0, 0, 0, 0, 0, 1}), P({1, 1}), P({2, 1}), P({3, 1}), P({4, 1})});
    const auto& root = fam.tree()[0];
    CHECK(root.hi - root.lo == 5);
    CHECK(fam.tree()[root.left].hi == 1);  // degree 7 | degree 4
    CHECK(root.poly == fam.product());
}

TEST_CASE("reduction, recombination and Chinese remaindering over F_7") {
    PrimeScope s(7);
    PolyFamily fam = PolyFamily::build({P({-1, 1}), P({-2, 1})});
    auto r = red_family(fam, P({1, 2}));
    CHECK(r[0] == P({3}));
    CHECK(r[1] == P({5}));
    auto z = red_family(fam, Poly{});
    CHECK(z[0].empty());
    CHECK(z[1].empty());
    CHECK(crt_family(fam, {P({3}), P({5})}) == P({1, 2}));
    CHECK(crt_family(fam, {Poly{}, Poly{}}).empty());
    CHECK(comb_family(fam, {P({1}), P({1})}) == P({4, 2}));
    CHECK_THROWS_AS(comb_family(fam, {P({1, 1}), P({1})}), DimensionMismatch);
    CHECK_THROWS_AS(crt_family(fam, {P({1})}), DimensionMismatch);
}

namespace {
std::vector<Poly> random_parts(Rng& rng, const PolyFamily& fam) {
    std::vector<Poly> parts;
    for (size_t i = 0; i < fam.size(); ++i) parts.push_back(random_poly(rng, fam.degree(i)));
    return parts;
}
}  // namespace

TEST_CASE("CRT layer roundtrips on random families") {
    Rng rng(19);
    for (int it = 0; it < 40; ++it) {
        size_t m = 1 + rng.below(150);
        Flavor fl = it % 3 == 0 ? Flavor::Geometric : Flavor::General;
        FamilyPtr fam = random_family(rng, m, fl, 1 + rng.below(16));
        Poly a = random_poly(rng, rng.below(3 * m + 3));
        auto res = red_family(*fam, a);
        for (size_t i = 0; i < fam->size(); ++i) REQUIRE(res[i] == rem(a, fam->member(i)));
        REQUIRE(crt_family(*fam, res) == rem(a, fam->product()));
        auto parts = random_parts(rng, *fam);
        REQUIRE(comb_family_inv(*fam, comb_family(*fam, parts)) == parts);
        // P* = sum of cofactors
        Poly pstar;
        for (size_t i = 0; i < fam->size(); ++i) pstar = add(pstar, divrem(fam->product(), fam->member(i)).first);
        REQUIRE(comb_family(*fam, std::vector<Poly>(fam->size(), P({1}))) == pstar);
    }
}

TEST_CASE("single member: crt is the identity") {
    Rng rng(20);
    FamilyPtr fam = random_family(rng, 9, Flavor::SinglePower);
    Poly a = random_poly(rng, 9);
    CHECK(crt_family(*fam, {a}) == a);
    Vec u = random_vec(rng, 9);
    CHECK(red_transposed(*fam, u, false) == u);
    CHECK(red_transposed(*fam, u, true) == u);
}

TEST_CASE("transposed reduction against dense transpose") {
    {
        PrimeScope s(7);
        PolyFamily fam = PolyFamily::build({P({-1, 1}), P({-2, 1})});
        DenseMatrix W = densify(2, 2, [&](const Vec& v) { return w_apply(fam, v); });
        CHECK(W == M({{1, 1}, {1, 2}}));
        CHECK(red_transposed(fam, V({1, 0}), false) == V({1, 1}));
    }
    Rng rng(21);
    for (int it = 0; it < 60; ++it) {
        size_t m = 1 + rng.below(32);
        FamilyPtr fam = random_family(rng, m, it % 4 == 0 ? Flavor::Geometric : Flavor::General, 1 + rng.below(8));
        DenseMatrix W = densify(m, m, [&](const Vec& v) { return w_apply(*fam, v); });
        DenseMatrix Wt = transpose(W);
        DenseMatrix Wit = transpose(dense_inv(W));
        Vec u = random_vec(rng, m);
        REQUIRE(red_transposed(*fam, u, false) == dense_mul(Wt, u));
        REQUIRE(red_transposed(*fam, u, true) == dense_mul(Wit, u));
        REQUIRE(red_transposed(*fam, red_transposed(*fam, u, false), true) == u);
    }
}

TEST_CASE("transposed modular product by power projection") {
    Rng rng(22);
    for (int it = 0; it < 30; ++it) {
        size_t k = 1 + rng.below(16);
        Poly p = random_monic(rng, k), f = random_poly(rng, k);
        DenseMatrix Mf = densify(k, k, [&](const Vec& v) { return modmul_apply(f, p, v); });
        Vec w = random_vec(rng, k);
        REQUIRE(modmul_transposed_pp(f, p, w) == dense_mul(transpose(Mf), w));
    }
}

TEST_CASE("geometric evaluation and interpolation") {
    CHECK(geom_eval(Fp(1), Fp(2), P({0, 1}), 3) == V({1, 2, 4}));
    CHECK(geom_eval(Fp(5), Fp(3), P({7}), 3) == V({7, 7, 7}));
    CHECK_THROWS_AS(geom_eval(Fp(1), Fp(0), P({1}), 2), DegeneratePoints);
    CHECK_THROWS_AS(geom_interp(Fp(1), Fp(1), V({1, 2})), DegeneratePoints);
    Rng rng(23);
    for (int it = 0; it < 30; ++it) {
        size_t n = 1 + rng.below(40);
        Fp u = rng.nonzero(), q = rng.nonzero();
        Poly a = random_poly(rng, n);
        Vec vals = geom_eval(u, q, a, n);
        for (size_t i = 0; i < n; ++i) REQUIRE(vals[i] == eval(a, u * q.pow(i)));
        REQUIRE(geom_interp(u, q, vals) == a);
        // Vandermonde solve as the independent route
        DenseMatrix Vd(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) Vd(i, j) = (u * q.pow(i)).pow(j);
        DenseSolution sol = dense_solve(Vd, vals);
        REQUIRE(trimmed(sol.x) == a);
    }
}

TEST_CASE("symmetrizer") {
    PrimeScope s(7);
    Poly p = P({1, 2, 0, 1});
    DenseMatrix Y = densify(3, 3, [&](const Vec& v) { return y_apply(p, v, false); });
    CHECK(Y == M({{2, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(y_apply(p, V({1, 2, 3}), false) == V({5, 2, 1}));
    CHECK(y_apply(p, y_apply(p, V({4, 5, 6}), false), true) == V({4, 5, 6}));
    CHECK(y_apply(P({0, 0, 0, 1}), V({1, 2, 3}), false) == V({3, 2, 1}));
}
