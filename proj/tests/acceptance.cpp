// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "dispstruct/pade.hpp"

using namespace ds;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool all_ok = true;

void report(int id, const char* name, bool pass, const std::string& detail, Clock::time_point t0) {
    all_ok &= pass;
    std::printf("criterion %d %s  %s: %s (%.1f s)\n", id, pass ? "PASS" : "FAIL", name, detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
}

std::string frac(size_t a, size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

OperatorSpec variant(int v, Rng& rng) {
    OperatorSpec s;
    s.kind = v & 1 ? OpKind::Stein : OpKind::Sylvester;
    s.transpose_P = v & 2;
    s.transpose_Q = v & 4;
    Flavor fl[3] = {Flavor::General, Flavor::Geometric, Flavor::SinglePower};
    s.flavor_P = fl[rng.below(3)];
    s.flavor_Q = fl[rng.below(3)];
    s.max_part = 1 + rng.below(8);
    return s;
}

// Generator of a dense matrix for op, by a rank factorization of L(A).
Generator generator_of(const DisplacementOperator& op, const DenseMatrix& A) {
    DenseMatrix D = dense_apply_operator(op, A);
    Rref r = rref(D);
    std::vector<Vec> cols;
    for (size_t c : r.pivots) cols.push_back(D.col(c));
    return Generator{op, DenseMatrix::from_columns(D.rows, cols), transpose(r.R), std::nullopt};
}

DenseMatrix low_rank(Rng& rng, size_t m, size_t n, size_t r) {
    return dense_mul(random_matrix(rng, m, r), random_matrix(rng, r, n));
}

DisplacementOperator structured(size_t i, size_t m) { return i % 2 ? toeplitz_operator(m, m) : hankel_operator(m, m); }

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Fp c) { return c.is_zero(); });
}

void reconstruction() {
    auto t0 = Clock::now();
    Rng rng(1001);
    size_t pass = 0, total = 500;
    for (size_t it = 0; it < total; ++it) {
        size_t m = 1 + rng.below(48), n = 1 + rng.below(48), alpha = 1 + rng.below(6);
        Generator g = random_generator(rng, random_operator(rng, m, n, variant(it % 8, rng)), alpha);
        pass += dense_apply_operator(g.op, reconstruct_dense(g)) == dense_mul(g.G, transpose(g.H));
    }
    report(1, "reconstruction soundness", pass == total, frac(pass, total), t0);
}

void multiplication() {
    auto t0 = Clock::now();
    Rng rng(1002);
    size_t pass = 0, total = 200, wide = 0, tall = 0, stein = 0;
    for (size_t it = 0; it < total; ++it) {
        size_t m = 1 + rng.below(64), n = 1 + rng.below(64), alpha = 1 + rng.below(8), beta = 1 + rng.below(8);
        OperatorSpec spec = variant(it % 8, rng);
        Generator g = random_generator(rng, random_operator(rng, m, n, spec), alpha);
        DenseMatrix B = random_matrix(rng, n, beta);
        pass += struct_mul(g, B) == dense_mul(reconstruct_dense(g), B);
        wide += alpha < beta;
        tall += beta < alpha;
        stein += spec.kind == OpKind::Stein;
    }
    report(2, "multiplication equivalence", pass == total && wide && tall && stein,
           frac(pass, total) + ", alpha<beta " + std::to_string(wide) + ", beta<alpha " + std::to_string(tall) +
               ", Stein " + std::to_string(stein),
           t0);
}

Poly naive_rem(Poly a, const Poly& b) {
    trim(a);
    long db = deg(b);
    while (deg(a) >= db) {
        size_t s = a.size() - 1 - static_cast<size_t>(db);
        Fp c = a.back();
        for (size_t i = 0; i <= static_cast<size_t>(db); ++i) a[s + i] -= c * b[i];
        trim(a);
    }
    return a;
}

Poly naive_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void mulq_oracle() {
    auto t0 = Clock::now();
    Rng rng(1003);
    size_t pass = 0, total = 200, powers = 0, odd = 0;
    for (size_t it = 0; it < total; ++it) {
        size_t m = 1 + rng.below(64), n = 1 + rng.below(64);
        size_t alpha = 1 + rng.below(std::min<size_t>(8, n)), beta = 1 + rng.below(8);
        Poly Q = random_monic(rng, n);
        if (it % 4 == 0) {
            Q.assign(n + 1, Fp());
            Q[n] = Fp(1);
            ++powers;
        }
        odd += (n & (n - 1)) != 0;
        std::vector<Poly> U(alpha), V(alpha), W(beta);
        for (auto& u : U) u = random_poly(rng, m);
        for (auto& v : V) v = random_poly(rng, n);
        for (auto& w : W) w = random_poly(rng, n);
        std::vector<Poly> R = mulQ(U, V, W, m, Q);
        bool ok = R.size() == beta;
        for (size_t i = 0; ok && i < beta; ++i) {
            Poly want;
            for (size_t k = 0; k < alpha; ++k) want = add(want, naive_mul(U[k], naive_rem(naive_mul(V[k], W[i]), Q)));
            ok = trimmed(R[i]) == want;
        }
        pass += ok;
    }
    report(3, "mulQ against the naive triple loop", pass == total && powers && odd,
           frac(pass, total) + ", Q = x^n " + std::to_string(powers) + ", n not a power of two " + std::to_string(odd),
           t0);
}

void inversion() {
    auto t0 = Clock::now();
    Rng rng(1004);
    size_t ok = 0, failures = 0, wrong = 0, total = 100;
    for (size_t it = 0; it < total; ++it) {
        size_t m = 1 + rng.below(64);
        Generator g = random_generator(rng, structured(it, m), 1 + rng.below(std::min<size_t>(4, m)));
        DenseMatrix A = reconstruct_dense(g);
        if (dense_rank(A) < m) {
            --it;
            continue;
        }
        SolveOptions opt;
        opt.seed = it;
        opt.sample_size = std::min<u64>(2 * m * (m + 1), prime());
        InverseResult r = inv(g, opt);
        if (r.status == Outcome::Failure) {
            ++failures;
        } else if (r.status == Outcome::Ok && dense_mul(reconstruct_dense(*r.inverse), A) == DenseMatrix::identity(m)) {
            ++ok;
        } else {
            ++wrong;
        }
    }
    size_t singular = 0, sing_fail = 0, false_inv = 0, planted = 50;
    for (size_t it = 0; it < planted; ++it) {
        size_t m = 2 + rng.below(63);
        Generator g = generator_of(structured(it, m), low_rank(rng, m, m, rng.below(std::min<size_t>(3, m))));
        SolveOptions opt;
        opt.seed = 500 + it;
        InverseResult r = inv(g, opt);
        singular += r.status == Outcome::Singular;
        sing_fail += r.status == Outcome::Failure;
        false_inv += r.status == Outcome::Ok;
    }
    double rate = double(failures + sing_fail) / double(total + planted);
    bool pass = wrong == 0 && false_inv == 0 && singular + sing_fail == planted && rate < 0.6;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu correct inverses, %zu wrong, %zu Failure of %zu; singular %zu/%zu (Failure %zu, false inverses %zu); "
                  "Failure rate %.3f",
                  ok, wrong, failures, total, singular, planted, sing_fail, false_inv, rate);
    report(4, "inversion", pass, buf, t0);
}

void solving() {
    auto t0 = Clock::now();
    Rng rng(1005);
    size_t runs = 0, failures = 0;
    size_t cons_ok = 0, cons_n = 0, inc_ok = 0, inc_n = 0, hom_ok = 0, hom_n = 0;
    for (size_t it = 0; it < 200; ++it) {
        size_t m = 2 + rng.below(63), n = it < 100 ? 1 + rng.below(64) : 2 + rng.below(63);
        DisplacementOperator op = random_operator(rng, m, n, variant(it % 8, rng));
        Generator g = random_generator(rng, op, 1 + rng.below(4));
        Vec b;
        if (it < 100) {
            b = gen_matvec(g, random_vec(rng, n));
        } else {
            g = generator_of(op, low_rank(rng, m, n, rng.below(std::min(m, n))));
            b = it < 150 ? random_vec(rng, m) : Vec(m);
        }
        DenseMatrix A = reconstruct_dense(g);
        if (it >= 100 && it < 150 && dense_solve(A, b).consistent) {
            --it;
            continue;
        }
        SolveOptions opt;
        opt.seed = it;
        SolveResult s = solve(g, b, opt);
        ++runs;
        if (s.status == Outcome::Failure) {
            ++failures;
            continue;
        }
        if (it < 100) {
            ++cons_n;
            cons_ok += s.status == Outcome::Ok && dense_mul(A, s.x) == b;
        } else if (it < 150) {
            ++inc_n;
            inc_ok += s.status == Outcome::NoSolution;
        } else {
            ++hom_n;
            hom_ok += s.status == Outcome::Ok && !is_zero_vec(s.x) && is_zero_vec(dense_mul(A, s.x));
        }
    }
    double rate = double(failures) / double(runs);
    bool pass = cons_ok == cons_n && inc_ok == inc_n && hom_ok == hom_n && rate < 0.6;
    char buf[256];
    std::snprintf(buf, sizeof buf, "consistent %zu/%zu, inconsistent %zu/%zu, homogeneous %zu/%zu; Failure rate %.3f", cons_ok,
                  cons_n, inc_ok, inc_n, hom_ok, hom_n, rate);
    report(5, "solve", pass, buf, t0);
}

void rank_invariance() {
    auto t0 = Clock::now();
    Rng rng(1006);
    size_t pass = 0, total = 100, stein = 0;
    for (size_t it = 0; it < total; ++it) {
        size_t m = 1 + rng.below(32);
        OperatorSpec spec = variant(it % 8, rng);
        Generator g = random_generator(rng, random_operator(rng, m, m, spec), 1 + rng.below(std::min<size_t>(6, m)));
        DenseMatrix A = reconstruct_dense(g);
        if (dense_rank(A) < m) {
            --it;
            continue;
        }
        DenseMatrix Ai = dense_inv(A);
        pass += dense_rank(dense_apply_operator(g.op, A)) ==
                dense_rank(dense_apply_operator(inverse_operator(g.op), Ai));
        stein += spec.kind == OpKind::Stein;
    }
    report(6, "rank of the inverse's displacement", pass == total && stein,
           frac(pass, total) + ", Stein " + std::to_string(stein), t0);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

double time_once(const std::function<void()>& f) {
    auto t0 = Clock::now();
    f();
    return seconds_since(t0);
}

void scaling() {
    auto t0 = Clock::now();
    const size_t alpha = 8, beta = 8, reps = 5;
    std::vector<size_t> sizes = {1024, 2048, 4096, 8192};
    std::vector<double> t;
    double naive = 0, fast4096 = 0;
    for (size_t m : sizes) {
        Rng rng(1007 + m);
        Generator g = random_generator(rng, toeplitz_operator(m, m), alpha);
        DenseMatrix B = random_matrix(rng, m, beta);
        std::vector<double> runs;
        for (size_t r = 0; r < reps; ++r) runs.push_back(time_once([&] { struct_mul(g, B); }));
        t.push_back(median(runs));
        if (m == 4096) {
            fast4096 = t.back();
            std::vector<double> slow;
            for (size_t r = 0; r < reps; ++r)
                slow.push_back(time_once([&] {
                    for (size_t j = 0; j < beta; ++j) gen_matvec(g, B.col(j));
                }));
            naive = median(slow);
        }
    }
    bool pass = naive >= 1.5 * fast4096;
    std::string detail;
    char buf[128];
    for (size_t i = 0; i + 1 < sizes.size(); ++i) {
        double ratio = t[i + 1] / t[i];
        pass &= ratio <= 3.0;
        std::snprintf(buf, sizeof buf, "t(%zu)/t(%zu) = %.2f, ", sizes[i + 1], sizes[i], ratio);
        detail += buf;
    }
    std::snprintf(buf, sizeof buf, "struct_mul %.1f ms vs column loop %.1f ms at m = 4096 (%.2fx)", fast4096 * 1e3,
                  naive * 1e3, naive / fast4096);
    detail += buf;
    report(7, "scaling probe", pass, detail, t0);
}

void poly_layer() {
    auto t0 = Clock::now();
    Rng rng(1008);
    size_t pass = 0, total = 100;
    for (size_t it = 0; it < total; ++it) {
        size_t d = 1 + rng.below(128);
        FamilyPtr fam;
        while (!fam) {
            std::vector<Poly> ps;
            for (size_t i = 0; i < d; ++i) ps.push_back(random_monic(rng, 1 + rng.below(16)));
            try {
                fam = make_family(std::move(ps));
            } catch (const NotCoprime&) {
            }
        }
        size_t m = fam->total_degree();
        Poly a = random_poly(rng, m);
        std::vector<Poly> parts(d);
        for (size_t i = 0; i < d; ++i) parts[i] = random_poly(rng, fam->degree(i));
        bool ok = crt_family(*fam, red_family(*fam, a)) == a && red_family(*fam, crt_family(*fam, parts)) == parts &&
                  comb_family_inv(*fam, comb_family(*fam, parts)) == parts &&
                  comb_family(*fam, comb_family_inv(*fam, a)) == a;
        pass += ok;
    }
    size_t tpass = 0, ttotal = 60;
    for (size_t it = 0; it < ttotal; ++it) {
        size_t m = 1 + rng.below(32);
        FamilyPtr fam = random_family(rng, m, it % 3 == 0 ? Flavor::Geometric : Flavor::General, 1 + rng.below(8));
        DenseMatrix W(m, m);
        for (size_t j = 0; j < m; ++j) {
            Vec e(m);
            e[j] = Fp(1);
            W.set_col(j, w_apply(*fam, e));
        }
        Vec u = random_vec(rng, m);
        tpass += red_transposed(*fam, u, false) == dense_mul(transpose(W), u) &&
                 red_transposed(*fam, u, true) == dense_mul(transpose(dense_inv(W)), u);
    }
    report(8, "CRT and polynomial layer", pass == total && tpass == ttotal,
           "roundtrips " + frac(pass, total) + ", transposed reduction " + frac(tpass, ttotal), t0);
}

void pade_demo() {
    auto t0 = Clock::now();
    Rng rng(1009);
    size_t ok = 0, runs = 0, failures = 0, length_ok = 0;
    for (u64 seed = 0; seed < 20; ++seed)
        for (size_t d : {1, 2}) {
            size_t a = 1 + rng.below(3);
            size_t total = 8 + rng.below(57);
            std::vector<Poly> mod;
            while (mod.size() < d) {
                size_t deg_i = d == 1 ? total : (mod.empty() ? total / 2 : total - total / 2);
                Poly c = random_monic(rng, deg_i);
                bool coprime = std::all_of(mod.begin(), mod.end(), [&](const Poly& q) { return deg(gcd(q, c)) == 0; });
                if (coprime) mod.push_back(c);
            }
            std::vector<size_t> bounds(a, total / a + 1);
            PadeProblem pb = planted_pade(rng, mod, bounds);
            PadeResult r = pade_solve(pb, seed);
            ++runs;
            length_ok += r.generator_length == a;
            if (r.status == Outcome::Failure) {
                ++failures;
                continue;
            }
            ok += r.status == Outcome::Ok && pade_check(pb, r.f);
        }
    report(9, "Pade demo", ok == runs - failures && length_ok == runs,
           "residue identity " + frac(ok, runs - failures) + " of non-Failure runs, Failure " + std::to_string(failures) +
               ", generator length alpha in " + frac(length_ok, runs),
           t0);
}

}  // namespace

int main() {
    reconstruction();
    multiplication();
    mulq_oracle();
    inversion();
    solving();
    rank_invariance();
    scaling();
    poly_layer();
    pade_demo();
    return all_ok ? 0 : 1;
}
