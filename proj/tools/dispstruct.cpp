#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"

using namespace ds;
using io::json;

namespace {

constexpr int kOk = 0, kMismatch = 1, kBadInput = 2, kFailure = 3;
constexpr size_t kOracleLimit = size_t{1} << 16;  // m n

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ns() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::vector<size_t> parse_list(const std::string& s) {
    std::vector<size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    if (out.empty()) throw io::BadInput("empty list: " + s);
    return out;
}

void emit(const json& j, const std::string& out, bool to_stdout) {
    std::string text = j.dump(2) + "\n";
    if (!out.empty()) io::write_text(out, text);
    if (to_stdout) std::cout << text;
}

bool in_oracle_range(const Generator& g) { return g.m() * g.n() <= kOracleLimit; }

// ---- gen

struct GenArgs {
    size_t m = 8, n = 0, alpha = 2, beta = 1, max_part = 8;
    std::string kind = "sylvester", flavor_p = "general", flavor_q = "general", prime = "default", out;
    bool tP = false, tQ = true;
    u64 seed = 0;
};

io::Instance make_instance(const GenArgs& a) {
    size_t n = a.n ? a.n : a.m;
    if (a.alpha > std::min(a.m, n)) throw io::BadInput("alpha must not exceed min(m, n)");
    set_prime(parse_prime(a.prime));
    Rng rng(a.seed);
    OperatorSpec spec;
    spec.kind = io::parse_kind(a.kind);
    spec.transpose_P = a.tP;
    spec.transpose_Q = a.tQ;
    spec.flavor_P = io::parse_flavor(a.flavor_p);
    spec.flavor_Q = io::parse_flavor(a.flavor_q);
    spec.max_part = a.max_part;
    DisplacementOperator op = random_operator(rng, a.m, n, spec);
    io::Instance inst{prime(), random_generator(rng, op, a.alpha)};
    inst.seed = a.seed;
    inst.B = random_matrix(rng, n, a.beta);
    // consistent right-hand side
    inst.b = gen_matvec(inst.gen, random_vec(rng, n));
    return inst;
}

int cmd_gen(const GenArgs& a) {
    io::Instance inst = make_instance(a);
    emit(io::instance_to_json(inst), a.out, a.out.empty());
    return kOk;
}

// ---- run

struct RunArgs {
    std::string instance, task, out;
    bool verify = false, json_out = false;
    std::optional<u64> seed;
};

int cmd_run(const RunArgs& a) {
    io::Instance inst = io::instance_from_json(io::read_json_file(a.instance));
    const Generator& g = inst.gen;
    check_generator(g);
    if (!g.op.invertible()) throw io::BadInput("operator is not invertible");
    SolveOptions opt;
    opt.seed = a.seed ? *a.seed : inst.seed;
    json res = {{"task", a.task}, {"m", g.m()}, {"n", g.n()}, {"alpha", g.alpha()}, {"seed", opt.seed}};
    std::string tag = "ok";
    std::optional<bool> verified;
    Timer t;
    if (a.task == "mul") {
        if (!inst.B) throw io::BadInput("mul needs B");
        DenseMatrix C = struct_mul(g, *inst.B);
        res["wall_ns"] = t.ns();
        res["C"] = io::matrix_to_json(C);
        if (a.verify && in_oracle_range(g)) verified = C == dense_mul(reconstruct_dense(g), *inst.B);
    } else if (a.task == "inv") {
        if (g.m() != g.n()) throw io::BadInput("inv needs a square matrix");
        InverseResult r = inv(g, opt);
        res["wall_ns"] = t.ns();
        tag = outcome_name(r.status);
        if (r.inverse) res["inverse"] = io::generator_to_json(*r.inverse);
        if (a.verify && in_oracle_range(g)) {
            DenseMatrix A = reconstruct_dense(g);
            if (r.status == Outcome::Ok)
                verified = dense_mul(reconstruct_dense(*r.inverse), A) == DenseMatrix::identity(g.m());
            else if (r.status == Outcome::Singular)
                verified = dense_rank(A) < g.m();
        }
    } else if (a.task == "solve") {
        if (!inst.b) throw io::BadInput("solve needs b");
        SolveResult r = solve(g, *inst.b, opt);
        res["wall_ns"] = t.ns();
        tag = outcome_name(r.status);
        if (r.status == Outcome::Ok) res["x"] = io::vec_to_json(r.x);
        if (a.verify && in_oracle_range(g)) {
            DenseMatrix A = reconstruct_dense(g);
            if (r.status == Outcome::Ok)
                verified = dense_mul(A, r.x) == *inst.b;
            else if (r.status == Outcome::NoSolution)
                verified = !dense_solve(A, *inst.b).consistent;
        }
    } else {
        throw io::BadInput("unknown task: " + a.task);
    }
    res["tag"] = tag;
    if (verified) res["verified"] = *verified;
    emit(res, a.out, a.json_out);
    if (!a.json_out) {
        std::cout << a.task << ": " << tag;
        if (verified) std::cout << (*verified ? " (verified)" : " (MISMATCH)");
        std::cout << "\n";
    }
    if (verified && !*verified) return kMismatch;
    return tag == "failure" ? kFailure : kOk;
}

// ---- bench

struct BenchArgs {
    std::string sizes = "1024,2048,4096,8192", alphas = "8", tasks = "mul", prime = "default", out;
    size_t beta = 8, reps = 3;
    u64 seed = 0;
    bool verify = false;
};

struct Row {
    std::string task;
    size_t m, n, alpha, beta;
    u64 seed;
    long long wall_ns;
    std::string verified;
};

int cmd_bench(const BenchArgs& a) {
    set_prime(parse_prime(a.prime));
    std::vector<Row> rows;
    std::stringstream ts(a.tasks);
    std::vector<std::string> tasks;
    for (std::string t; std::getline(ts, t, ',');) {
        if (t != "mul" && t != "inv" && t != "solve") throw io::BadInput("unknown task: " + t);
        tasks.push_back(t);
    }
    for (const std::string& task : tasks)
        for (size_t m : parse_list(a.sizes))
            for (size_t alpha : parse_list(a.alphas))
                for (size_t r = 0; r < a.reps; ++r) {
                    u64 seed = a.seed + r;
                    Rng rng(seed);
                    Generator g = random_generator(rng, toeplitz_operator(m, m), std::min(alpha, m));
                    Row row{task, m, m, g.alpha(), task == "mul" ? a.beta : 1, seed, 0, "skipped"};
                    bool check = a.verify && in_oracle_range(g);
                    if (task == "mul") {
                        DenseMatrix B = random_matrix(rng, m, a.beta);
                        Timer t;
                        DenseMatrix C = struct_mul(g, B);
                        row.wall_ns = t.ns();
                        if (check) row.verified = C == dense_mul(reconstruct_dense(g), B) ? "yes" : "no";
                    } else if (task == "inv") {
                        SolveOptions opt;
                        opt.seed = seed;
                        Timer t;
                        InverseResult res = inv(g, opt);
                        row.wall_ns = t.ns();
                        if (check && res.status == Outcome::Ok)
                            row.verified = dense_mul(reconstruct_dense(*res.inverse), reconstruct_dense(g)) ==
                                                   DenseMatrix::identity(m)
                                               ? "yes"
                                               : "no";
                    } else {
                        Vec b = gen_matvec(g, random_vec(rng, m));
                        SolveOptions opt;
                        opt.seed = seed;
                        Timer t;
                        SolveResult res = solve(g, b, opt);
                        row.wall_ns = t.ns();
                        if (check && res.status == Outcome::Ok)
                            row.verified = dense_mul(reconstruct_dense(g), res.x) == b ? "yes" : "no";
                    }
                    rows.push_back(row);
                }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        return std::tie(x.task, x.m, x.alpha, x.seed) < std::tie(y.task, y.m, y.alpha, y.seed);
    });
    std::ostringstream csv;
    csv << "task,m,n,alpha,beta,seed,wall_ns,verified\n";
    for (const Row& r : rows)
        csv << r.task << ',' << r.m << ',' << r.n << ',' << r.alpha << ',' << r.beta << ',' << r.seed << ','
            << r.wall_ns << ',' << r.verified << '\n';
    if (a.out.empty())
        std::cout << csv.str();
    else
        io::write_text(a.out, csv.str());
    bool bad = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.verified == "no"; });
    return bad ? kMismatch : kOk;
}

// ---- pade

struct PadeArgs {
    std::string instance, moduli = "16", bounds = "9,9", prime = "default", out;
    bool planted = false, json_out = false;
    u64 seed = 0;
};

int cmd_pade(const PadeArgs& a) {
    PadeProblem pb;
    if (!a.instance.empty()) {
        pb = io::pade_from_json(io::read_json_file(a.instance));
    } else if (a.planted) {
        set_prime(parse_prime(a.prime));
        Rng rng(a.seed);
        std::vector<Poly> mod;
        for (size_t d : parse_list(a.moduli)) {
            Poly c;
            do c = random_monic(rng, d);
            while (std::any_of(mod.begin(), mod.end(), [&](const Poly& q) { return deg(gcd(q, c)) != 0; }));
            mod.push_back(c);
        }
        pb = planted_pade(rng, mod, parse_list(a.bounds));
    } else {
        throw io::BadInput("pade needs --instance or --planted");
    }
    PadeResult r = pade_solve(pb, a.seed);
    json res = {{"tag", outcome_name(r.status)}, {"generator_length", r.generator_length}, {"phi", r.phi.value()}};
    json fs = json::array();
    for (const Poly& f : r.f) fs.push_back(io::poly_to_json(f));
    res["f"] = fs;
    res["problem"] = io::pade_to_json(pb);
    if (r.status == Outcome::Ok) res["verified"] = pade_check(pb, r.f);
    emit(res, a.out, a.json_out);
    if (!a.json_out) std::cout << "pade: " << outcome_name(r.status) << "\n";
    return r.status == Outcome::Failure ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured matrices given by displacement generators over F_p"};
    app.require_subcommand(1);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Write a random instance");
    gen->add_option("--m", ga.m, "rows")->check(CLI::PositiveNumber);
    gen->add_option("--n", ga.n, "columns (default m)");
    gen->add_option("--alpha", ga.alpha, "generator length");
    gen->add_option("--beta", ga.beta, "columns of B");
    gen->add_option("--kind", ga.kind)->check(CLI::IsMember({"sylvester", "stein"}));
    gen->add_option("--transpose-p", ga.tP);
    gen->add_option("--transpose-q", ga.tQ);
    gen->add_option("--flavor-p", ga.flavor_p)->check(CLI::IsMember({"general", "single_power", "geometric"}));
    gen->add_option("--flavor-q", ga.flavor_q)->check(CLI::IsMember({"general", "single_power", "geometric"}));
    gen->add_option("--max-part", ga.max_part, "largest family member degree");
    gen->add_option("--seed", ga.seed);
    gen->add_option("--prime", ga.prime)->check(CLI::IsMember({"default", "p62"}));
    gen->add_option("--out", ga.out);

    RunArgs ra;
    auto* run = app.add_subcommand("run", "Run mul, inv or solve on an instance");
    run->add_option("--instance", ra.instance)->required();
    run->add_option("--task", ra.task)->required()->check(CLI::IsMember({"mul", "inv", "solve"}));
    run->add_flag("--verify", ra.verify, "cross-check against the dense oracle");
    run->add_flag("--json", ra.json_out, "print the result JSON");
    run->add_option("--seed", ra.seed, "overrides the instance seed");
    run->add_option("--out", ra.out);

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Timing table as CSV (Toeplitz-like operator)");
    bench->add_option("--sizes", ba.sizes, "comma separated m values");
    bench->add_option("--alphas", ba.alphas, "comma separated generator lengths");
    bench->add_option("--beta", ba.beta);
    bench->add_option("--reps", ba.reps);
    bench->add_option("--tasks", ba.tasks, "comma separated: mul,inv,solve");
    bench->add_option("--seed", ba.seed);
    bench->add_flag("--verify", ba.verify);
    bench->add_option("--prime", ba.prime)->check(CLI::IsMember({"default", "p62"}));
    bench->add_option("--out", ba.out);

    PadeArgs pa;
    auto* pade = app.add_subcommand("pade", "Simultaneous approximation");
    pade->add_option("--instance", pa.instance, "JSON with moduli, residuals, bounds");
    pade->add_flag("--planted", pa.planted, "draw a planted instance instead");
    pade->add_option("--moduli", pa.moduli, "planted: comma separated modulus degrees");
    pade->add_option("--bounds", pa.bounds, "planted: comma separated degree bounds");
    pade->add_option("--seed", pa.seed);
    pade->add_option("--prime", pa.prime)->check(CLI::IsMember({"default", "p62"}));
    pade->add_flag("--json", pa.json_out);
    pade->add_option("--out", pa.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }
    try {
        if (*gen) return cmd_gen(ga);
        if (*run) return cmd_run(ra);
        if (*bench) return cmd_bench(ba);
        if (*pade) return cmd_pade(pa);
    } catch (const std::logic_error& e) {
        // invalid_argument, length_error, domain_error from validation
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const io::BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
