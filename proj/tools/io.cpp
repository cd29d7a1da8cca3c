#include "io.hpp"

#include <fstream>
#include <sstream>

namespace ds::io {

namespace {

Fp element(const json& j) {
    if (j.is_number_unsigned()) {
        u64 v = j.get<u64>();
        if (v >= prime()) throw BadInput("field element out of range: " + std::to_string(v));
        return Fp(v);
    }
    if (j.is_number_integer()) return Fp::from_signed(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_fp(j.get<std::string>());
        } catch (const std::exception& e) {
            throw BadInput(e.what());
        }
    }
    throw BadInput("field element must be an integer or a decimal string");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw BadInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

FamilyPtr family_from_json(const json& j) {
    const json& polys = field(j, "polys");
    if (!polys.is_array() || polys.empty()) throw BadInput("family needs a nonempty 'polys' array");
    std::vector<Poly> ps;
    for (const json& p : polys) ps.push_back(poly_from_json(p));
    Flavor hint = j.contains("flavor") ? parse_flavor(j.at("flavor").get<std::string>()) : Flavor::General;
    return make_family(std::move(ps), hint);
}

json family_to_json(const PolyFamily& fam) {
    json polys = json::array();
    for (const Poly& p : fam.members()) polys.push_back(poly_to_json(p));
    return {{"flavor", flavor_name(fam.flavor())}, {"polys", polys}};
}

}  // namespace

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (Fp c : trimmed(p)) out.push_back(to_string(c));
    return out;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw BadInput("polynomial must be an array of coefficients");
    Poly p;
    for (const json& c : j) p.push_back(element(c));
    trim(p);
    return p;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (Fp c : v) out.push_back(c.value());
    return out;
}

Vec vec_from_json(const json& j, size_t n) {
    if (!j.is_array() || j.size() != n) throw BadInput("vector must have " + std::to_string(n) + " entries");
    Vec v;
    for (const json& c : j) v.push_back(element(c));
    return v;
}

json matrix_to_json(const DenseMatrix& A) {
    json out = json::array();
    for (size_t i = 0; i < A.rows; ++i) out.push_back(vec_to_json(A.row(i)));
    return out;
}

DenseMatrix matrix_from_json(const json& j, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows) throw BadInput("matrix must have " + std::to_string(rows) + " rows");
    DenseMatrix A(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        Vec r = vec_from_json(j[i], cols);
        for (size_t c = 0; c < cols; ++c) A(i, c) = r[c];
    }
    return A;
}

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::General: return "general";
        case Flavor::SinglePower: return "single_power";
        case Flavor::Geometric: return "geometric";
    }
    return "general";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "general") return Flavor::General;
    if (s == "single_power") return Flavor::SinglePower;
    if (s == "geometric") return Flavor::Geometric;
    throw BadInput("unknown flavor: " + s);
}

std::string kind_name(OpKind k) { return k == OpKind::Sylvester ? "sylvester" : "stein"; }

OpKind parse_kind(const std::string& s) {
    if (s == "sylvester") return OpKind::Sylvester;
    if (s == "stein") return OpKind::Stein;
    throw BadInput("unknown operator kind: " + s);
}

json operator_to_json(const DisplacementOperator& op) {
    return {{"kind", kind_name(op.kind())},
            {"transpose_P", op.transpose_P()},
            {"transpose_Q", op.transpose_Q()},
            {"P", family_to_json(op.P())},
            {"Q", family_to_json(op.Q())}};
}

DisplacementOperator operator_from_json(const json& j) {
    return DisplacementOperator(parse_kind(field(j, "kind").get<std::string>()), family_from_json(field(j, "P")),
                                family_from_json(field(j, "Q")), field(j, "transpose_P").get<bool>(),
                                field(j, "transpose_Q").get<bool>());
}

json generator_to_json(const Generator& g) {
    json out = {{"operator", operator_to_json(g.op)}, {"G", matrix_to_json(g.G)}, {"H", matrix_to_json(g.H)}};
    if (g.last_row) out["last_row"] = vec_to_json(*g.last_row);
    return out;
}

Generator generator_from_json(const json& j) {
    DisplacementOperator op = operator_from_json(field(j, "operator"));
    const json& G = field(j, "G");
    size_t alpha = G.is_array() && !G.empty() && G[0].is_array() ? G[0].size() : 0;
    if (j.contains("alpha")) alpha = j.at("alpha").get<size_t>();
    Generator g{op, matrix_from_json(G, op.m(), alpha), matrix_from_json(field(j, "H"), op.n(), alpha), std::nullopt};
    if (j.contains("last_row")) g.last_row = vec_from_json(j.at("last_row"), op.n());
    return g;
}

json instance_to_json(const Instance& inst) {
    json out = generator_to_json(inst.gen);
    out["prime"] = inst.prime;
    out["alpha"] = inst.gen.alpha();
    out["seed"] = inst.seed;
    if (inst.B) out["B"] = matrix_to_json(*inst.B);
    if (inst.b) out["b"] = vec_to_json(*inst.b);
    return out;
}

Instance instance_from_json(const json& j) {
    const json& pj = field(j, "prime");
    u64 p = pj.is_string() ? std::stoull(pj.get<std::string>()) : pj.get<u64>();
    if (p < 3 || p >= (u64{1} << 62) || !is_prime(p)) throw BadInput("prime must be an odd prime below 2^62");
    set_prime_value(p);
    Instance inst{p, generator_from_json(j)};
    if (j.contains("B")) {
        const json& B = j.at("B");
        size_t beta = B.is_array() && !B.empty() && B[0].is_array() ? B[0].size() : 0;
        inst.B = matrix_from_json(B, inst.gen.n(), beta);
    }
    if (j.contains("b")) inst.b = vec_from_json(j.at("b"), inst.gen.m());
    if (j.contains("seed")) inst.seed = j.at("seed").get<u64>();
    return inst;
}

json pade_to_json(const PadeProblem& pb) {
    json mod = json::array(), res = json::array();
    for (const Poly& P : pb.moduli) mod.push_back(poly_to_json(P));
    for (const auto& row : pb.residuals) {
        json r = json::array();
        for (const Poly& p : row) r.push_back(poly_to_json(p));
        res.push_back(r);
    }
    return {{"prime", prime()}, {"moduli", mod}, {"residuals", res}, {"bounds", pb.bounds}};
}

PadeProblem pade_from_json(const json& j) {
    PadeProblem pb;
    if (j.contains("prime")) {
        u64 p = j.at("prime").get<u64>();
        if (p < 3 || p >= (u64{1} << 62) || !is_prime(p)) throw BadInput("prime must be an odd prime below 2^62");
        set_prime_value(p);
    }
    for (const json& P : field(j, "moduli")) pb.moduli.push_back(poly_from_json(P));
    for (const json& row : field(j, "residuals")) {
        std::vector<Poly> r;
        for (const json& p : row) r.push_back(poly_from_json(p));
        pb.residuals.push_back(std::move(r));
    }
    pb.bounds = field(j, "bounds").get<std::vector<size_t>>();
    return pb;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw BadInput(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot write " + path);
    out << text;
}

}  // namespace ds::io
