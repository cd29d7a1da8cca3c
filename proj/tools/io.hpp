#pragma once

#include "json.hpp"

#include "dispstruct/pade.hpp"

namespace ds::io {

using nlohmann::json;

// Any parse or validation problem in user input.
struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, size_t n);
json matrix_to_json(const DenseMatrix& A);
DenseMatrix matrix_from_json(const json& j, size_t rows, size_t cols);

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);
std::string kind_name(OpKind k);
OpKind parse_kind(const std::string& s);

json operator_to_json(const DisplacementOperator& op);
DisplacementOperator operator_from_json(const json& j);
json generator_to_json(const Generator& g);
Generator generator_from_json(const json& j);

struct Instance {
    u64 prime = 0;
    Generator gen;
    std::optional<DenseMatrix> B;
    std::optional<Vec> b;
    u64 seed = 0;
};
json instance_to_json(const Instance& inst);
// Sets the active prime before reading any field element.
Instance instance_from_json(const json& j);

json pade_to_json(const PadeProblem& pb);
PadeProblem pade_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace ds::io
