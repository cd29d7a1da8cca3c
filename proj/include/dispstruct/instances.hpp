#pragma once

#include "dispstruct/generators.hpp"
#include "dispstruct/rng.hpp"

namespace ds {

struct InfeasibleSpec : std::invalid_argument {
    explicit InfeasibleSpec(const std::string& what) : std::invalid_argument(what) {}
};

Poly random_poly(Rng& rng, size_t len);  // degree < len
Poly random_monic(Rng& rng, size_t d);
DenseMatrix random_matrix(Rng& rng, size_t rows, size_t cols);
Vec random_vec(Rng& rng, size_t n);

// Random pairwise coprime family of total degree m. max_part bounds each member's degree.
FamilyPtr random_family(Rng& rng, size_t m, Flavor flavor, size_t max_part = 8);

struct OperatorSpec {
    OpKind kind = OpKind::Sylvester;
    bool transpose_P = false, transpose_Q = true;
    Flavor flavor_P = Flavor::General, flavor_Q = Flavor::General;
    size_t max_part = 8;
};

// Retries families until the operator is invertible.
DisplacementOperator random_operator(Rng& rng, size_t m, size_t n, const OperatorSpec& spec);
Generator random_generator(Rng& rng, const DisplacementOperator& op, size_t alpha);

}  // namespace ds
