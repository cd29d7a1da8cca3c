#pragma once

#include "dispstruct/instances.hpp"
#include "dispstruct/structsolve.hpp"

namespace ds {

struct BadDegreeProfile : std::invalid_argument {
    explicit BadDegreeProfile(const std::string& what) : std::invalid_argument(what) {}
};

// Find f_1..f_a, deg f_j < bounds[j], not all zero, with sum_j f_j R_{i,j} = 0 mod P_i.
struct PadeProblem {
    std::vector<Poly> moduli;                  // P_1..P_d, monic, pairwise coprime
    std::vector<std::vector<Poly>> residuals;  // residuals[i][j] = R_{i,j}
    std::vector<size_t> bounds;                // n_1..n_a
};

struct PadeResult {
    Outcome status = Outcome::Failure;
    std::vector<Poly> f;
    Fp phi;
    size_t generator_length = 0;
};

// Validates shapes and degrees; throws BadDegreeProfile or DimensionMismatch.
void check_pade(const PadeProblem& pb);

// Matrix of (f_j) -> (sum_j f_j R_{i,j} mod P_i)_i, unknowns stacked by block.
DenseMatrix pade_dense(const PadeProblem& pb);
// Generator for the Stein operator with M_P and the transposed companion of x^N - phi.
// Nonzero displacement columns sit at the block starts only, so the length is a.
Generator pade_generator(const PadeProblem& pb, Fp phi);

bool pade_check(const PadeProblem& pb, const std::vector<Poly>& f);

// Draws phi until the operator is invertible, then solves the homogeneous system.
PadeResult pade_solve(const PadeProblem& pb, u64 seed, const SolveOptions& opt = {});

// Residuals built around random f_j so that a solution exists.
PadeProblem planted_pade(Rng& rng, std::vector<Poly> moduli, std::vector<size_t> bounds);

}  // namespace ds
