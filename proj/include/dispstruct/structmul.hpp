#pragma once

#include "dispstruct/generators.hpp"
#include "dispstruct/polymat.hpp"

namespace ds {

// Below this precision mul_rec stops splitting and multiplies directly.
void set_mul_cutoff(size_t nu);
size_t mul_cutoff();

// R = U^t (V W^t mod x^nu). U has abar entries of degree < m; V, W are abar x gamma.
std::vector<Poly> mul_rec(const std::vector<Poly>& U, const PolyMatrix& V, const PolyMatrix& W, size_t m, size_t nu,
                          size_t abar, size_t gamma);

// R_i = sum_k U_k (V_k W_i mod x^n), |U| = |V| = |W| = alpha <= n.
std::vector<Poly> mul(const std::vector<Poly>& U, const std::vector<Poly>& V, const std::vector<Poly>& W, size_t m,
                      size_t n);
// Same with |W| = beta free.
std::vector<Poly> mul_unbalanced(const std::vector<Poly>& U, const std::vector<Poly>& V, const std::vector<Poly>& W,
                                 size_t m, size_t n);
// R_i = sum_k U_k (V_k W_i mod Q), Q monic of degree n. Not reduced further.
std::vector<Poly> mulQ(const std::vector<Poly>& U, const std::vector<Poly>& V, const std::vector<Poly>& W, size_t m,
                       const Poly& Q);

// A B for the matrix A described by gen.
DenseMatrix struct_mul(const Generator& gen, const DenseMatrix& B);

}  // namespace ds
