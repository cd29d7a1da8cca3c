#pragma once

#include "dispstruct/poly.hpp"

namespace ds {

// Row-major matrix of polynomials, all entries of degree < degree_bound.
struct PolyMatrix {
    size_t rows = 0, cols = 0;
    size_t degree_bound = 0;
    std::vector<Poly> entries;

    PolyMatrix() = default;
    PolyMatrix(size_t r, size_t c, size_t d) : rows(r), cols(c), degree_bound(d), entries(r * c) {}

    Poly& operator()(size_t i, size_t j) { return entries[i * cols + j]; }
    const Poly& operator()(size_t i, size_t j) const { return entries[i * cols + j]; }
    bool operator==(const PolyMatrix& o) const { return rows == o.rows && cols == o.cols && entries == o.entries; }
};

// Evaluation at 2^k-th roots of unity when the prime allows, entrywise products otherwise.
// result_len, when nonzero, promises every entry of A B has fewer coefficients; products are
// then taken modulo x^N - 1 with N >= result_len, which is exact under that promise.
PolyMatrix pm_mul(const PolyMatrix& A, const PolyMatrix& B, size_t result_len = 0);
PolyMatrix pm_mul_naive(const PolyMatrix& A, const PolyMatrix& B);

}  // namespace ds
