#include "dispstruct/polymat.hpp"

#include <algorithm>

namespace ds {

namespace {

void check_dims(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.cols != B.rows) throw DimensionMismatch("polynomial matrix product");
}

size_t result_bound(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.degree_bound == 0 || B.degree_bound == 0) return 0;
    return A.degree_bound + B.degree_bound - 1;
}

size_t max_len(const PolyMatrix& A) {
    size_t l = 0;
    for (const Poly& e : A.entries) l = std::max(l, e.size());
    return l;
}

}  // namespace

PolyMatrix pm_mul_naive(const PolyMatrix& A, const PolyMatrix& B) {
    check_dims(A, B);
    PolyMatrix C(A.rows, B.cols, result_bound(A, B));
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < B.cols; ++j) {
            Poly acc;
            for (size_t k = 0; k < A.cols; ++k) acc = add(acc, mul_schoolbook(A(i, k), B(k, j)));
            C(i, j) = std::move(acc);
        }
    return C;
}

PolyMatrix pm_mul(const PolyMatrix& A, const PolyMatrix& B, size_t result_len) {
    check_dims(A, B);
    PolyMatrix C(A.rows, B.cols, result_bound(A, B));
    size_t la = max_len(A), lb = max_len(B);
    if (la == 0 || lb == 0) return C;
    // sized from the actual entries, degree_bound is only a promise
    size_t d = la + lb - 1;
    if (result_len) d = std::min(d, result_len);
    size_t N = ntt_size(d);
    if (N > (size_t{1} << modulus().two_adicity) || d == 1) {
        for (size_t i = 0; i < A.rows; ++i)
            for (size_t j = 0; j < B.cols; ++j) {
                Poly acc;
                for (size_t k = 0; k < A.cols; ++k) acc = add(acc, mul(A(i, k), B(k, j)));
                C(i, j) = std::move(acc);
            }
        return C;
    }
    auto transform = [N](const PolyMatrix& X) {
        std::vector<std::vector<Fp>> t(X.entries.size());
        for (size_t e = 0; e < X.entries.size(); ++e) {
            t[e].assign(N, Fp());
            // folded modulo x^N - 1
            for (size_t i = 0; i < X.entries[e].size(); ++i) t[e][i % N] += X.entries[e][i];
            ntt(t[e], false);
        }
        return t;
    };
    auto ta = transform(A), tb = transform(B);
    // one scalar matrix product per evaluation point, classical order
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < B.cols; ++j) {
            std::vector<Fp> acc(N);
            for (size_t k = 0; k < A.cols; ++k) {
                const auto& x = ta[i * A.cols + k];
                const auto& y = tb[k * B.cols + j];
                for (size_t s = 0; s < N; ++s) acc[s] += x[s] * y[s];
            }
            ntt(acc, true);
            acc.resize(d);
            trim(acc);
            C(i, j) = std::move(acc);
        }
    return C;
}

}  // namespace ds
