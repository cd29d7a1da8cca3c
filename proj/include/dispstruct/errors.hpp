#pragma once

#include <stdexcept>
#include <string>

namespace ds {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("polynomial division by zero") {}
};
struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm() : std::domain_error("series inverse needs a nonzero constant term") {}
};
struct BoundTooSmall : std::invalid_argument {
    BoundTooSmall() : std::invalid_argument("degree exceeds reversal bound") {}
};
struct DegreeOverflow : std::length_error {
    DegreeOverflow() : std::length_error("product exceeds the transform capacity of the prime") {}
};
struct NotMonic : std::invalid_argument {
    size_t index;
    explicit NotMonic(size_t i) : std::invalid_argument("family member " + std::to_string(i) + " is not monic and nonconstant"), index(i) {}
};
struct NotCoprime : std::invalid_argument {
    size_t i, j;
    NotCoprime(size_t a, size_t b)
        : std::invalid_argument("family members " + std::to_string(a) + " and " + std::to_string(b) + " are not coprime"), i(a), j(b) {}
};
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument("dimension mismatch: " + what) {}
};
struct DegeneratePoints : std::invalid_argument {
    DegeneratePoints() : std::invalid_argument("geometric points are not pairwise distinct") {}
};
struct SingularOperator : std::domain_error {
    SingularOperator() : std::domain_error("displacement operator is not invertible") {}
};
struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};
struct SizeLimit : std::length_error {
    explicit SizeLimit(const std::string& what) : std::length_error(what) {}
};
struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

}  // namespace ds
