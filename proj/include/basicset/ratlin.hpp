#ifndef BASICSET_RATLIN_HPP
#define BASICSET_RATLIN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "basicset/core.hpp"

namespace basicset {

using RatVector = std::vector<Rat>;
using IntVector = std::vector<mpz_class>;

class ZeroVector : public Error {
public:
    using Error::Error;
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transposed() const;
    RatVector operator*(const RatVector& v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct Echelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivots on the first nonzero entry in each
/// column, scanning rows top-down; no magnitude pivoting.
Echelon rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}. Basis vector k has a 1 in the k-th free column
/// and 0 in every other free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Canonical solution of m x = b with every free variable set to 0, or
/// nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive. Throws ZeroVector on the zero vector.
IntVector primitive_integer(const RatVector& v);

Rat dot(const RatVector& a, const RatVector& b);

}  // namespace basicset

#endif
