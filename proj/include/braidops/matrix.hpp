#pragma once

#include <optional>
#include <vector>

#include "braidops/rational.hpp"

namespace braidops {

/// Dense row-major matrix over exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void swap_rows(std::size_t i, std::size_t j);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form via Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

/// Basis of {x : m x = 0}, reduced-echelon parametrization with free
/// variables in column order; each vector scaled so its first nonzero
/// coordinate is 1.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Exact description of the solution set of a consistent linear system:
/// particular point plus independent directions spanning the kernel.
struct AffineSolutionSet {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> directions;
    std::size_t param_count() const { return directions.size(); }
};

/// Full solution set of m x = b, or nullopt when the system is infeasible.
std::optional<AffineSolutionSet> solve_affine(const Matrix& m, const std::vector<Rational>& b);

/// true iff v lies in the linear span of the given vectors.
bool subspace_contains(const std::vector<std::vector<Rational>>& span,
                       const std::vector<Rational>& v);

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors);

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& x);

} // namespace braidops
