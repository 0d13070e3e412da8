#pragma once

#include "logsark/rational.hpp"

#include <cstddef>
#include <vector>

namespace logsark {

/// Dense square-or-rectangular matrix of exact rationals, row major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> multiply(const std::vector<Rational>& x) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Unique solution of A x = b by Gaussian elimination with exact pivots.
/// Throws Error(SingularSystem) when A is singular or not square.
std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b);

/// Sylvester's criterion on -A: every leading principal minor of A has sign (-1)^k.
bool is_negative_definite(const RationalMatrix& a);

Rational determinant(RationalMatrix a);

} // namespace logsark
