#include "logsark/linalg.hpp"

#include "logsark/error.hpp"

#include <utility>

namespace logsark {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const
{
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out[r] += (*this)(r, c) * x[c];
        }
    }
    return out;
}

std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw Error(ErrorKind::SingularSystem, "system is not square");
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw Error(ErrorKind::SingularSystem, "zero pivot in column " + std::to_string(k));
        }
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(pivot, c));
            }
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) {
                continue;
            }
            const Rational factor = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) {
                a(r, c) -= factor * a(k, c);
            }
            b[r] -= factor * b[k];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            acc -= a(i, c) * x[c];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

bool is_negative_definite(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        return false;
    }
    // Elimination without row exchanges: the k-th pivot is the ratio of
    // consecutive leading minors, so negative definiteness is "all pivots < 0".
    RationalMatrix m = a;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) >= 0) {
            return false;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k) == 0) {
                continue;
            }
            const Rational factor = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) {
                m(r, c) -= factor * m(k, c);
            }
        }
    }
    return true;
}

Rational determinant(RationalMatrix a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw Error(ErrorKind::SingularSystem, "determinant of a non-square matrix");
    }
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(pivot, c));
            }
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) {
                continue;
            }
            const Rational factor = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) {
                a(r, c) -= factor * a(k, c);
            }
        }
    }
    return det;
}

} // namespace logsark
