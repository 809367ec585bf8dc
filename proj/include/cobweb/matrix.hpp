#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cobweb/numeric.hpp"

namespace cobweb {

/**
 * Dense row-major square-or-rectangular matrix.
 *
 * Indices are 0-based; for poset matrices row/column i holds vertex label
 * i + 1.
 */
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n, T{0});
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    /// Leading n x n block.
    Matrix principal(std::size_t n) const
    {
        assert(n <= rows_ && n <= cols_);
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) = (*this)(i, j);
        return out;
    }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using BoolMatrix = Matrix<std::uint8_t>;
using IntMatrix = Matrix<Integer>;
/// Raw signed entries of a formula before any clamping to {0,1}.
using RawMatrix = Matrix<long>;

/// Product over the {0,1} semiring (OR of ANDs).
BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix boolean_or(const BoolMatrix& a, const BoolMatrix& b);
bool is_zero(const BoolMatrix& m);

IntMatrix to_integer(const BoolMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RawMatrix to_raw(const BoolMatrix& m);

} // namespace cobweb
