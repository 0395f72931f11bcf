#pragma once

#include "qhnf/rational.hpp"

#include <optional>
#include <vector>

namespace qhnf {

using Vec = std::vector<Rat>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Vec column(std::size_t c) const;
    Vec apply(const Vec& v) const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Exact row reduction; pivots are taken in column order.
Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
// A particular solution with all free variables set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
bool in_span(const std::vector<Vec>& span, const Vec& v);

}  // namespace qhnf
