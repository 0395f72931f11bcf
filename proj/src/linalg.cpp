#include "qhnf/linalg.hpp"

#include "qhnf/error.hpp"

namespace qhnf {

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error(ErrorKind::Internal, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::Internal, "vector length mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0) out[r] += at(r, c) * v[c];
    return out;
}

Rref rref(Matrix m) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Rat inv = 1 / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m.at(r, col)) == 0) continue;
            Rat f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw Error(ErrorKind::Internal, "right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Rref red = rref(std::move(aug));
    if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced.at(i, a.cols());
    return x;
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
    if (span.empty()) {
        for (const auto& c : v)
            if (sgn(c) != 0) return false;
        return true;
    }
    return solve(Matrix::from_columns(span, v.size()), v).has_value();
}

}  // namespace qhnf
