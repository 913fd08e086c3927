#include "nwvoa/matrix.hpp"

#include <stdexcept>

namespace nwvoa {

void MatrixQ::append_row(const VectorQ& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("MatrixQ: row width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> MatrixQ::echelon(std::vector<VectorQ>& m) {
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size();
    if (rows == 0) return pivots;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p; // first nonzero pivot
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!m[r][k].is_zero()) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t MatrixQ::rank() const {
    std::vector<VectorQ> m(rows_, VectorQ(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    return echelon(m).size();
}

std::vector<VectorQ> MatrixQ::kernel_basis() const {
    std::vector<VectorQ> m(rows_, VectorQ(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    auto pivots = echelon(m);

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<VectorQ> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        VectorQ v(cols_, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<VectorQ> MatrixQ::solve(const VectorQ& b) const {
    if (b.size() != rows_) throw std::invalid_argument("MatrixQ: rhs size mismatch");
    std::vector<VectorQ> m(rows_, VectorQ(cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
        m[r][cols_] = b[r];
    }
    // eliminate only over the coefficient columns
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m[p][c].is_zero()) ++p;
        if (p == rows_) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c].inverse();
        for (std::size_t k = c; k <= cols_; ++k)
            if (!m[r][k].is_zero()) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k <= cols_; ++k)
                if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows_; ++i)
        if (!m[i][cols_].is_zero()) return std::nullopt;
    VectorQ x(cols_, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
    return x;
}

MatrixQ MatrixQ::operator*(const MatrixQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatrixQ: product shape mismatch");
    MatrixQ out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.at(r, c) += at(r, k) * o.at(k, c);
        }
    return out;
}

VectorQ MatrixQ::apply(const VectorQ& v) const {
    if (v.size() != cols_) throw std::invalid_argument("MatrixQ: apply size mismatch");
    VectorQ out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

bool MatrixQ::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace nwvoa
