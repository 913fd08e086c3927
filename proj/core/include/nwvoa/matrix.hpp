#ifndef NWVOA_MATRIX_HPP
#define NWVOA_MATRIX_HPP

#include "nwvoa/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nwvoa {

using VectorQ = std::vector<Rational>;

/* Dense exact matrix over the rationals.  Elimination always pivots on the
 * first nonzero entry of the first unfinished column, so echelon forms,
 * kernels and ranks are reproducible across runs. */
class MatrixQ {
public:
    MatrixQ() : rows_(0), cols_(0) {}
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const VectorQ& row);

    std::size_t rank() const;

    /* Basis of {v : M v = 0}; rank + |basis| = cols. Free variables are set
     * to 1 in increasing column order. */
    std::vector<VectorQ> kernel_basis() const;

    /* One solution of M x = b, or nullopt if inconsistent. */
    std::optional<VectorQ> solve(const VectorQ& b) const;

    MatrixQ operator*(const MatrixQ& o) const;
    VectorQ apply(const VectorQ& v) const;
    bool is_zero() const;

    friend bool operator==(const MatrixQ& x, const MatrixQ& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    // row echelon in place; returns pivot column per eliminated row
    static std::vector<std::size_t> echelon(std::vector<VectorQ>& m);

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace nwvoa

#endif
