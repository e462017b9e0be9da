#include "wildram/linalg.hpp"

namespace wildram {

FpMat::FpMat(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0)
{
    if (!is_prime(p))
        throw domain_error("matrix modulus is not prime");
}

FpMat FpMat::identity(std::size_t n, std::uint32_t p)
{
    FpMat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

FpMat FpMat::operator*(const FpMat& o) const
{
    if (cols_ != o.rows_ || p_ != o.p_)
        throw structural_error("matrix shapes or moduli do not match");
    FpMat r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = add_mod(r.at(i, j), mul_mod(v, o.at(k, j), p_), p_);
        }
    return r;
}

bool FpMat::operator==(const FpMat& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

std::size_t FpMat::row_reduce()
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(pivot, j), at(rank, j));
        std::uint32_t inv = inv_mod(at(rank, col), p_);
        for (std::size_t j = col; j < cols_; ++j)
            at(rank, j) = mul_mod(at(rank, j), inv, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || at(i, col) == 0)
                continue;
            std::uint32_t f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(i, j) = sub_mod(at(i, j), mul_mod(f, at(rank, j), p_), p_);
        }
        ++rank;
    }
    return rank;
}

std::size_t FpMat::rank() const
{
    FpMat copy = *this;
    return copy.row_reduce();
}

bool FpMat::is_invertible() const
{
    return rows_ == cols_ && rank() == rows_;
}

FpMat FpMat::inverse() const
{
    if (rows_ != cols_)
        throw structural_error("inverse of a non-square matrix");
    FpMat aug(rows_, 2 * cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    if (aug.row_reduce() != rows_)
        throw division_error("matrix is singular");
    FpMat inv(rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<std::uint32_t>> FpMat::kernel_basis() const
{
    FpMat red = *this;
    red.row_reduce();
    // locate pivot column of each nonzero row
    std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
    std::vector<bool> is_pivot(cols_, false);
    std::size_t r = 0;
    for (; r < rows_; ++r) {
        std::size_t col = 0;
        while (col < cols_ && red.at(r, col) == 0)
            ++col;
        if (col == cols_)
            break;
        pivot_of_col[col] = r;
        is_pivot[col] = true;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t col = 0; col < cols_; ++col) {
            if (is_pivot[col])
                v[col] = sub_mod(0, red.at(pivot_of_col[col], free), p_);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wildram
