#ifndef WILDRAM_LINALG_HPP
#define WILDRAM_LINALG_HPP

#include <cstdint>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/gfp.hpp"

namespace wildram {

// Dense matrix over F_p, row major.  Sized for desk-scale exact elimination.
class FpMat {
public:
    FpMat(std::size_t rows, std::size_t cols, std::uint32_t p);
    static FpMat identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    FpMat operator*(const FpMat& o) const;
    bool operator==(const FpMat& o) const;

    // Reduce in place to row echelon form; returns the rank.
    std::size_t row_reduce();
    std::size_t rank() const;
    bool is_invertible() const;
    FpMat inverse() const;  // throws division_error if singular

    // Basis of the right kernel (each vector has length cols()).
    std::vector<std::vector<std::uint32_t>> kernel_basis() const;

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
};

}  // namespace wildram

#endif
