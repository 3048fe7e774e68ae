#pragma once

#include <cstdint>
#include <vector>

#include "acs/fp.hpp"

namespace acs {

using FpVector = std::vector<std::uint32_t>; // entries reduced mod a shared p

/// Dense row-major matrix over F_p. Every entry is kept reduced, so equality
/// is plain representation equality. Dimensions in this project stay tiny
/// (<= ~24 on a side); exactness and canonical forms matter, speed does not.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p,
             std::vector<std::uint32_t> entries);

    static FpMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }
    const std::vector<std::uint32_t>& entries() const { return e_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { e_[r * cols_ + c] = v % p_; }

    FpVector row(std::size_t r) const;
    FpVector col(std::size_t c) const;

    FpMatrix transpose() const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpVector apply(const FpVector& v) const; // matrix * column vector
    bool operator==(const FpMatrix& o) const = default;

    /// [this; below] stacked vertically; column counts must match.
    FpMatrix stack(const FpMatrix& below) const;

    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> e_;
};

struct RrefResult {
    FpMatrix matrix;
    std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form; rank = pivot count.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

FpVector add_vec(const FpVector& a, const FpVector& b, std::uint32_t p);
FpVector sub_vec(const FpVector& a, const FpVector& b, std::uint32_t p);
FpVector scale_vec(const FpVector& a, std::uint32_t c, std::uint32_t p);
std::uint32_t dot_vec(const FpVector& a, const FpVector& b, std::uint32_t p);

} // namespace acs
