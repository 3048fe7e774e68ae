#include "acs/fp_matrix.hpp"

#include <stdexcept>
#include <string>

namespace acs {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
    require_prime(p);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p,
                   std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), p_(p), e_(std::move(entries)) {
    require_prime(p);
    if (e_.size() != rows * cols)
        throw std::invalid_argument("FpMatrix: entry count " + std::to_string(e_.size()) +
                                    " != " + std::to_string(rows) + "x" + std::to_string(cols));
    for (auto& x : e_) x %= p_;
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpVector FpMatrix::row(std::size_t r) const {
    return FpVector(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FpVector FpMatrix::col(std::size_t c) const {
    FpVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix multiply: shape or modulus mismatch");
    FpMatrix out(rows_, o.cols_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = at(r, k);
            if (!a) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.set(r, c, static_cast<std::uint32_t>((out.at(r, c) + a * o.at(k, c)) % p_));
        }
    return out;
}

FpVector FpMatrix::apply(const FpVector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("FpMatrix apply: vector length " + std::to_string(v.size()) +
                                    " != cols " + std::to_string(cols_));
    FpVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{at(r, c)} * v[c];
        out[r] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
}

FpMatrix FpMatrix::stack(const FpMatrix& below) const {
    if (cols_ != below.cols_ || p_ != below.p_)
        throw std::invalid_argument("FpMatrix stack: shape or modulus mismatch");
    std::vector<std::uint32_t> e = e_;
    e.insert(e.end(), below.e_.begin(), below.e_.end());
    return FpMatrix(rows_ + below.rows_, cols_, p_, std::move(e));
}

bool FpMatrix::is_zero() const {
    for (auto x : e_)
        if (x) return false;
    return true;
}

RrefResult rref(const FpMatrix& m) {
    FpMatrix a = m;
    const std::uint32_t p = a.modulus();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                auto t = a.at(lead, c);
                a.set(lead, c, a.at(piv, c));
                a.set(piv, c, t);
            }
        const std::uint32_t inv = inv_mod(a.at(lead, col), p);
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.set(lead, c, static_cast<std::uint32_t>(std::uint64_t{a.at(lead, c)} * inv % p));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead) continue;
            const std::uint64_t f = a.at(r, col);
            if (!f) continue;
            for (std::size_t c = 0; c < a.cols(); ++c) {
                const std::uint64_t v = a.at(r, c) + (p - 1) * f % p * a.at(lead, c);
                a.set(r, c, static_cast<std::uint32_t>(v % p));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivot_columns.size(); }

FpVector add_vec(const FpVector& a, const FpVector& b, std::uint32_t p) {
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
    return out;
}

FpVector sub_vec(const FpVector& a, const FpVector& b, std::uint32_t p) {
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + p - b[i]) % p;
    return out;
}

FpVector scale_vec(const FpVector& a, std::uint32_t c, std::uint32_t p) {
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * c % p);
    return out;
}

std::uint32_t dot_vec(const FpVector& a, const FpVector& b, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i] % p;
    return static_cast<std::uint32_t>(acc % p);
}

} // namespace acs
