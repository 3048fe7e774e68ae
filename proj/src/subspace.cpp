#include "acs/subspace.hpp"

#include <stdexcept>
#include <string>

#include "acs/errors.hpp"

namespace acs {

namespace {

void require_compatible(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("subspace ambient dims differ: " +
                                    std::to_string(u.ambient_dim()) + " vs " +
                                    std::to_string(w.ambient_dim()));
    if (u.modulus() != w.modulus())
        throw std::invalid_argument("subspace moduli differ");
}

} // namespace

Subspace Subspace::from_rows(const FpMatrix& spanning_rows) {
    auto [red, pivots] = rref(spanning_rows);
    FpMatrix basis(pivots.size(), spanning_rows.cols(), spanning_rows.modulus());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < red.cols(); ++c) basis.set(r, c, red.at(r, c));
    return Subspace(spanning_rows.cols(), std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient_dim, std::uint32_t p) {
    return Subspace(ambient_dim, FpMatrix(0, ambient_dim, p));
}

Subspace Subspace::full(std::size_t ambient_dim, std::uint32_t p) {
    return Subspace(ambient_dim, FpMatrix::identity(ambient_dim, p));
}

bool Subspace::contains(const FpVector& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("contains: vector length mismatch");
    // Reduce v against the RREF basis; membership iff residue is zero.
    FpVector r = v;
    const std::uint32_t p = modulus();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < ambient_ && basis_.at(i, piv) == 0) ++piv;
        if (piv == ambient_) continue;
        const std::uint32_t f = r[piv]; // pivot entry of basis row is 1
        if (!f) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            r[c] = static_cast<std::uint32_t>((r[c] + std::uint64_t{p - 1} * f % p * basis_.at(i, c)) % p);
    }
    for (auto x : r)
        if (x) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace kernel(const FpMatrix& m) {
    auto [red, pivots] = rref(m);
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FpMatrix basis(free_cols.size(), n, p);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis.set(k, f, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.set(k, pivots[r], (p - red.at(r, f)) % p);
    }
    return Subspace::from_rows(basis);
}

Subspace image(const FpMatrix& m) { return Subspace::from_rows(m.transpose()); }

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    require_compatible(u, w);
    return Subspace::from_rows(u.basis().stack(w.basis()));
}

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
    require_compatible(u, w);
    const std::uint32_t p = u.modulus();
    const std::size_t n = u.ambient_dim();
    const std::size_t ku = u.dim(), kw = w.dim();
    if (ku == 0 || kw == 0) return Subspace::zero(n, p);

    // Columns: coefficient pairs (a, b); rows: ambient coordinates.
    // Kernel vectors satisfy U^T a = W^T b, and U^T a is then in both spaces.
    FpMatrix system(n, ku + kw, p);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < ku; ++j) system.set(r, j, u.basis().at(j, r));
        for (std::size_t j = 0; j < kw; ++j) system.set(r, ku + j, (p - w.basis().at(j, r)) % p);
    }
    const Subspace coeff = kernel(system);

    FpMatrix rows(coeff.dim(), n, p);
    for (std::size_t i = 0; i < coeff.dim(); ++i) {
        FpVector v(n, 0);
        for (std::size_t j = 0; j < ku; ++j) {
            const std::uint32_t a = coeff.basis().at(i, j);
            if (!a) continue;
            for (std::size_t c = 0; c < n; ++c)
                v[c] = static_cast<std::uint32_t>((v[c] + std::uint64_t{a} * u.basis().at(j, c)) % p);
        }
        for (std::size_t c = 0; c < n; ++c) rows.set(i, c, v[c]);
    }
    return Subspace::from_rows(rows);
}

std::vector<FpVector> enumerate_vectors(const Subspace& s, const Caps& caps) {
    const std::size_t k = s.dim();
    const std::uint32_t p = s.modulus();
    if (k > caps.max_enumeration_dim)
        throw ResourceError("enumerate_vectors: dimension " + std::to_string(k) +
                            " exceeds cap " + std::to_string(caps.max_enumeration_dim));
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;

    std::vector<FpVector> out;
    out.reserve(count);
    FpVector digits(k, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FpVector v(s.ambient_dim(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint32_t c = digits[i];
            if (!c) continue;
            for (std::size_t j = 0; j < s.ambient_dim(); ++j)
                v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{c} * s.basis().at(i, j)) % p);
        }
        out.push_back(std::move(v));
        for (std::size_t i = 0; i < k; ++i) { // least-significant basis row first
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

} // namespace acs
