#pragma once

#include <cstdint>
#include <vector>

#include "acs/config.hpp"
#include "acs/fp_matrix.hpp"

namespace acs {

/// A subspace of F_p^n held as a canonical RREF basis (rows). Two equal
/// subspaces always have byte-identical representations, so operator== is
/// genuine subspace equality.
class Subspace {
public:
    /// Canonicalizes: row-reduces `spanning_rows` and drops zero rows.
    static Subspace from_rows(const FpMatrix& spanning_rows);
    static Subspace zero(std::size_t ambient_dim, std::uint32_t p);
    static Subspace full(std::size_t ambient_dim, std::uint32_t p);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::uint32_t modulus() const { return basis_.modulus(); }
    const FpMatrix& basis() const { return basis_; }

    bool contains(const FpVector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const = default;

private:
    Subspace(std::size_t ambient, FpMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_;
    FpMatrix basis_; // RREF, no zero rows
};

/// Null space {v : m v = 0} of the column action.
Subspace kernel(const FpMatrix& m);

/// Column space of m as a subspace of F_p^rows.
Subspace image(const FpMatrix& m);

/// Smallest subspace containing both; ambient and modulus must agree.
Subspace subspace_sum(const Subspace& u, const Subspace& w);

/// Exact intersection, via the kernel of the stacked coefficient system
/// [U^T | -W^T] (one kernel computation, Zassenhaus style).
Subspace subspace_intersection(const Subspace& u, const Subspace& w);

/// All p^dim vectors of s in mixed-radix order over the basis coefficients,
/// least-significant basis row first. Throws ResourceError past the cap.
std::vector<FpVector> enumerate_vectors(const Subspace& s,
                                        const Caps& caps = default_caps());

} // namespace acs
