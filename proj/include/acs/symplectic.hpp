#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acs/fp.hpp"
#include "acs/fp_matrix.hpp"
#include "acs/subspace.hpp"

namespace acs {

/// A local character space F_v (or a product of them) with the alternating
/// Gram matrix of its duality pairing. The pairing is data, never derived
/// from arithmetic; any nonsingular alternating Gram is accepted.
class SymplecticSpace {
public:
    /// Validates: even dim, gram^T = -gram, zero diagonal, nonsingular.
    SymplecticSpace(FpMatrix gram);

    std::size_t dim() const { return gram_.rows(); }
    std::uint32_t modulus() const { return gram_.modulus(); }
    const FpMatrix& gram() const { return gram_; }

    /// Coordinate offsets of the factors this space was summed from;
    /// {0} for an atomic space.
    const std::vector<std::size_t>& factor_offsets() const { return offsets_; }

    bool operator==(const SymplecticSpace& o) const = default;

private:
    friend SymplecticSpace direct_sum(std::span<const SymplecticSpace> factors);
    FpMatrix gram_;
    std::vector<std::size_t> offsets_;
};

/// Hyperbolic form of dimension 2m: <e_i, e_{m+i}> = 1, all else 0.
SymplecticSpace standard_symplectic(std::size_t m, std::uint32_t p);

/// u^T . gram . v
FpScalar pairing(const SymplecticSpace& s, const FpVector& u, const FpVector& v);

/// Half-dimensional and self-annihilating under the pairing.
bool is_lagrangian(const SymplecticSpace& s, const Subspace& l);

/// Lagrangian built by greedy isotropic extension: repeatedly adjoin a random
/// vector of the pairing-orthogonal complement of the current space that is
/// not already inside it. Deterministic for a fixed seed.
Subspace random_lagrangian(const SymplecticSpace& s, std::uint64_t seed);

/// Block-diagonal Gram on the concatenated coordinates.
SymplecticSpace direct_sum(std::span<const SymplecticSpace> factors);

/// One local place. The unramified line, when present, must be Lagrangian;
/// auxiliary places use dim 2 with the line spanned by the first coordinate.
struct LocalFactor {
    SymplecticSpace space;
    std::optional<Subspace> unramified_line;

    LocalFactor(SymplecticSpace sp, std::optional<Subspace> line = std::nullopt);
    std::size_t dim() const { return space.dim(); }
    bool operator==(const LocalFactor& o) const = default;
};

/// dim-2 standard factor with unramified line span{e1}.
LocalFactor auxiliary_place(std::uint32_t p);

} // namespace acs
