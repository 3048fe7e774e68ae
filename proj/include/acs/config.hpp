#pragma once

#include <cstddef>
#include <cstdint>

namespace acs {

/// Enumeration and dense-matrix budgets. Operations that would walk more
/// states than allowed throw ResourceError instead of thrashing.
struct Caps {
    /// Max number of global characters p^d walked by a state build (3^10).
    std::uint64_t max_global_states = 59049;
    /// Max number of local characters p^m on a single side (2^14).
    std::uint64_t max_side_states = 16384;
    /// Max dimension of a subspace handed to enumerate_vectors (base-p digits).
    std::size_t max_enumeration_dim = 20;
    /// Max order of the dense Hermitian matrix built by the spectral path.
    std::size_t max_dense_dim = 4096;
};

/// Numerical tolerances of the spectral path and the cross-route checks.
/// The exact (formula / rank / cyclotomic) paths never consult these.
struct Tolerances {
    double eigenvalue_floor = 1e-12;   ///< below this an eigenvalue counts as zero
    double spectrum_sum = 1e-9;        ///< |sum(lambda) - 1| bound
    double flatness = 1e-9;            ///< max/min - 1 bound for flat spectra
    double cross_route = 1e-8;         ///< |spectral - k ln p| agreement bound
    double side_symmetry = 1e-9;       ///< entropy(rho_A) vs entropy(rho_B)
    double phase_invariance = 1e-9;    ///< spectrum drift under local phases
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

} // namespace acs
