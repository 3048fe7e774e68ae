#include "acs/symplectic.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "acs/errors.hpp"

namespace acs {

SymplecticSpace::SymplecticSpace(FpMatrix gram) : gram_(std::move(gram)), offsets_{0} {
    const std::size_t n = gram_.rows();
    const std::uint32_t p = gram_.modulus();
    if (gram_.cols() != n) throw std::invalid_argument("Gram matrix must be square");
    if (n % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_.at(i, i) != 0)
            throw std::invalid_argument("Gram matrix not alternating: nonzero diagonal at " +
                                        std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            if ((gram_.at(i, j) + gram_.at(j, i)) % p != 0)
                throw std::invalid_argument("Gram matrix not antisymmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (n > 0 && rank(gram_) != n) throw std::invalid_argument("Gram matrix is singular");
}

SymplecticSpace standard_symplectic(std::size_t m, std::uint32_t p) {
    if (m == 0) throw std::invalid_argument("standard_symplectic: m must be >= 1");
    FpMatrix g(2 * m, 2 * m, p);
    for (std::size_t i = 0; i < m; ++i) {
        g.set(i, m + i, 1);
        g.set(m + i, i, p - 1);
    }
    return SymplecticSpace(std::move(g));
}

FpScalar pairing(const SymplecticSpace& s, const FpVector& u, const FpVector& v) {
    if (u.size() != s.dim() || v.size() != s.dim())
        throw std::invalid_argument("pairing: vector length != space dimension");
    return FpScalar(dot_vec(u, s.gram().apply(v), s.modulus()), s.modulus());
}

bool is_lagrangian(const SymplecticSpace& s, const Subspace& l) {
    if (l.ambient_dim() != s.dim() || l.modulus() != s.modulus())
        throw std::invalid_argument("is_lagrangian: ambient mismatch");
    if (l.dim() != s.dim() / 2) return false;
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i; j < l.dim(); ++j)
            if (!pairing(s, l.basis().row(i), l.basis().row(j)).is_zero()) return false;
    return true;
}

Subspace random_lagrangian(const SymplecticSpace& s, std::uint64_t seed) {
    const std::uint32_t p = s.modulus();
    const std::size_t n = s.dim();
    std::mt19937_64 rng(seed);
    Subspace l = Subspace::zero(n, p);
    while (l.dim() < n / 2) {
        // Orthogonal complement of l: vectors v with (B G) v = 0.
        const Subspace comp =
            l.dim() == 0 ? Subspace::full(n, p) : kernel(l.basis() * s.gram());
        // Any complement vector is isotropic against l and itself (alternating
        // form), so it extends the isotropic space as soon as it is new.
        FpVector v;
        do {
            v.assign(n, 0);
            for (std::size_t i = 0; i < comp.dim(); ++i) {
                const auto c = static_cast<std::uint32_t>(rng() % p);
                if (!c) continue;
                for (std::size_t j = 0; j < n; ++j)
                    v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{c} * comp.basis().at(i, j)) % p);
            }
        } while (l.contains(v));
        FpMatrix extended = l.basis().stack(FpMatrix(1, n, p, v));
        l = Subspace::from_rows(extended);
    }
    return l;
}

SymplecticSpace direct_sum(std::span<const SymplecticSpace> factors) {
    if (factors.empty()) throw std::invalid_argument("direct_sum: no factors");
    const std::uint32_t p = factors[0].modulus();
    std::size_t total = 0;
    std::vector<std::size_t> offsets;
    for (const auto& f : factors) {
        if (f.modulus() != p) throw std::invalid_argument("direct_sum: modulus mismatch");
        offsets.push_back(total);
        total += f.dim();
    }
    FpMatrix g(total, total, p);
    for (std::size_t k = 0; k < factors.size(); ++k)
        for (std::size_t i = 0; i < factors[k].dim(); ++i)
            for (std::size_t j = 0; j < factors[k].dim(); ++j)
                g.set(offsets[k] + i, offsets[k] + j, factors[k].gram().at(i, j));
    SymplecticSpace sum(std::move(g));
    sum.offsets_ = std::move(offsets);
    return sum;
}

LocalFactor::LocalFactor(SymplecticSpace sp, std::optional<Subspace> line)
    : space(std::move(sp)), unramified_line(std::move(line)) {
    if (unramified_line && !is_lagrangian(space, *unramified_line))
        throw std::invalid_argument("LocalFactor: unramified line is not Lagrangian");
}

LocalFactor auxiliary_place(std::uint32_t p) {
    FpMatrix line(1, 2, p);
    line.set(0, 0, 1);
    return LocalFactor(standard_symplectic(1, p), Subspace::from_rows(line));
}

} // namespace acs
