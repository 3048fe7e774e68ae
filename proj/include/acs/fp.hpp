#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acs {

/// Trial division; moduli here are tiny (2, 3, 5, 7 in practice).
constexpr bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline void require_prime(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

/// Inverse of a mod p, p prime, a != 0 mod p.
constexpr std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2). Exponent loop is fine at this size.
    std::uint64_t base = a % p, acc = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

/// An element of the prime field F_p. Value semantics; arithmetic between
/// scalars of different moduli is a logic error and throws.
class FpScalar {
public:
    FpScalar(std::uint32_t value, std::uint32_t p) : p_(p) {
        require_prime(p);
        v_ = value % p;
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    FpScalar operator+(const FpScalar& o) const { return make((v_ + o.check(p_)) % p_); }
    FpScalar operator-(const FpScalar& o) const { return make((v_ + p_ - o.check(p_)) % p_); }
    FpScalar operator*(const FpScalar& o) const {
        return make(static_cast<std::uint32_t>(std::uint64_t{v_} * o.check(p_) % p_));
    }
    FpScalar operator-() const { return make(v_ == 0 ? 0 : p_ - v_); }

    FpScalar inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        return make(inv_mod(v_, p_));
    }

    bool operator==(const FpScalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool is_zero() const { return v_ == 0; }

private:
    FpScalar make(std::uint32_t v) const {
        FpScalar s = *this;
        s.v_ = v;
        return s;
    }
    std::uint32_t check(std::uint32_t p) const {
        if (p_ != p) throw std::invalid_argument("F_p arithmetic across different moduli");
        return v_;
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

} // namespace acs
