#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace acs {

/// Exact rational with int64 parts; throws std::overflow_error rather than
/// silently wrapping. Values in this project are small powers of p.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    static Rational pow(long long base, int exp); // exp may be negative

private:
    void normalize();
    long long num_, den_;
};

/// Element of Z[zeta_p] in the power basis {1, zeta, ..., zeta^(p-2)},
/// canonically reduced via zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
/// Equality of canonical forms is equality in the ring.
class CycInt {
public:
    explicit CycInt(std::uint32_t p);
    CycInt(std::uint32_t p, std::vector<long long> coeffs); // length p-1

    static CycInt zeta_power(std::uint32_t p, std::uint32_t k);
    static CycInt integer(std::uint32_t p, long long n);

    std::uint32_t modulus() const { return p_; }
    const std::vector<long long>& coeffs() const { return c_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    bool operator==(const CycInt& o) const = default;

    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }

    /// Multiplication by zeta^k (a basis rotation; cheaper than operator*).
    CycInt times_zeta_power(std::uint32_t k) const;

    CycInt conjugate() const;
    CycInt norm_squared() const { return *this * conjugate(); }

    bool is_zero() const;
    bool is_rational() const; // lies in Z inside the power basis
    long long rational_value() const; // requires is_rational()

    std::complex<double> embed() const; // zeta -> exp(2 pi i / p)

private:
    std::uint32_t p_;
    std::vector<long long> c_; // length p-1
};

} // namespace acs
