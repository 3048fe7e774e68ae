#include "acs/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "acs/fp.hpp"

namespace acs {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

} // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::pow(long long base, int exp) {
    Rational r(1);
    const Rational b = exp >= 0 ? Rational(base) : Rational(1, base);
    for (int i = 0; i < (exp >= 0 ? exp : -exp); ++i) r = r * b;
    return r;
}

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p - 1, 0) { require_prime(p); }

CycInt::CycInt(std::uint32_t p, std::vector<long long> coeffs) : p_(p), c_(std::move(coeffs)) {
    require_prime(p);
    if (c_.size() != p - 1)
        throw std::invalid_argument("CycInt: expected " + std::to_string(p - 1) + " coefficients");
}

CycInt CycInt::zeta_power(std::uint32_t p, std::uint32_t k) {
    CycInt z(p);
    k %= p;
    if (k < p - 1) {
        z.c_[k] = 1;
    } else {
        for (auto& c : z.c_) c = -1; // zeta^(p-1)
    }
    return z;
}

CycInt CycInt::integer(std::uint32_t p, long long n) {
    CycInt z(p);
    z.c_[0] = n;
    return z;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: modulus mismatch");
    CycInt r(p_);
    for (std::size_t i = 0; i + 1 < p_; ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (std::size_t i = 0; i + 1 < p_; ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: modulus mismatch");
    // Convolve in Z[x]/(x^p - 1), then reduce by the minimal polynomial:
    // subtracting the x^(p-1) coefficient from every slot.
    std::vector<long long> full(p_, 0);
    for (std::size_t i = 0; i + 1 < p_; ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j + 1 < p_; ++j)
            full[(i + j) % p_] = checked_add(full[(i + j) % p_], checked_mul(c_[i], o.c_[j]));
    }
    CycInt r(p_);
    for (std::size_t k = 0; k + 1 < p_; ++k) r.c_[k] = checked_add(full[k], -full[p_ - 1]);
    return r;
}

CycInt CycInt::times_zeta_power(std::uint32_t k) const {
    k %= p_;
    std::vector<long long> full(p_, 0);
    for (std::size_t i = 0; i + 1 < p_; ++i) full[(i + k) % p_] = c_[i];
    CycInt r(p_);
    for (std::size_t j = 0; j + 1 < p_; ++j) r.c_[j] = checked_add(full[j], -full[p_ - 1]);
    return r;
}

CycInt CycInt::conjugate() const {
    std::vector<long long> full(p_, 0);
    for (std::size_t i = 0; i + 1 < p_; ++i) full[(p_ - i) % p_] = c_[i];
    CycInt r(p_);
    for (std::size_t j = 0; j + 1 < p_; ++j) r.c_[j] = checked_add(full[j], -full[p_ - 1]);
    return r;
}

bool CycInt::is_zero() const {
    for (auto c : c_)
        if (c) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t i = 1; i + 1 < p_; ++i)
        if (c_[i]) return false;
    return true;
}

long long CycInt::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycInt value is irrational");
    return c_[0];
}

std::complex<double> CycInt::embed() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k + 1 < p_; ++k) {
        if (!c_[k]) continue;
        const double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / p_;
        acc += static_cast<double>(c_[k]) * std::complex<double>{std::cos(arg), std::sin(arg)};
    }
    return acc;
}

} // namespace acs
