#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "specforms/errors.hpp"

namespace specforms {

/// Exact rational arithmetic over 64-bit integers.
///
/// Multiplicity polynomials have coefficients with denominator dividing
/// 4·#Γ, and all evaluations here stay far below the int64 range, so no
/// bignum backend is needed. Normalized form: den > 0, gcd(num, den) = 1.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const { return den_ == 1; }

    std::int64_t as_integer() const {
        if (!is_integer())
            throw numerical_error("rational " + str() + " is not an integer");
        return num_;
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num_ == 0) throw numerical_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(Rational o) { return *this = *this + o; }
    Rational& operator-=(Rational o) { return *this = *this - o; }

    friend bool operator==(Rational a, Rational b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ == 0) throw numerical_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Half-integers u = p/2 index Dirac eigenvalues throughout; this helper
/// keeps those evaluations exact.
inline Rational half(std::int64_t p) { return Rational(p, 2); }

} // namespace specforms
