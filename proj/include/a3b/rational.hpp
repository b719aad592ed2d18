#pragma once

// Small exact-arithmetic helpers: an int64 rational number and an affine
// angle form  c0 + c1*A + c2*B  over up to two opaque real parameters.
//
// Angles in this library are measured in units of pi.  Most constructions
// produce angles that are affine combinations of at most two free parameters
// with rational coefficients; carrying those coefficients alongside the
// floating-point values lets the validator check vertex angle sums exactly
// (the sum at a vertex must be the constant 2 with both parameter
// coefficients cancelling) instead of relying on floating-point tolerance.

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace a3b {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator*(std::int64_t k, Rational b) { return Rational(k) * b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
};

// An angle expressed as  c0 + c1*A + c2*B  where A and B are opaque real
// parameters fixed by the construction that produced the quadrilateral
// (e.g. A = alpha and B = beta for the general two-parameter family).
struct AffineAngle {
    Rational c0{0};
    Rational c1{0};
    Rational c2{0};

    friend AffineAngle operator+(const AffineAngle& a, const AffineAngle& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    void add_multiple(int n, const AffineAngle& a) {
        c0 = c0 + Rational(n) * a.c0;
        c1 = c1 + Rational(n) * a.c1;
        c2 = c2 + Rational(n) * a.c2;
    }
    bool is_constant(Rational k) const {
        return c0 == k && c1 == Rational(0) && c2 == Rational(0);
    }
    friend bool operator==(const AffineAngle& a, const AffineAngle& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
    }
};

} // namespace a3b
