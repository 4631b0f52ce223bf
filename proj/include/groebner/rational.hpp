#ifndef GROEBNER_RATIONAL_HPP
#define GROEBNER_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "groebner/errors.hpp"

namespace groebner {

/// Exact rational coefficient. Always kept in canonical form: lowest terms,
/// positive denominator, zero represented as 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        value_.canonicalize();
    }

    /// Parses "num" or "num/den" with an optional leading '-'. The input need
    /// not be in lowest terms; the result always is.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_negative() const { return value_ < 0; }

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("inverse of zero");
        return Rational(1) / *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string to_string() const;

    /// Always "num/den", the wire form used by certificate bundles.
    std::string to_fraction_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

} // namespace groebner

#endif
