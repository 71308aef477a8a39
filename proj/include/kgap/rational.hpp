#pragma once

// Exact rational scalars backed by GMP.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kgap {

/// Error raised for domain violations anywhere in the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Integer = mpz_class;

/// An exact rational number, always held in lowest terms with a positive
/// denominator. Values are immutable from the outside; every operation
/// returns a new canonical value.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long long v);           // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& v) : value_(v) {}
    explicit Rational(const mpq_class& v);

    /// num/den in lowest terms. Throws Error("division by zero") if den == 0.
    static Rational reduce(const Integer& num, const Integer& den);
    static Rational reduce(long long num, long long den);

    /// Parses "p/q", "p", or a terminating decimal such as "-0.314".
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    Integer ceil() const;
    /// Nearest integer, ties rounded up.
    Integer round() const;
    double to_double() const { return value_.get_d(); }

    /// Canonical "p/q" text; integers are written with an explicit "/1".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// 64-bit FNV-1a hash of the canonical text form.
std::uint64_t hash_value(const Rational& x);

}  // namespace kgap

template <>
struct std::hash<kgap::Rational> {
    std::size_t operator()(const kgap::Rational& x) const noexcept
    {
        return static_cast<std::size_t>(kgap::hash_value(x));
    }
};
