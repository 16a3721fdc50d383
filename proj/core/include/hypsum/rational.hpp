#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact rational numbers and the rising-factorial
 *        kernels (Pochhammer, factorial, integer powers) built on them.
 *
 * Values are always canonical: denominator > 0, gcd(|num|, den) = 1, and
 * zero is stored as 0/1. Equality is therefore structural. Arithmetic is
 * closed and exact; nothing here ever rounds.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmp.h>

namespace hypsum {

class Rational {
public:
    Rational();
    Rational(long n);  // NOLINT: implicit integer promotion is intended
    Rational(long num, long den);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept;
    ~Rational();

    /// Parses the rational text format: optional leading '-', a decimal
    /// integer, optionally followed by '/' and a positive decimal integer.
    /// Anything else (including a zero denominator) throws DomainError.
    static Rational parse(std::string_view text);

    bool is_zero() const;
    bool is_one() const;
    bool is_negative() const;
    bool is_positive() const;
    bool is_integer() const;
    bool is_nonpositive_integer() const;

    /// True when the value is an integer representable as long.
    bool fits_long() const;
    long to_long() const;  ///< DomainError unless fits_long().

    long floor_long() const;  ///< floor of the value; DomainError if out of long range.
    long ceil_long() const;   ///< ceiling, same caveat.

    /// Canonical text form, "p/q" or just "p" when q = 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  ///< DomainError on zero divisor.

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational abs(const Rational& a);
    friend void swap(Rational& a, Rational& b) noexcept;

private:
    mpq_t v_;
};

/// Exact k-th power; DomainError for 0 with negative exponent.
Rational pow(const Rational& base, long exp);

/// Rising factorial a(a+1)...(a+n-1); 1 for n = 0. DomainError for n < 0.
Rational pochhammer(const Rational& a, long n);

/// n! as a Rational. DomainError for n < 0.
Rational factorial(long n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hypsum
