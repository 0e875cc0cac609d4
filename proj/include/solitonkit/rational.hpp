// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sk {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Backed by GMP, so numerators and denominators never overflow.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    /// Throws sk::Error(kind::domain) when den == 0.
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    /// Parses "a", "-a", "a/b". Throws sk::Error(kind::parse) otherwise.
    static Rational parse(std::string_view text);
    /// Builds from decimal big-integer strings; the result is normalized.
    static Rational from_strings(std::string_view num, std::string_view den);

    [[nodiscard]] std::string numerator() const;
    [[nodiscard]] std::string denominator() const;
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "a/b", or "a" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws sk::Error(kind::domain) on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_{0};
};

}  // namespace sk
