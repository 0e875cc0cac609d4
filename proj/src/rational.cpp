// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/rational.hpp"

#include "solitonkit/error.hpp"

#include <cctype>

namespace sk {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::domain: return "domain";
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::unknown_name: return "unknown_name";
    case ErrorKind::inconsistent: return "inconsistent";
    case ErrorKind::underdetermined: return "underdetermined";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw Error(ErrorKind::domain, "rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::from_strings(std::string_view num, std::string_view den)
{
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw Error(ErrorKind::parse, "not an integer literal: '" + std::string(num) + "/" + std::string(den) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0)
        throw Error(ErrorKind::domain, "rational with zero denominator");
    mpq_class q(to_mpz(num), d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_strings(text, "1");
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }
bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::str() const
{
    if (is_integer())
        return numerator();
    return numerator() + "/" + denominator();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::domain, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace sk
