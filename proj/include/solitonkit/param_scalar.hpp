// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "solitonkit/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sk {

/// Sparse multivariate polynomial with rational coefficients over named
/// parameters (the conformal pressure `p`, or the reserved unknown `lambda`).
///
/// Terms are kept in degree-descending, then lexicographic order, which is
/// also the rendering order: `1/2*p + 9/5`. Zero coefficients are never stored.
class ParamScalar {
public:
    /// Sorted multiset of parameter names; empty for the constant term.
    using Monomial = std::vector<std::string>;

    struct MonomialOrder {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };

    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    ParamScalar() = default;
    ParamScalar(const Rational& constant);  // NOLINT(google-explicit-constructor)
    ParamScalar(std::int64_t constant) : ParamScalar(Rational(constant)) {}  // NOLINT

    static ParamScalar symbol(std::string name);
    static ParamScalar term(Monomial mono, const Rational& coeff);
    /// Parses the rendering grammar (plus parentheses, `-`, `/rational`, `^int`).
    static ParamScalar parse(std::string_view text);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;
    /// Throws sk::Error(kind::unsupported) if any parameter occurs.
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] int degree() const;
    [[nodiscard]] int degree_in(std::string_view name) const;
    [[nodiscard]] std::set<std::string> symbols() const;

    /// Coefficient of a single monomial (zero if absent).
    [[nodiscard]] Rational coefficient(const Monomial& mono) const;

    /// Full substitution. Throws sk::Error(kind::unknown_name) naming the
    /// first unbound parameter.
    [[nodiscard]] Rational evaluate(const std::map<std::string, Rational>& bindings) const;
    /// Partial substitution of one parameter by an expression.
    [[nodiscard]] ParamScalar substitute(std::string_view name, const ParamScalar& value) const;

    [[nodiscard]] std::string str() const;

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o);
    ParamScalar& operator*=(const Rational& k);
    /// Division only by a nonzero rational.
    ParamScalar& operator/=(const Rational& k);

    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
    friend ParamScalar operator*(ParamScalar a, const Rational& k) { return a *= k; }
    friend ParamScalar operator*(const Rational& k, ParamScalar a) { return a *= k; }
    friend ParamScalar operator/(ParamScalar a, const Rational& k) { return a /= k; }
    ParamScalar operator-() const;

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& mono, const Rational& coeff);

    Terms terms_;
};

/// `coefficient * unknown + remainder`, remainder free of the unknown.
struct LinearForm {
    std::string unknown;
    Rational coefficient;
    ParamScalar remainder;
};

/// Splits `expr` as a linear form in `unknown`. Throws sk::Error(kind::unsupported)
/// when the unknown appears nonlinearly or multiplied by another parameter.
LinearForm to_linear_form(const ParamScalar& expr, std::string_view unknown);

/// Unique v with coefficient*v + remainder = 0.
/// Throws kind::inconsistent (0 = r != 0) or kind::underdetermined (0 = 0).
ParamScalar solve_linear(const LinearForm& eq);

inline Rational normalize(const Rational& r) { return Rational(r.raw()); }

}  // namespace sk
