// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/param_scalar.hpp"

#include "solitonkit/error.hpp"

#include <algorithm>
#include <cctype>

namespace sk {

bool ParamScalar::MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

ParamScalar::ParamScalar(const Rational& constant)
{
    if (!constant.is_zero())
        terms_.emplace(Monomial{}, constant);
}

ParamScalar ParamScalar::symbol(std::string name)
{
    ParamScalar s;
    s.terms_.emplace(Monomial{std::move(name)}, Rational(1));
    return s;
}

ParamScalar ParamScalar::term(Monomial mono, const Rational& coeff)
{
    std::sort(mono.begin(), mono.end());
    ParamScalar s;
    s.add_term(mono, coeff);
    return s;
}

void ParamScalar::add_term(const Monomial& mono, const Rational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool ParamScalar::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamScalar::constant_term() const { return coefficient({}); }

Rational ParamScalar::constant_value() const
{
    if (!is_constant())
        throw Error(ErrorKind::unsupported, "expected a parameter-free value, got '" + str() + "'");
    return constant_term();
}

int ParamScalar::degree() const
{
    // map order puts the highest degree first
    return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

int ParamScalar::degree_in(std::string_view name) const
{
    int best = 0;
    for (const auto& [mono, coeff] : terms_)
        best = std::max(best, static_cast<int>(std::count(mono.begin(), mono.end(), name)));
    return best;
}

std::set<std::string> ParamScalar::symbols() const
{
    std::set<std::string> out;
    for (const auto& [mono, coeff] : terms_)
        out.insert(mono.begin(), mono.end());
    return out;
}

Rational ParamScalar::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamScalar::evaluate(const std::map<std::string, Rational>& bindings) const
{
    Rational total;
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (const auto& name : mono) {
            auto it = bindings.find(name);
            if (it == bindings.end())
                throw Error(ErrorKind::unknown_name, "no binding for parameter '" + name + "'");
            term *= it->second;
        }
        total += term;
    }
    return total;
}

ParamScalar ParamScalar::substitute(std::string_view name, const ParamScalar& value) const
{
    ParamScalar out;
    for (const auto& [mono, coeff] : terms_) {
        ParamScalar term(coeff);
        Monomial rest;
        for (const auto& s : mono) {
            if (s == name)
                term *= value;
            else
                rest.push_back(s);
        }
        out += term * ParamScalar::term(rest, Rational(1));
    }
    return out;
}

namespace {

std::string render_monomial(const ParamScalar::Monomial& mono)
{
    std::string out;
    for (std::size_t i = 0; i < mono.size();) {
        std::size_t j = i;
        while (j < mono.size() && mono[j] == mono[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += mono[i];
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string ParamScalar::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        if (!out.empty())
            out += " + ";
        if (mono.empty())
            out += coeff.str();
        else if (coeff == Rational(1))
            out += render_monomial(mono);
        else if (coeff == Rational(-1))
            out += "-" + render_monomial(mono);
        else
            out += coeff.str() + "*" + render_monomial(mono);
    }
    return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o)
{
    for (const auto& [mono, coeff] : o.terms_)
        add_term(mono, coeff);
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o)
{
    for (const auto& [mono, coeff] : o.terms_)
        add_term(mono, -coeff);
    return *this;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o)
{
    ParamScalar out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial mono;
            mono.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
            out.add_term(mono, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

ParamScalar& ParamScalar::operator*=(const Rational& k)
{
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_)
        coeff *= k;
    return *this;
}

ParamScalar& ParamScalar::operator/=(const Rational& k)
{
    if (k.is_zero())
        throw Error(ErrorKind::domain, "division of a parameter expression by zero");
    for (auto& [mono, coeff] : terms_)
        coeff /= k;
    return *this;
}

ParamScalar ParamScalar::operator-() const
{
    ParamScalar out = *this;
    for (auto& [mono, coeff] : out.terms_)
        coeff = -coeff;
    return out;
}

// Recursive-descent parser:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('-'|'+') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ParamScalar parse_all()
    {
        ParamScalar value = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::parse,
                    "in expression '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamScalar expr()
    {
        ParamScalar value = term();
        for (;;) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    ParamScalar term()
    {
        ParamScalar value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                ParamScalar divisor = unary();
                if (!divisor.is_constant())
                    fail("division by a parameter expression is not supported");
                if (divisor.is_zero())
                    fail("division by zero");
                value /= divisor.constant_term();
            } else {
                return value;
            }
        }
    }

    ParamScalar unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    ParamScalar power()
    {
        ParamScalar base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected integer exponent");
            int exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
            ParamScalar out(Rational(1));
            for (int i = 0; i < exponent; ++i)
                out *= base;
            return out;
        }
        return base;
    }

    ParamScalar atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            ParamScalar inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return ParamScalar(Rational::from_strings(text_.substr(start, pos_ - start), "1"));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return ParamScalar::symbol(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamScalar ParamScalar::parse(std::string_view text) { return ExprParser(text).parse_all(); }

LinearForm to_linear_form(const ParamScalar& expr, std::string_view unknown)
{
    LinearForm form{std::string(unknown), Rational(0), ParamScalar()};
    const ParamScalar::Monomial unit{std::string(unknown)};
    for (const auto& [mono, coeff] : expr.terms()) {
        auto hits = std::count(mono.begin(), mono.end(), unknown);
        if (hits == 0) {
            form.remainder += ParamScalar::term(mono, coeff);
        } else if (mono == unit) {
            form.coefficient += coeff;
        } else {
            throw Error(ErrorKind::unsupported,
                        "'" + std::string(unknown) + "' does not enter linearly with a rational coefficient in '"
                            + expr.str() + "'");
        }
    }
    return form;
}

ParamScalar solve_linear(const LinearForm& eq)
{
    if (eq.coefficient.is_zero()) {
        if (eq.remainder.is_zero())
            throw Error(ErrorKind::underdetermined, "equation 0 = 0 leaves '" + eq.unknown + "' undetermined");
        throw Error(ErrorKind::inconsistent, "equation 0 = " + (-eq.remainder).str() + " is inconsistent");
    }
    return -eq.remainder / eq.coefficient;
}

}  // namespace sk
