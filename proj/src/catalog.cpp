// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/catalog.hpp"

#include "solitonkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace sk {

namespace {

// ---------------------------------------------------------------------------
// Builtin fixtures

constexpr std::string_view kHeisenberg5 = R"(# Five-dimensional Heisenberg group, left-invariant orthonormal frame,
# with its standard Sasakian structure and published reference values.
manifold heisenberg5 dim 5
param p
bracket e1 e2 = 2e3
bracket e4 e5 = 2e3
metric identity
contact xi = e3
contact phi e1 = e2
contact phi e2 = -e1
contact phi e3 = 0
contact phi e4 = e5
contact phi e5 = -e4
# rejected variant: contact xi = e5 (incompatible with eta = g(., e3))
expect nabla e1 e2 = e3 source "reference connection table"
expect nabla e4 e5 = e3 source "reference connection table"
expect nabla e1 e3 = -e2 source "reference connection table"
expect nabla e3 e1 = -e2 source "reference connection table"
expect nabla e2 e1 = -e3 source "reference connection table"
expect nabla e2 e3 = e1 source "reference connection table"
expect nabla e1 e2 = e1 source "reference connection table"
expect nabla e3 e5 = e4 source "reference connection table"
expect nabla e4 e3 = -e5 source "reference connection table"
expect riem e1 e2 e1 = 3e2 source "reference curvature list"
expect riem e2 e3 e1 = -e3 source "reference curvature list"
expect riem e2 e3 e2 = -e3 source "reference curvature list"
expect riem e2 e4 e1 = -e5 source "reference curvature list"
expect riem e1 e2 e2 = -e1 source "reference curvature list"
expect riem e1 e2 e5 = -2e4 source "reference curvature list"
expect riem e2 e4 e5 = e1 source "reference curvature list"
expect riem e2 e5 e1 = e4 source "reference curvature list"
expect riem e1 e3 e1 = -e3 source "reference curvature list"
expect riem e1 e3 e3 = e1 source "reference curvature list"
expect riem e3 e4 e3 = -e4 source "reference curvature list"
expect riem e4 e5 e1 = 2e2 source "reference curvature list"
expect riem e1 e4 e2 = e5 source "reference curvature list"
expect riem e1 e4 e5 = -e2 source "reference curvature list"
expect riem e4 e5 e2 = -2e1 source "reference curvature list"
expect riem e4 e5 e4 = 2e5 source "reference curvature list"
expect riem e1 e5 e4 = e2 source "reference curvature list"
expect riem e4 e5 e5 = -2e4 source "reference curvature list"
expect ricci 1 1 = -2 source "reference Ricci values"
expect ricci 2 2 = 3 source "reference Ricci values"
expect ricci 3 3 = 4 source "reference Ricci values"
expect ricci 4 4 = 4 source "reference Ricci values"
expect ricci 5 5 = -1 source "reference Ricci values"
expect lambda = 1/2*p + 9/5 source "reference lambda"
)";

constexpr std::string_view kHeisenberg3 = R"(# Three-dimensional Heisenberg group with its standard Sasakian structure.
manifold heisenberg3 dim 3
param p
bracket e1 e2 = 2e3
metric identity
contact xi = e3
contact phi e1 = e2
contact phi e2 = -e1
)";

constexpr std::string_view kAbelian3 = R"(# Flat R^3 with a (non-contact) almost-contact metric structure.
manifold abelian3 dim 3
param p
metric identity
contact xi = e3
contact phi e1 = e2
contact phi e2 = -e1
)";

constexpr std::string_view kAbelian5 = R"(# Flat R^5 with a (non-contact) almost-contact metric structure.
manifold abelian5 dim 5
param p
metric identity
contact xi = e3
contact phi e1 = e2
contact phi e2 = -e1
contact phi e4 = e5
contact phi e5 = -e4
)";

constexpr std::string_view kNonJacobi3 = R"(# Antisymmetric brackets that violate the Jacobi identity.
manifold nonjacobi3 dim 3
param p
bracket e1 e2 = e3
bracket e1 e3 = e1
metric identity
)";

const std::map<std::string_view, std::string_view>& fixtures()
{
    static const std::map<std::string_view, std::string_view> table{
        {"abelian3", kAbelian3},       {"abelian5", kAbelian5},     {"heisenberg3", kHeisenberg3},
        {"heisenberg5", kHeisenberg5}, {"nonjacobi3", kNonJacobi3},
    };
    return table;
}

// ---------------------------------------------------------------------------
// Line tokenizer

enum class Tok { word, number, symbol, string, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t column = 0;  // 1-based
};

class LineParser {
public:
    LineParser(std::string_view line, int line_no) : line_(line), line_no_(line_no) { tokenize(); }

    [[noreturn]] void fail(const std::string& msg, std::size_t column) const
    {
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no_) + ", column " + std::to_string(column) + ": " + msg);
    }
    [[noreturn]] void fail_here(const std::string& msg) const { fail(msg, peek().column); }

    [[nodiscard]] bool empty() const { return tokens_.size() == 1; }
    [[nodiscard]] const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    Token next()
    {
        Token t = peek();
        if (pos_ + 1 < tokens_.size())
            ++pos_;
        return t;
    }
    bool accept_symbol(char ch)
    {
        if (peek().kind == Tok::symbol && peek().text[0] == ch) {
            next();
            return true;
        }
        return false;
    }
    void expect_symbol(char ch)
    {
        if (!accept_symbol(ch))
            fail_here(std::string("expected '") + ch + "'");
    }
    bool accept_word(std::string_view w)
    {
        if (peek().kind == Tok::word && peek().text == w) {
            next();
            return true;
        }
        return false;
    }
    void expect_word(std::string_view w)
    {
        if (!accept_word(w))
            fail_here("expected '" + std::string(w) + "'");
    }
    std::string expect_ident()
    {
        if (peek().kind != Tok::word)
            fail_here("expected identifier");
        return next().text;
    }
    int expect_int()
    {
        if (peek().kind != Tok::number)
            fail_here("expected integer");
        Token t = next();
        if (t.text.size() > 6)
            fail("integer too large", t.column);
        return std::stoi(t.text);
    }
    void expect_end()
    {
        if (peek().kind != Tok::end)
            fail_here("unexpected '" + peek().text + "'");
    }

    /// Frame index from `e<k>` (or a bare integer when `bare` is set); 0-based.
    int frame_index(int dim, bool bare = false)
    {
        const Token& t = peek();
        std::string digits;
        if (t.kind == Tok::word && t.text.size() > 1 && t.text[0] == 'e'
            && std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            digits = t.text.substr(1);
        else if (bare && t.kind == Tok::number)
            digits = t.text;
        else
            fail_here(bare ? "expected frame index" : "expected frame vector e<k>");
        next();
        if (digits.size() > 6)
            fail("index " + digits + " out of range 1.." + std::to_string(dim), t.column);
        int k = std::stoi(digits);
        if (k < 1 || k > dim)
            fail("index " + std::to_string(k) + " out of range 1.." + std::to_string(dim), t.column);
        return k - 1;
    }

    Rational rational()
    {
        bool negative = false;
        while (peek().kind == Tok::symbol && (peek().text == "-" || peek().text == "+"))
            negative ^= next().text == "-";
        if (peek().kind != Tok::number)
            fail_here("expected rational number");
        std::string num = next().text;
        std::string den = "1";
        if (accept_symbol('/')) {
            if (peek().kind != Tok::number)
                fail_here("expected denominator");
            Token d = next();
            if (d.text.find_first_not_of('0') == std::string::npos)
                fail("zero denominator", d.column);
            den = d.text;
        }
        Rational r = Rational::from_strings(num, den);
        return negative ? -r : r;
    }

    /// `term {(+|-) term}` with term := [sign] [rational [*]] e<k>, or `0`.
    RationalVector vector_expr(int dim)
    {
        RationalVector out(dim);
        if (peek().kind == Tok::number && peek().text.find_first_not_of('0') == std::string::npos
            && peek(1).kind == Tok::end) {
            next();
            return out;
        }
        bool first = true;
        for (;;) {
            bool negative = false;
            if (!first) {
                if (accept_symbol('+'))
                    negative = false;
                else if (accept_symbol('-'))
                    negative = true;
                else
                    break;
            }
            first = false;
            while (peek().kind == Tok::symbol && (peek().text == "-" || peek().text == "+"))
                negative ^= next().text == "-";
            Rational coeff(1);
            if (peek().kind == Tok::number) {
                coeff = rational();
                accept_symbol('*');
            }
            int k = frame_index(dim);
            out[k] += negative ? -coeff : coeff;
        }
        return out;
    }

    /// `source "<text>"` at end of line.
    std::string source_clause()
    {
        expect_word("source");
        if (peek().kind != Tok::string)
            fail_here("expected quoted source string");
        std::string s = next().text;
        expect_end();
        return s;
    }

    /// Raw text between the current token and the `source` keyword.
    std::string raw_until_source()
    {
        std::size_t start = peek().column - 1;
        std::size_t stop = line_.size();
        while (peek().kind != Tok::end && !(peek().kind == Tok::word && peek().text == "source"))
            next();
        if (peek().kind != Tok::end)
            stop = peek().column - 1;
        return std::string(line_.substr(start, stop - start));
    }

    [[nodiscard]] std::size_t column() const { return peek().column; }

private:
    void tokenize()
    {
        std::size_t i = 0;
        while (i < line_.size()) {
            char ch = line_[i];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
            } else if (ch == '#') {
                break;
            } else if (ch == '"') {
                std::size_t close = line_.find('"', i + 1);
                if (close == std::string_view::npos)
                    fail("unterminated string", i + 1);
                tokens_.push_back({Tok::string, std::string(line_.substr(i + 1, close - i - 1)), i + 1});
                i = close + 1;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < line_.size() && std::isdigit(static_cast<unsigned char>(line_[j])))
                    ++j;
                tokens_.push_back({Tok::number, std::string(line_.substr(i, j - i)), i + 1});
                i = j;
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t j = i;
                while (j < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[j])) || line_[j] == '_'))
                    ++j;
                tokens_.push_back({Tok::word, std::string(line_.substr(i, j - i)), i + 1});
                i = j;
            } else if (std::string_view("=+-*/()^,").find(ch) != std::string_view::npos) {
                tokens_.push_back({Tok::symbol, std::string(1, ch), i + 1});
                ++i;
            } else {
                fail(std::string("unexpected character '") + ch + "'", i + 1);
            }
        }
        tokens_.push_back({Tok::end, "end of line", line_.size() + 1});
    }

    std::string_view line_;
    int line_no_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

struct MetricEntry {
    Rational value;
    int line = 0;
};

}  // namespace

ScalarTable ManifoldSpec::expected_ricci_table() const
{
    if (expected.ricci.empty())
        throw Error(ErrorKind::invalid_input, "manifold '" + manifold.name + "' has no expected Ricci values");
    ScalarTable t(manifold.dim);
    for (const auto& e : expected.ricci) {
        t(e.i, e.j) = e.value;
        t(e.j, e.i) = e.value;
    }
    return t;
}

ManifoldSpec parse_manifold(std::string_view text)
{
    ManifoldSpec spec;
    bool have_header = false;
    bool have_metric = false;
    int header_line = 0;
    std::map<std::pair<int, int>, int> bracket_lines;
    std::map<std::pair<int, int>, Rational> metric_entries;
    std::optional<RationalVector> xi;
    std::optional<RationalVector> eta;
    std::map<int, RationalVector> phi_columns;
    bool any_contact = false;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        LineParser lp(line, line_no);
        if (lp.empty())
            continue;

        const std::size_t directive_col = lp.column();
        const std::string directive = lp.expect_ident();
        if (!have_header && directive != "manifold")
            lp.fail("expected 'manifold <name> dim <n>' before '" + directive + "'", directive_col);
        const int dim = spec.manifold.dim;

        if (directive == "manifold") {
            if (have_header)
                lp.fail("duplicate manifold header", directive_col);
            std::string name = lp.expect_ident();
            lp.expect_word("dim");
            std::size_t dim_col = lp.column();
            int n = lp.expect_int();
            if (n < 1)
                lp.fail("dimension must be positive", dim_col);
            lp.expect_end();
            spec.manifold = FrameManifold::flat(std::move(name), n);
            // identity is only applied on `metric identity`
            spec.manifold.metric = Matrix<Rational>(n);
            have_header = true;
            header_line = line_no;
        } else if (directive == "param") {
            std::size_t col = lp.column();
            std::string name = lp.expect_ident();
            lp.expect_end();
            if (name == "lambda")
                lp.fail("'lambda' is reserved", col);
            if (!spec.manifold.declares(name))
                spec.manifold.params.push_back(name);
        } else if (directive == "bracket") {
            std::size_t col = lp.column();
            int i = lp.frame_index(dim);
            int j = lp.frame_index(dim);
            if (i == j)
                lp.fail("bracket of e" + std::to_string(i + 1) + " with itself is always zero", col);
            auto key = std::minmax(i, j);
            if (auto it = bracket_lines.find(key); it != bracket_lines.end())
                lp.fail("duplicate bracket [e" + std::to_string(key.first + 1) + ",e" + std::to_string(key.second + 1)
                            + "], first declared on line " + std::to_string(it->second),
                        col);
            bracket_lines[key] = line_no;
            lp.expect_symbol('=');
            RationalVector value = lp.vector_expr(dim);
            lp.expect_end();
            spec.manifold.set_bracket(i, j, value);
        } else if (directive == "metric") {
            have_metric = true;
            if (lp.accept_word("identity")) {
                lp.expect_end();
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        if (!metric_entries.contains({i, j}))
                            spec.manifold.metric(i, j) = Rational(i == j ? 1 : 0);
            } else {
                lp.expect_word("g");
                std::size_t col = lp.column();
                int i = lp.frame_index(dim, true);
                int j = lp.frame_index(dim, true);
                lp.expect_symbol('=');
                Rational v = lp.rational();
                lp.expect_end();
                auto key = std::minmax(i, j);
                if (auto it = metric_entries.find(key); it != metric_entries.end() && it->second != v)
                    lp.fail("conflicting metric entry g " + std::to_string(i + 1) + " " + std::to_string(j + 1), col);
                metric_entries[key] = v;
                spec.manifold.metric(i, j) = v;
                spec.manifold.metric(j, i) = v;
            }
        } else if (directive == "contact") {
            any_contact = true;
            std::size_t col = lp.column();
            std::string what = lp.expect_ident();
            if (what == "xi" || what == "eta") {
                lp.expect_symbol('=');
                RationalVector v = lp.vector_expr(dim);
                lp.expect_end();
                (what == "xi" ? xi : eta) = std::move(v);
            } else if (what == "phi") {
                int j = lp.frame_index(dim);
                lp.expect_symbol('=');
                RationalVector v = lp.vector_expr(dim);
                lp.expect_end();
                phi_columns[j] = std::move(v);
            } else {
                lp.fail("unknown contact field '" + what + "' (expected xi, eta, phi)", col);
            }
        } else if (directive == "expect") {
            std::size_t col = lp.column();
            std::string what = lp.expect_ident();
            if (what == "ricci") {
                int i = lp.frame_index(dim, true);
                int j = lp.frame_index(dim, true);
                lp.expect_symbol('=');
                Rational v = lp.rational();
                spec.expected.ricci.push_back({i, j, v, lp.source_clause()});
            } else if (what == "lambda") {
                lp.expect_symbol('=');
                std::size_t expr_col = lp.column();
                std::string raw = lp.raw_until_source();
                ParamScalar v;
                try {
                    v = ParamScalar::parse(raw);
                } catch (const Error& e) {
                    lp.fail(e.what(), expr_col);
                }
                spec.expected.lambda = ExpectedLambda{v, lp.source_clause()};
            } else if (what == "nabla") {
                int i = lp.frame_index(dim);
                int j = lp.frame_index(dim);
                lp.expect_symbol('=');
                RationalVector v = lp.vector_expr(dim);
                spec.expected.nabla.push_back({i, j, std::move(v), lp.source_clause()});
            } else if (what == "riem") {
                int i = lp.frame_index(dim);
                int j = lp.frame_index(dim);
                int k = lp.frame_index(dim);
                lp.expect_symbol('=');
                RationalVector v = lp.vector_expr(dim);
                spec.expected.riem.push_back({i, j, k, std::move(v), lp.source_clause()});
            } else {
                lp.fail("unknown expectation '" + what + "' (expected ricci, lambda, nabla, riem)", col);
            }
        } else {
            lp.fail("unknown directive '" + directive + "'", directive_col);
        }
    }

    auto fail_at = [](int line, const std::string& msg) {
        throw Error(ErrorKind::parse, "line " + std::to_string(line) + ", column 1: " + msg);
    };
    if (!have_header)
        fail_at(std::max(line_no, 1), "missing 'manifold <name> dim <n>' header");
    if (!have_metric)
        fail_at(header_line, "manifold '" + spec.manifold.name + "' has no metric directive");

    if (any_contact) {
        if (!xi)
            fail_at(header_line, "contact block without 'contact xi'");
        Matrix<Rational> phi(spec.manifold.dim);
        for (const auto& [j, col] : phi_columns)
            for (int k = 0; k < spec.manifold.dim; ++k)
                phi(k, j) = col[k];
        AlmostContactData d = AlmostContactData::with_metric_dual(spec.manifold, std::move(phi), *xi);
        if (eta)
            d.eta = *eta;
        spec.contact = std::move(d);
    }

    CheckReport check = validate(spec.manifold, false);
    if (!check.all_pass()) {
        std::string why;
        for (const auto& item : check.items)
            if (item.status != Status::pass)
                why += "; " + item.name + (item.defect ? ": " + *item.defect : "");
        fail_at(header_line, "manifold '" + spec.manifold.name + "' is invalid" + why);
    }
    return spec;
}

namespace {

std::string vec(const RationalVector& v) { return render_vector(v); }

}  // namespace

std::string serialize_manifold(const ManifoldSpec& spec)
{
    const FrameManifold& m = spec.manifold;
    const int n = m.dim;
    std::ostringstream os;
    os << "manifold " << m.name << " dim " << n << '\n';
    for (const auto& p : m.params)
        os << "param " << p << '\n';
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RationalVector v(n);
            bool any = false;
            for (int k = 0; k < n; ++k) {
                v[k] = m.c(i, j, k);
                any = any || !v[k].is_zero();
            }
            if (any)
                os << "bracket e" << i + 1 << " e" << j + 1 << " = " << vec(v) << '\n';
        }
    bool identity = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            identity = identity && m.metric(i, j) == Rational(i == j ? 1 : 0);
    if (identity) {
        os << "metric identity\n";
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!m.metric(i, j).is_zero())
                    os << "metric g " << i + 1 << ' ' << j + 1 << " = " << m.metric(i, j).str() << '\n';
    }
    if (spec.contact) {
        const AlmostContactData& d = *spec.contact;
        os << "contact xi = " << vec(d.xi) << '\n';
        if (AlmostContactData::with_metric_dual(m, d.phi, d.xi).eta != d.eta)
            os << "contact eta = " << vec(d.eta) << '\n';
        for (int j = 0; j < n; ++j) {
            RationalVector col(n);
            for (int k = 0; k < n; ++k)
                col[k] = d.phi(k, j);
            os << "contact phi e" << j + 1 << " = " << vec(col) << '\n';
        }
    }
    for (const auto& e : spec.expected.nabla)
        os << "expect nabla e" << e.i + 1 << " e" << e.j + 1 << " = " << vec(e.value) << " source \"" << e.source << "\"\n";
    for (const auto& e : spec.expected.riem)
        os << "expect riem e" << e.i + 1 << " e" << e.j + 1 << " e" << e.k + 1 << " = " << vec(e.value) << " source \""
           << e.source << "\"\n";
    for (const auto& e : spec.expected.ricci)
        os << "expect ricci " << e.i + 1 << ' ' << e.j + 1 << " = " << e.value.str() << " source \"" << e.source << "\"\n";
    if (spec.expected.lambda)
        os << "expect lambda = " << spec.expected.lambda->value.str() << " source \"" << spec.expected.lambda->source
           << "\"\n";
    return os.str();
}

std::vector<std::string> builtin_names()
{
    std::vector<std::string> out;
    for (const auto& [name, text] : fixtures())
        out.emplace_back(name);
    return out;
}

std::string_view builtin_text(std::string_view name)
{
    auto it = fixtures().find(name);
    if (it == fixtures().end()) {
        std::string list;
        for (const auto& n : builtin_names())
            list += (list.empty() ? "" : ", ") + n;
        throw Error(ErrorKind::unknown_name, "unknown builtin manifold '" + std::string(name) + "'; available: " + list);
    }
    return it->second;
}

ManifoldSpec builtin(std::string_view name) { return parse_manifold(builtin_text(name)); }

ManifoldSpec load_manifold_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot read manifold file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_manifold(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

RationalVector parse_rational_list(std::string_view text)
{
    RationalVector out;
    for (auto part : split_commas(text))
        out.push_back(ParamScalar::parse(part).constant_value());
    return out;
}

FrameVector parse_scalar_list(std::string_view text)
{
    FrameVector out;
    for (auto part : split_commas(text))
        out.push_back(ParamScalar::parse(part));
    return out;
}

}  // namespace sk
