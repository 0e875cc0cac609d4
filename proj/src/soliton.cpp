// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/soliton.hpp"

#include "solitonkit/error.hpp"

namespace sk {

SolitonKind parse_soliton_kind(std::string_view name)
{
    if (name == "ricci")
        return SolitonKind::ricci;
    if (name == "almost_ricci")
        return SolitonKind::almost_ricci;
    if (name == "conformal")
        return SolitonKind::conformal;
    if (name == "almost_conformal")
        return SolitonKind::almost_conformal;
    throw Error(ErrorKind::unknown_name, "unknown soliton flavor '" + std::string(name)
                                             + "' (expected ricci, almost_ricci, conformal, almost_conformal)");
}

const char* to_string(SolitonKind kind)
{
    switch (kind) {
    case SolitonKind::ricci: return "ricci";
    case SolitonKind::almost_ricci: return "almost_ricci";
    case SolitonKind::conformal: return "conformal";
    case SolitonKind::almost_conformal: return "almost_conformal";
    }
    return "ricci";
}

bool is_conformal(SolitonKind kind) { return kind == SolitonKind::conformal || kind == SolitonKind::almost_conformal; }

const char* to_string(ResidualStatus status)
{
    return status == ResidualStatus::einstein_exact ? "einstein_exact" : "trace_only";
}

const char* to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::shrinking: return "shrinking";
    case Verdict::steady: return "steady";
    case Verdict::expanding: return "expanding";
    case Verdict::conditional: return "conditional";
    }
    return "conditional";
}

namespace {

void require_length(const FrameManifold& m, std::span<const ParamScalar> v, const char* what)
{
    if (static_cast<int>(v.size()) != m.dim)
        throw Error(ErrorKind::invalid_input, std::string(what) + " has " + std::to_string(v.size())
                                                  + " components, expected " + std::to_string(m.dim));
}

void require_parameters(const FrameManifold& m, const ParamScalar& lambda, SolitonKind kind)
{
    if (is_conformal(kind) && !m.declares(kPressureSymbol))
        throw Error(ErrorKind::invalid_input,
                    std::string(to_string(kind)) + " soliton needs the parameter 'p', which '" + m.name + "' does not declare");
    for (const auto& s : lambda.symbols())
        if (s != kLambdaSymbol && !m.declares(s))
            throw Error(ErrorKind::unknown_name, "parameter '" + s + "' is not declared on '" + m.name + "'");
}

ParamScalar pressure() { return ParamScalar::symbol(std::string(kPressureSymbol)); }

void append(std::string& acc, const std::string& part) { acc += (acc.empty() ? "" : "; ") + part; }

std::optional<std::string> opt(const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); }

std::string e(int i) { return "e" + std::to_string(i + 1); }

}  // namespace

ScalarTable soliton_residual(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& ric,
                             std::span<const ParamScalar> x, const ParamScalar& lambda, SolitonKind kind)
{
    require_length(m, x, "soliton field");
    require_parameters(m, lambda, kind);
    ParamScalar s = Rational(2) * lambda;
    if (is_conformal(kind))
        s -= pressure() + ParamScalar(Rational(2, m.dim));
    ScalarTable out = lie_derivative_metric(m, conn, x);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            out(i, j) += Rational(2) * ric(i, j) - s * m.metric(i, j);
    return out;
}

LambdaSolution solve_lambda_trace(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& ric,
                                  std::span<const ParamScalar> x, SolitonKind kind)
{
    if (m.declares(kLambdaSymbol))
        throw Error(ErrorKind::invalid_input, "'lambda' is reserved and cannot be a declared parameter");
    const ParamScalar unknown = ParamScalar::symbol(std::string(kLambdaSymbol));
    ScalarTable symbolic = soliton_residual(m, conn, ric, x, unknown, kind);

    LambdaSolution sol;
    sol.trace_equation = to_linear_form(metric_trace(m, symbolic), kLambdaSymbol);
    sol.lambda = solve_linear(sol.trace_equation);
    sol.residual = soliton_residual(m, conn, ric, x, sol.lambda, kind);
    sol.status = is_zero(sol.residual) ? ResidualStatus::einstein_exact : ResidualStatus::trace_only;
    return sol;
}

std::string render_equation(const LinearForm& eq)
{
    // sign chosen so the unknown has a positive coefficient
    const Rational flip(eq.coefficient.sign() < 0 ? -1 : 1);
    ParamScalar lhs = ParamScalar::symbol(eq.unknown) * (eq.coefficient * flip) + eq.remainder * flip;
    return lhs.str() + " = 0";
}

Classification classify(const ParamScalar& lambda)
{
    Classification c;
    if (lambda.is_constant()) {
        int sign = lambda.constant_term().sign();
        c.verdict = sign > 0 ? Verdict::shrinking : sign < 0 ? Verdict::expanding : Verdict::steady;
        c.condition = std::string("lambda ") + (sign > 0 ? "> 0" : sign < 0 ? "< 0" : "= 0");
        return c;
    }
    auto symbols = lambda.symbols();
    if (lambda.degree() > 1 || symbols.size() > 1)
        throw Error(ErrorKind::unsupported, "classification needs lambda affine in a single parameter, got '"
                                                + lambda.str() + "'");
    const std::string param = *symbols.begin();
    const Rational a = lambda.coefficient({param});
    const Rational b = lambda.constant_term();
    c.verdict = Verdict::conditional;
    c.parameter = param;
    c.threshold = -b / a;
    c.direction = a.sign();
    const std::string t = c.threshold->str();
    const char* above = c.direction > 0 ? " > " : " < ";
    const char* below = c.direction > 0 ? " < " : " > ";
    c.condition = "shrinking iff " + param + above + t + ", steady iff " + param + " = " + t + ", expanding iff "
                  + param + below + t;
    return c;
}

std::vector<IntegrabilityDefect> integrability_defects(const FrameManifold& m, const GradientData& gd)
{
    require_length(m, gd.df, "df");
    std::vector<IntegrabilityDefect> out;
    for (int i = 0; i < m.dim; ++i)
        for (int j = i + 1; j < m.dim; ++j) {
            ParamScalar s;
            for (int k = 0; k < m.dim; ++k)
                if (!m.c(i, j, k).is_zero())
                    s += gd.df[k] * m.c(i, j, k);
            if (!s.is_zero())
                out.push_back({i, j, s});
        }
    return out;
}

ScalarTable raw_hessian(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> df)
{
    require_length(m, df, "df");
    ScalarTable h(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            ParamScalar s;
            for (int k = 0; k < m.dim; ++k)
                s -= conn.gamma(i, j, k) * df[k];
            h(i, j) = std::move(s);
        }
    return h;
}

ScalarTable hessian(const FrameManifold& m, const ConnectionTable& conn, const GradientData& gd)
{
    auto defects = integrability_defects(m, gd);
    if (!defects.empty()) {
        const auto& d = defects.front();
        throw Error(ErrorKind::invalid_input, "df is not integrable: defect " + d.defect.str() + " on pair ("
                                                  + std::to_string(d.i + 1) + "," + std::to_string(d.j + 1) + ")");
    }
    return raw_hessian(m, conn, gd.df);
}

ScalarTable gradient_soliton_residual(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& ric,
                                      const GradientData& gd, const ParamScalar& lambda, SolitonKind kind)
{
    require_parameters(m, lambda, kind);
    ScalarTable out = hessian(m, conn, gd);
    ParamScalar s = lambda;
    if (is_conformal(kind))
        s -= pressure() / Rational(2) + ParamScalar(Rational(1, m.dim));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            out(i, j) += ric(i, j) - s * m.metric(i, j);
    return out;
}

CheckReport lemma32_check(const FrameManifold& m, const ConnectionTable& conn, const CurvatureTensor& riem,
                          const RicciTensor& ric, const GradientData& gd, const ParamScalar& lambda, SolitonKind kind)
{
    const std::string name = "R(X,Y)Df = (X lambda)Y - (Y lambda)X - (nabla_X Q)Y + (nabla_Y Q)X";
    if (!gd.dlambda)
        throw Error(ErrorKind::invalid_input, "curvature identity check needs the frame derivatives of lambda");
    require_length(m, *gd.dlambda, "dlambda");
    CheckReport r("gradient soliton curvature identity on " + m.name);

    ScalarTable hypothesis = gradient_soliton_residual(m, conn, ric.ric, gd, lambda, kind);
    if (!is_zero(hypothesis)) {
        r.add({name, Status::precondition_violated,
               "gradient soliton equation does not hold; residual " + render_table(hypothesis)});
        return r;
    }

    const int n = m.dim;
    const Matrix<Rational> ginv = inverse(m.metric);
    FrameVector grad(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (!ginv(k, l).is_zero())
                grad[k] += gd.df[l] * ginv(k, l);

    const auto dq = covariant_derivative_endo(m, conn, ric.q);
    const FrameVector& dl = *gd.dlambda;
    std::string bad;
    bool left_zero = true;
    bool right_zero = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FrameVector diff(n);
            for (int l = 0; l < n; ++l) {
                ParamScalar left;
                for (int k = 0; k < n; ++k)
                    if (!grad[k].is_zero())
                        left += grad[k] * riem.riem(i, j, k, l);
                ParamScalar right = -dq(i, j, l) + dq(j, i, l);
                if (l == j)
                    right += dl[i];
                if (l == i)
                    right -= dl[j];
                left_zero = left_zero && left.is_zero();
                right_zero = right_zero && right.is_zero();
                diff[l] = right - left;
            }
            if (!is_zero(diff))
                append(bad, "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + render_vector(diff));
        }
    r.check(name, bad.empty(), opt(bad));
    r.value("left side", left_zero ? "0" : "nonzero");
    r.value("right side", right_zero ? "0" : "nonzero");
    return r;
}

CheckReport theorem31_check(const FrameManifold& m, const AlmostContactData& d, const GradientData& gd,
                            const std::optional<ParamScalar>& lambda)
{
    if (!gd.dlambda)
        throw Error(ErrorKind::invalid_input, "potential check needs the frame derivatives of lambda");
    require_length(m, gd.df, "df");
    require_length(m, *gd.dlambda, "dlambda");
    if (static_cast<int>(d.eta.size()) != m.dim)
        throw Error(ErrorKind::invalid_input, "contact data dimensions do not match manifold '" + m.name + "'");

    CheckReport r("potential function on the contact distribution of " + m.name);
    const FrameVector& dl = *gd.dlambda;
    std::vector<int> horizontal;
    for (int i = 0; i < m.dim; ++i)
        if (d.eta[i].is_zero())
            horizontal.push_back(i);

    for (int i : horizontal) {
        // g(Df, e_i) = e_i(f) and p carries no frame derivative, so the
        // identity reduces to the obstruction e_i(f + lambda).
        ParamScalar defect = gd.df[i] + dl[i];
        r.check("g(Df," + e(i) + ") = " + e(i) + "(p/2 - lambda)", defect.is_zero(), defect.str());
    }

    if (lambda) {
        bool half_pressure = (*lambda - pressure() / Rational(2)).is_zero() && is_zero(dl);
        if (half_pressure) {
            std::string bad;
            for (int i : horizontal)
                if (!gd.df[i].is_zero())
                    append(bad, e(i) + "(f) = " + gd.df[i].str());
            r.check("lambda = p/2 forces df = 0 on the distribution", bad.empty(), opt(bad));
        }
    }
    const Rational k = Rational(-2, m.dim) - Rational(2 * (m.dim - 1));
    r.value("k", k.str());
    return r;
}

CheckReport theorem34_check(const GradientData& gd)
{
    if (!gd.dlambda)
        throw Error(ErrorKind::invalid_input, "lambda + f check needs the frame derivatives of lambda");
    const FrameVector& dl = *gd.dlambda;
    if (dl.size() != gd.df.size())
        throw Error(ErrorKind::invalid_input, "df and dlambda lengths differ");
    CheckReport r("constancy of lambda + f");
    for (std::size_t i = 0; i < gd.df.size(); ++i) {
        ParamScalar s = gd.df[i] + dl[i];
        r.check(e(static_cast<int>(i)) + "(lambda + f) = 0", s.is_zero(), s.str());
    }
    if (is_zero(dl)) {
        std::string bad;
        for (std::size_t i = 0; i < gd.df.size(); ++i)
            if (!gd.df[i].is_zero())
                append(bad, e(static_cast<int>(i)) + "(f) = " + gd.df[i].str());
        r.check("constant lambda forces constant f", bad.empty(), opt(bad));
    }
    return r;
}

ScalarTable concurrent_lie_derivative(const Matrix<Rational>& metric)
{
    ScalarTable identity(metric.dim());
    for (int i = 0; i < metric.dim(); ++i)
        identity(i, i) = ParamScalar(1);
    return lie_derivative_from_nabla(metric, identity);
}

CheckReport concurrent_check(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> v)
{
    require_length(m, v, "vector field");
    CheckReport r("concurrency of " + render_vector(v) + " on " + m.name);
    bool all = true;
    for (int i = 0; i < m.dim; ++i) {
        FrameVector nv = conn.nabla_field(i, v);
        FrameVector diff(m.dim);
        for (int k = 0; k < m.dim; ++k)
            diff[k] = ParamScalar(k == i ? 1 : 0) - nv[k];
        bool ok = is_zero(diff);
        all = all && ok;
        r.check("nabla_" + e(i) + " V = " + e(i), ok, "nabla_" + e(i) + " V = " + render_vector(nv));
    }
    if (all) {
        ScalarTable lv = lie_derivative_metric(m, conn, v);
        ScalarTable diff(m.dim);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                diff(i, j) = Rational(2) * m.metric(i, j) - lv(i, j);
        r.check("L_V g = 2g", is_zero(diff), render_table(diff));
    }
    return r;
}

Theorem36Result theorem36_derive(int m, bool assume_concurrent)
{
    if (m < 3 || m % 2 == 0)
        throw Error(ErrorKind::domain, "dimension must be odd and at least 3, got " + std::to_string(m));
    if (!assume_concurrent)
        throw Error(ErrorKind::precondition, "the derivation needs a concurrent potential field (L_V g = 2g)");

    FrameManifold model = FrameManifold::flat("model", m);
    const ScalarTable lv = concurrent_lie_derivative(model.metric);
    const ParamScalar lambda = ParamScalar::symbol(std::string(kLambdaSymbol));
    const ParamScalar s = Rational(2) * lambda - pressure() - ParamScalar(Rational(2, m));

    // Ric = (s g - L_V g) / 2 must be a multiple of g.
    ScalarTable ric(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            ric(i, j) = (s * model.metric(i, j) - lv(i, j)) / Rational(2);
    const ParamScalar einstein = ric(0, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (ric(i, j) != einstein * model.metric(i, j))
                throw Error(ErrorKind::precondition, "concurrent soliton equation is not Einstein");

    // Sasakian: Ric(xi, xi) = 2n with n = (m-1)/2.
    Theorem36Result out;
    out.dim = m;
    out.lambda_equation = to_linear_form(einstein - ParamScalar(Rational(m - 1)), kLambdaSymbol);
    out.lambda = solve_linear(out.lambda_equation);
    out.einstein_constant = einstein.substitute(kLambdaSymbol, out.lambda);
    out.classification = classify(out.lambda);
    return out;
}

}  // namespace sk
