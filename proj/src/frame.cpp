// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/frame.hpp"

#include "solitonkit/error.hpp"

#include <algorithm>
#include <sstream>

namespace sk {

FrameManifold FrameManifold::flat(std::string name, int dim)
{
    if (dim < 1)
        throw Error(ErrorKind::domain, "frame dimension must be positive");
    FrameManifold m;
    m.name = std::move(name);
    m.dim = dim;
    m.structure = Tensor<Rational, 3>(dim);
    m.metric = Matrix<Rational>(dim);
    for (int i = 0; i < dim; ++i)
        m.metric(i, i) = Rational(1);
    return m;
}

void FrameManifold::set_bracket(int i, int j, const RationalVector& value)
{
    if (static_cast<int>(value.size()) != dim)
        throw Error(ErrorKind::invalid_input, "bracket value has wrong length");
    for (int k = 0; k < dim; ++k) {
        structure(i, j, k) = value[k];
        structure(j, i, k) = -value[k];
    }
}

bool FrameManifold::declares(std::string_view param) const
{
    return std::find(params.begin(), params.end(), param) != params.end();
}

RationalVector bracket(const FrameManifold& m, std::span<const Rational> x, std::span<const Rational> y)
{
    RationalVector out(m.dim);
    for (int i = 0; i < m.dim; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < m.dim; ++j) {
            if (y[j].is_zero())
                continue;
            Rational w = x[i] * y[j];
            for (int k = 0; k < m.dim; ++k)
                out[k] += w * m.c(i, j, k);
        }
    }
    return out;
}

Rational determinant(const Matrix<Rational>& a)
{
    const int n = a.dim();
    Matrix<Rational> w = a;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && w(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            for (int k = 0; k < n; ++k)
                std::swap(w(pivot, k), w(col, k));
            det = -det;
        }
        det *= w(col, col);
        for (int row = col + 1; row < n; ++row) {
            if (w(row, col).is_zero())
                continue;
            Rational f = w(row, col) / w(col, col);
            for (int k = col; k < n; ++k)
                w(row, k) -= f * w(col, k);
        }
    }
    return det;
}

namespace {

Matrix<Rational> minor_of(const Matrix<Rational>& a, int skip_row, int skip_col)
{
    const int n = a.dim();
    Matrix<Rational> out(n - 1);
    for (int i = 0, r = 0; i < n; ++i) {
        if (i == skip_row)
            continue;
        for (int j = 0, c = 0; j < n; ++j) {
            if (j == skip_col)
                continue;
            out(r, c++) = a(i, j);
        }
        ++r;
    }
    return out;
}

Matrix<Rational> leading_block(const Matrix<Rational>& a, int size)
{
    Matrix<Rational> out(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            out(i, j) = a(i, j);
    return out;
}

std::string idx(std::initializer_list<int> zero_based)
{
    std::string s;
    for (int i : zero_based)
        s += "[" + std::to_string(i + 1) + "]";
    return s;
}

}  // namespace

Matrix<Rational> adjugate(const Matrix<Rational>& a)
{
    const int n = a.dim();
    Matrix<Rational> adj(n);
    if (n == 1) {
        adj(0, 0) = Rational(1);
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational cof = determinant(minor_of(a, j, i));
            adj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

Matrix<Rational> inverse(const Matrix<Rational>& a)
{
    Rational det = determinant(a);
    if (det.is_zero())
        throw Error(ErrorKind::domain, "singular matrix has no inverse");
    Matrix<Rational> inv = adjugate(a);
    for (auto& x : inv)
        x /= det;
    return inv;
}

CheckReport validate(const FrameManifold& m, bool strict)
{
    CheckReport report("validate " + m.name);
    const int n = m.dim;
    if (n < 1 || m.structure.dim() != n || m.metric.dim() != n) {
        report.check("table dimensions", false, "dim " + std::to_string(n) + " does not match the stored tables");
        return report;
    }

    std::vector<std::string> bad;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (m.c(i, j, k) != -m.c(j, i, k))
                    bad.push_back("c" + idx({i, j, k}) + " = " + m.c(i, j, k).str() + " but c" + idx({j, i, k})
                                  + " = " + m.c(j, i, k).str());
    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (const auto& p : parts)
            s += (s.empty() ? "" : "; ") + p;
        return s;
    };
    report.check("structure constants antisymmetric", bad.empty(), bad.empty() ? std::nullopt : std::optional(join(bad)));

    bad.clear();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.metric(i, j) != m.metric(j, i))
                bad.push_back("g" + idx({i, j}) + " = " + m.metric(i, j).str() + " but g" + idx({j, i}) + " = "
                              + m.metric(j, i).str());
    report.check("metric symmetric", bad.empty(), bad.empty() ? std::nullopt : std::optional(join(bad)));

    std::optional<std::string> pd_defect;
    for (int size = 1; size <= n; ++size) {
        Rational minor = determinant(leading_block(m.metric, size));
        if (minor.sign() <= 0) {
            pd_defect = "leading principal minor " + std::to_string(size) + " = " + minor.str();
            break;
        }
    }
    report.check("metric positive definite", !pd_defect, pd_defect);

    if (strict) {
        bad.clear();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    RationalVector defect(n);
                    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                    const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                    for (const auto& t : cyc)
                        for (int a = 0; a < n; ++a)
                            for (int l = 0; l < n; ++l)
                                defect[l] += m.c(t[0], t[1], a) * m.c(a, t[2], l);
                    if (std::any_of(defect.begin(), defect.end(), [](const Rational& r) { return !r.is_zero(); }))
                        bad.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ","
                                      + std::to_string(k + 1) + "): " + render_vector(defect));
                }
            }
        }
        report.check("jacobi identity", bad.empty(), bad.empty() ? std::nullopt : std::optional(join(bad)));
    }
    return report;
}

FrameVector ConnectionTable::nabla(int i, int j) const
{
    const int n = gamma.dim();
    FrameVector out(n);
    for (int k = 0; k < n; ++k)
        out[k] = gamma(i, j, k);
    return out;
}

FrameVector ConnectionTable::nabla_field(int i, std::span<const ParamScalar> x) const
{
    const int n = gamma.dim();
    FrameVector out(n);
    for (int j = 0; j < n; ++j) {
        if (x[j].is_zero())
            continue;
        for (int k = 0; k < n; ++k)
            out[k] += x[j] * gamma(i, j, k);
    }
    return out;
}

ConnectionTable levi_civita(const FrameManifold& m)
{
    CheckReport check = validate(m, false);
    if (!check.all_pass()) {
        std::string why;
        for (const auto& item : check.items)
            if (item.status != Status::pass)
                why += " " + item.name + (item.defect ? " (" + *item.defect + ")" : "");
        throw Error(ErrorKind::invalid_input, "manifold '" + m.name + "' is invalid:" + why);
    }
    const int n = m.dim;
    const Matrix<Rational> ginv = inverse(m.metric);

    // g(e_a, [e_b, e_c])
    auto g_br = [&](int a, int b, int c) {
        Rational s;
        for (int l = 0; l < n; ++l)
            s += m.c(b, c, l) * m.metric(a, l);
        return s;
    };

    // Koszul with constant metric entries: only the bracket terms survive.
    Tensor<Rational, 3> lowered(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                lowered(i, j, k) = (-g_br(i, j, k) + g_br(j, k, i) + g_br(k, i, j)) / Rational(2);

    ConnectionTable conn{Tensor<ParamScalar, 3>(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational s;
                for (int l = 0; l < n; ++l)
                    s += lowered(i, j, l) * ginv(l, k);
                conn.gamma(i, j, k) = s;
            }
    return conn;
}

CurvatureTensor curvature(const FrameManifold& m, const ConnectionTable& conn)
{
    const int n = m.dim;
    const auto& G = conn.gamma;
    CurvatureTensor out{Tensor<ParamScalar, 4>(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    ParamScalar s;
                    for (int a = 0; a < n; ++a) {
                        s += G(j, k, a) * G(i, a, l);
                        s -= G(i, k, a) * G(j, a, l);
                        if (!m.c(i, j, a).is_zero())
                            s -= G(a, k, l) * m.c(i, j, a);
                    }
                    out.riem(i, j, k, l) = std::move(s);
                }
    return out;
}

FrameVector CurvatureTensor::apply(int i, int j, int k) const
{
    const int n = riem.dim();
    FrameVector out(n);
    for (int l = 0; l < n; ++l)
        out[l] = riem(i, j, k, l);
    return out;
}

ParamScalar CurvatureTensor::lowered(const FrameManifold& m, int a, int b, int c, int d) const
{
    ParamScalar s;
    for (int l = 0; l < m.dim; ++l)
        if (!m.metric(l, d).is_zero())
            s += riem(a, b, c, l) * m.metric(l, d);
    return s;
}

ScalarTable ricci_operator(const FrameManifold& m, const ScalarTable& ric)
{
    const int n = m.dim;
    const Matrix<Rational> ginv = inverse(m.metric);
    ScalarTable q(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            ParamScalar s;
            for (int l = 0; l < n; ++l)
                s += ric(l, j) * ginv(k, l);
            q(k, j) = std::move(s);
        }
    return q;
}

RicciTensor ricci(const FrameManifold& m, const CurvatureTensor& riem)
{
    const int n = m.dim;
    RicciTensor out{ScalarTable(n), ScalarTable(n)};
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            ParamScalar s;
            for (int i = 0; i < n; ++i)
                s += riem.riem(i, j, k, i);
            out.ric(j, k) = std::move(s);
        }
    out.q = ricci_operator(m, out.ric);
    return out;
}

ParamScalar metric_trace(const FrameManifold& m, const ScalarTable& t)
{
    const Matrix<Rational> ginv = inverse(m.metric);
    ParamScalar s;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (!ginv(i, j).is_zero())
                s += t(i, j) * ginv(i, j);
    return s;
}

ParamScalar scalar_curvature(const FrameManifold& m, const ScalarTable& ric) { return metric_trace(m, ric); }

ScalarTable lie_derivative_from_nabla(const Matrix<Rational>& metric, const ScalarTable& nabla_x)
{
    const int n = metric.dim();
    // lowered(i,j) = g(nabla_{e_i} X, e_j)
    ScalarTable lowered(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ParamScalar s;
            for (int k = 0; k < n; ++k)
                if (!metric(k, j).is_zero())
                    s += nabla_x(i, k) * metric(k, j);
            lowered(i, j) = std::move(s);
        }
    ScalarTable out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = lowered(i, j) + lowered(j, i);
    return out;
}

ScalarTable lie_derivative_metric(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> x)
{
    if (static_cast<int>(x.size()) != m.dim)
        throw Error(ErrorKind::invalid_input, "vector field has " + std::to_string(x.size()) + " components, expected "
                                                  + std::to_string(m.dim));
    ScalarTable nabla_x(m.dim);
    for (int i = 0; i < m.dim; ++i) {
        FrameVector row = conn.nabla_field(i, x);
        for (int k = 0; k < m.dim; ++k)
            nabla_x(i, k) = std::move(row[k]);
    }
    return lie_derivative_from_nabla(m.metric, nabla_x);
}

Tensor<ParamScalar, 3> covariant_derivative_endo(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& q)
{
    const int n = m.dim;
    const auto& G = conn.gamma;
    Tensor<ParamScalar, 3> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                ParamScalar s;
                for (int k = 0; k < n; ++k) {
                    s += q(k, j) * G(i, k, l);  // nabla_{e_i}(Q e_j)
                    s -= G(i, j, k) * q(l, k);  // Q(nabla_{e_i} e_j)
                }
                out(i, j, l) = std::move(s);
            }
    return out;
}

KillingResult is_killing(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> x)
{
    KillingResult r;
    r.defect = lie_derivative_metric(m, conn, x);
    r.killing = is_zero(r.defect);
    return r;
}

FrameVector to_frame_vector(std::span<const Rational> v) { return FrameVector(v.begin(), v.end()); }

ScalarTable to_scalar_table(const Matrix<Rational>& a)
{
    ScalarTable out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            out(i, j) = a(i, j);
    return out;
}

bool is_zero(std::span<const ParamScalar> v)
{
    return std::all_of(v.begin(), v.end(), [](const ParamScalar& s) { return s.is_zero(); });
}

bool is_zero(const ScalarTable& t)
{
    return std::all_of(t.begin(), t.end(), [](const ParamScalar& s) { return s.is_zero(); });
}

std::string render_vector(std::span<const ParamScalar> v, std::string_view basis)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string e = std::string(basis) + std::to_string(k + 1);
        const ParamScalar& c = v[k];
        if (c == ParamScalar(1))
            out += e;
        else if (c == ParamScalar(-1))
            out += "-" + e;
        else if (c.is_constant())
            out += c.constant_term().str() + "*" + e;
        else
            out += "(" + c.str() + ")*" + e;
    }
    return out.empty() ? "0" : out;
}

std::string render_vector(std::span<const Rational> v, std::string_view basis)
{
    FrameVector tmp(v.begin(), v.end());
    return render_vector(std::span<const ParamScalar>(tmp), basis);
}

std::string render_table(const ScalarTable& t)
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < t.dim(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < t.dim(); ++j)
            os << (j ? ", " : "") << t(i, j).str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace sk
