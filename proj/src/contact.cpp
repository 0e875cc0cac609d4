// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/contact.hpp"

#include "solitonkit/error.hpp"

namespace sk {

// Defects of two-sided identities are reported as (right side - left side);
// obstruction tensors (Nijenhuis sum) are reported as computed.

namespace {

void require_dims(const FrameManifold& m, const AlmostContactData& d)
{
    const auto n = static_cast<std::size_t>(m.dim);
    if (d.phi.dim() != m.dim || d.xi.size() != n || d.eta.size() != n)
        throw Error(ErrorKind::invalid_input, "contact data dimensions do not match manifold '" + m.name + "'");
}

RationalVector act(const Matrix<Rational>& a, std::span<const Rational> v)
{
    RationalVector out(a.dim());
    for (int k = 0; k < a.dim(); ++k)
        for (int j = 0; j < a.dim(); ++j)
            out[k] += a(k, j) * v[j];
    return out;
}

RationalVector unit(int n, int i)
{
    RationalVector e(n);
    e[i] = Rational(1);
    return e;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational inner(const FrameManifold& m, std::span<const Rational> x, std::span<const Rational> y)
{
    Rational s;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            s += x[i] * m.metric(i, j) * y[j];
    return s;
}

bool nonzero(std::span<const Rational> v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return true;
    return false;
}

std::string pair_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

void append(std::string& acc, const std::string& part) { acc += (acc.empty() ? "" : "; ") + part; }

std::optional<std::string> opt(const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); }

std::string render_matrix(const Matrix<Rational>& a) { return render_table(to_scalar_table(a)); }

/// Reports a precondition violation naming every failing almost-contact axiom,
/// or nullopt when all hold.
std::optional<CheckItem> contact_precondition(const FrameManifold& m, const AlmostContactData& d, const std::string& name)
{
    CheckReport base = check_almost_contact(m, d);
    if (base.all_pass())
        return std::nullopt;
    std::string failing;
    for (const auto& item : base.items)
        if (item.status != Status::pass)
            append(failing, item.name);
    return CheckItem{name, Status::precondition_violated, "almost-contact axioms fail: " + failing};
}

}  // namespace

AlmostContactData AlmostContactData::with_metric_dual(const FrameManifold& m, Matrix<Rational> phi, RationalVector xi)
{
    AlmostContactData d{std::move(phi), std::move(xi), RationalVector(m.dim)};
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            d.eta[i] += m.metric(i, j) * d.xi[j];
    return d;
}

CheckReport check_almost_contact(const FrameManifold& m, const AlmostContactData& d)
{
    require_dims(m, d);
    const int n = m.dim;
    CheckReport r("almost-contact structure on " + m.name);

    Rational eta_xi = dot(d.eta, d.xi);
    r.check("eta(xi) = 1", eta_xi == Rational(1), "eta(xi) = " + eta_xi.str());

    std::string bad;
    for (int i = 0; i < n; ++i) {
        Rational g_xi = inner(m, unit(n, i), d.xi);
        if (g_xi != d.eta[i])
            append(bad, "eta(e" + std::to_string(i + 1) + ") = " + d.eta[i].str() + " but g(e" + std::to_string(i + 1)
                            + ",xi) = " + g_xi.str());
    }
    r.check("eta = g(., xi)", bad.empty(), opt(bad));

    Matrix<Rational> defect(n);
    bool ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational phi2;
            for (int k = 0; k < n; ++k)
                phi2 += d.phi(i, k) * d.phi(k, j);
            Rational rhs = (i == j ? Rational(-1) : Rational(0)) + d.xi[i] * d.eta[j];
            defect(i, j) = rhs - phi2;
            ok = ok && defect(i, j).is_zero();
        }
    r.check("phi^2 = -I + xi (x) eta", ok, render_matrix(defect));

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalVector pi = act(d.phi, unit(n, i));
            RationalVector pj = act(d.phi, unit(n, j));
            Rational rhs = m.metric(i, j) - d.eta[i] * d.eta[j];
            defect(i, j) = rhs - inner(m, pi, pj);
            ok = ok && defect(i, j).is_zero();
        }
    r.check("g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)", ok, render_matrix(defect));

    RationalVector phi_xi = act(d.phi, d.xi);
    r.check("phi xi = 0", !nonzero(phi_xi), render_vector(phi_xi));

    RationalVector eta_phi(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            eta_phi[j] += d.eta[k] * d.phi(k, j);
    r.check("eta o phi = 0", !nonzero(eta_phi), render_vector(eta_phi, "eta"));
    return r;
}

CheckReport check_sasakian(const FrameManifold& m, const ConnectionTable& conn, const AlmostContactData& d)
{
    require_dims(m, d);
    const std::string name = "(nabla_X phi)Y = g(X,Y) xi - eta(Y) X";
    CheckReport r("sasakian condition on " + m.name);
    if (auto pre = contact_precondition(m, d, name)) {
        r.add(*pre);
        return r;
    }
    const int n = m.dim;
    auto dphi = covariant_derivative_endo(m, conn, to_scalar_table(d.phi));
    std::string bad;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FrameVector diff(n);
            for (int l = 0; l < n; ++l) {
                ParamScalar rhs = ParamScalar(m.metric(i, j) * d.xi[l] - (l == i ? d.eta[j] : Rational(0)));
                diff[l] = rhs - dphi(i, j, l);
            }
            if (!is_zero(diff))
                append(bad, pair_label(i, j) + ": " + render_vector(diff));
        }
    r.check(name, bad.empty(), opt(bad));
    return r;
}

Matrix<Rational> d_eta(const FrameManifold& m, const AlmostContactData& d)
{
    const int n = m.dim;
    Matrix<Rational> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s;
            for (int k = 0; k < n; ++k)
                s += d.eta[k] * m.c(i, j, k);
            out(i, j) = -s / Rational(2);
        }
    return out;
}

CheckReport check_normality(const FrameManifold& m, const AlmostContactData& d)
{
    require_dims(m, d);
    const std::string name = "[phi,phi] + 2 d eta (x) xi = 0";
    CheckReport r("normality of " + m.name);
    if (auto pre = contact_precondition(m, d, name)) {
        r.add(*pre);
        return r;
    }
    const int n = m.dim;
    const Matrix<Rational> deta = d_eta(m, d);
    std::string bad;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RationalVector ei = unit(n, i), ej = unit(n, j);
            RationalVector pei = act(d.phi, ei), pej = act(d.phi, ej);
            RationalVector t1 = act(d.phi, act(d.phi, bracket(m, ei, ej)));
            RationalVector t2 = bracket(m, pei, pej);
            RationalVector t3 = act(d.phi, bracket(m, pei, ej));
            RationalVector t4 = act(d.phi, bracket(m, ei, pej));
            RationalVector sum(n);
            for (int k = 0; k < n; ++k)
                sum[k] = t1[k] + t2[k] - t3[k] - t4[k] + Rational(2) * deta(i, j) * d.xi[k];
            if (nonzero(sum))
                append(bad, pair_label(i, j) + ": " + render_vector(sum));
        }
    r.check(name, bad.empty(), opt(bad));
    return r;
}

CheckReport check_curvature_identity(const FrameManifold& m, const CurvatureTensor& riem, const AlmostContactData& d)
{
    require_dims(m, d);
    const int n = m.dim;
    CheckReport r("Reeb curvature identity on " + m.name);
    std::string bad;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FrameVector diff(n);
            for (int l = 0; l < n; ++l) {
                // R(e_i, xi) e_j, expanded linearly in xi
                ParamScalar lhs;
                for (int a = 0; a < n; ++a)
                    if (!d.xi[a].is_zero())
                        lhs += riem.riem(i, a, j, l) * d.xi[a];
                ParamScalar rhs = ParamScalar((l == i ? d.eta[j] : Rational(0)) - m.metric(i, j) * d.xi[l]);
                diff[l] = rhs - lhs;
            }
            if (!is_zero(diff))
                append(bad, pair_label(i, j) + ": " + render_vector(diff));
        }
    r.check("R(Y,xi)Z = eta(Z)Y - g(Y,Z)xi", bad.empty(), opt(bad));
    return r;
}

CheckReport check_reeb_ricci(const FrameManifold& m, const ScalarTable& ric, const AlmostContactData& d, int n)
{
    require_dims(m, d);
    if (m.dim != 2 * n + 1)
        throw Error(ErrorKind::domain, "Reeb-Ricci identity needs dim = 2n+1; got dim " + std::to_string(m.dim)
                                           + " with n = " + std::to_string(n));
    CheckReport r("Reeb-Ricci identity on " + m.name);
    std::string bad;
    for (int j = 0; j < m.dim; ++j) {
        ParamScalar lhs;
        for (int a = 0; a < m.dim; ++a)
            if (!d.xi[a].is_zero())
                lhs += ric(a, j) * d.xi[a];
        Rational rhs = Rational(2 * n) * inner(m, d.xi, unit(m.dim, j));
        ParamScalar diff = ParamScalar(rhs) - lhs;
        if (!diff.is_zero())
            append(bad, "e" + std::to_string(j + 1) + ": Ric(xi,e" + std::to_string(j + 1) + ") = " + lhs.str()
                            + ", expected " + rhs.str());
    }
    r.check("Ric(xi,Z) = " + std::to_string(2 * n) + " g(xi,Z)", bad.empty(), opt(bad));
    return r;
}

CheckReport check_contact_metric(const FrameManifold& m, const AlmostContactData& d)
{
    require_dims(m, d);
    const int n = m.dim;
    const Matrix<Rational> deta = d_eta(m, d);
    CheckReport r("contact metric compatibility on " + m.name);
    std::string bad;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational rhs = inner(m, unit(n, i), act(d.phi, unit(n, j)));
            if (rhs != deta(i, j))
                append(bad, pair_label(i, j) + ": " + (rhs - deta(i, j)).str());
        }
    r.check("d eta(X,Y) = g(X, phi Y)", bad.empty(), opt(bad));
    return r;
}

ScalarTable derive_phi(const FrameManifold& m, const ConnectionTable& conn, std::span<const Rational> xi)
{
    if (static_cast<int>(xi.size()) != m.dim)
        throw Error(ErrorKind::invalid_input, "xi has the wrong number of components");
    const FrameVector x = to_frame_vector(xi);
    ScalarTable phi(m.dim);
    for (int j = 0; j < m.dim; ++j) {
        FrameVector col = conn.nabla_field(j, x);
        for (int k = 0; k < m.dim; ++k)
            phi(k, j) = -col[k];
    }
    return phi;
}

}  // namespace sk
