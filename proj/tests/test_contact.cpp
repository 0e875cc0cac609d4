// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "helpers.hpp"

#include "solitonkit/error.hpp"

using namespace sk;
using namespace testing;

namespace {

Matrix<Rational> phi_from(int n, std::initializer_list<std::tuple<int, int, int>> images)
{
    // (j, k, c): phi(e_j) has e_k component c; 1-based j, k
    Matrix<Rational> phi(n);
    for (auto [j, k, c] : images)
        phi(k - 1, j - 1) = Rational(c);
    return phi;
}

AlmostContactData h5_data(const FrameManifold& m)
{
    return AlmostContactData::with_metric_dual(m, phi_from(5, {{1, 2, 1}, {2, 1, -1}, {4, 5, 1}, {5, 4, -1}}), unit(5, 2));
}

const CheckItem& item(const CheckReport& r, std::string_view name)
{
    const CheckItem* it = r.find(name);
    REQUIRE_MESSAGE(it != nullptr, name);
    return *it;
}

std::vector<ManifoldSpec> sasakian_fixtures() { return {builtin("heisenberg5"), builtin("heisenberg3")}; }

}  // namespace

TEST_CASE("almost-contact axioms")
{
    const FrameManifold h = builtin("heisenberg5").manifold;
    CHECK(check_almost_contact(h, h5_data(h)).all_pass());
    CHECK(*builtin("heisenberg5").contact == h5_data(h));

    AlmostContactData zero = AlmostContactData::with_metric_dual(h, Matrix<Rational>(5), unit(5, 2));
    const CheckReport zr = check_almost_contact(h, zero);
    const CheckItem& sq = item(zr, "phi^2 = -I + xi (x) eta");
    CHECK(sq.status == Status::fail);
    // -I + xi (x) eta with xi = eta = e3
    CHECK(sq.defect == std::optional<std::string>("[[-1, 0, 0, 0, 0], [0, -1, 0, 0, 0], [0, 0, 0, 0, 0], "
                                                  "[0, 0, 0, -1, 0], [0, 0, 0, 0, -1]]"));

    AlmostContactData variant = h5_data(h);
    variant.xi = unit(5, 4);
    const CheckReport vr = check_almost_contact(h, variant);
    CHECK(item(vr, "eta(xi) = 1").status == Status::fail);
}

TEST_CASE("Sasakian condition")
{
    const FrameManifold h = builtin("heisenberg5").manifold;
    CHECK(check_sasakian(h, levi_civita(h), h5_data(h)).all_pass());

    const ManifoldSpec h3 = builtin("heisenberg3");
    CHECK(check_sasakian(h3.manifold, levi_civita(h3.manifold), *h3.contact).all_pass());

    const ManifoldSpec a3 = builtin("abelian3");
    CheckReport flat = check_sasakian(a3.manifold, levi_civita(a3.manifold), *a3.contact);
    CHECK(flat.items.at(0).status == Status::fail);
    CHECK(flat.items.at(0).defect.value_or("").find("(1,1)") != std::string::npos);

    AlmostContactData broken = h5_data(h);
    broken.xi = unit(5, 4);
    CheckReport pre = check_sasakian(h, levi_civita(h), broken);
    CHECK(pre.items.at(0).status == Status::precondition_violated);
}

TEST_CASE("normality")
{
    const FrameManifold h = builtin("heisenberg5").manifold;
    CHECK(check_normality(h, h5_data(h)).all_pass());

    const ManifoldSpec a3 = builtin("abelian3");
    CHECK(check_normality(a3.manifold, *a3.contact).all_pass());

    // Flipping the sign on the (e4,e5) block still gives a normal structure.
    AlmostContactData flipped =
        AlmostContactData::with_metric_dual(h, phi_from(5, {{1, 2, 1}, {2, 1, -1}, {4, 5, -1}, {5, 4, 1}}), unit(5, 2));
    CHECK(check_normality(h, flipped).all_pass());

    // Mixing the two planes breaks it on (1,2).
    AlmostContactData mixed =
        AlmostContactData::with_metric_dual(h, phi_from(5, {{1, 4, 1}, {4, 1, -1}, {2, 5, -1}, {5, 2, 1}}), unit(5, 2));
    REQUIRE(check_almost_contact(h, mixed).all_pass());
    CheckReport r = check_normality(h, mixed);
    CHECK(r.items.at(0).status == Status::fail);
    CHECK(r.items.at(0).defect.value_or("").rfind("(1,2): -4*e3", 0) == 0);
}

TEST_CASE("curvature identity along xi")
{
    const FrameManifold h = builtin("heisenberg5").manifold;
    const CurvatureTensor riem = curvature(h, levi_civita(h));
    CHECK(riem.apply(0, 2, 2) == to_frame_vector(unit(5, 0)));
    CHECK(check_curvature_identity(h, riem, h5_data(h)).all_pass());

    const ManifoldSpec h3 = builtin("heisenberg3");
    CHECK(check_curvature_identity(h3.manifold, curvature(h3.manifold, levi_civita(h3.manifold)), *h3.contact).all_pass());

    const ManifoldSpec a3 = builtin("abelian3");
    CHECK_FALSE(check_curvature_identity(a3.manifold, curvature(a3.manifold, levi_civita(a3.manifold)), *a3.contact)
                    .all_pass());
}

TEST_CASE("Ricci along the Reeb field")
{
    const FrameManifold h = builtin("heisenberg5").manifold;
    const ScalarTable ric = ricci(h, curvature(h, levi_civita(h))).ric;
    CheckReport r = check_reeb_ricci(h, ric, h5_data(h), 2);
    CHECK(r.all_pass());
    CHECK(r.items.at(0).name == "Ric(xi,Z) = 4 g(xi,Z)");
    CHECK_THROWS_AS(check_reeb_ricci(h, ric, h5_data(h), 1), Error);

    const ManifoldSpec h3 = builtin("heisenberg3");
    CHECK(check_reeb_ricci(h3.manifold, ricci(h3.manifold, curvature(h3.manifold, levi_civita(h3.manifold))).ric,
                           *h3.contact, 1)
              .all_pass());

    const ManifoldSpec a3 = builtin("abelian3");
    CheckReport flat = check_reeb_ricci(a3.manifold, ScalarTable(3), *a3.contact, 1);
    CHECK_FALSE(flat.all_pass());
    CHECK(flat.items.at(0).defect.value_or("").find("expected 2") != std::string::npos);
}

TEST_CASE("phi from the Reeb field")
{
    const FrameManifold h = builtin("heisenberg5").manifold;
    CHECK(derive_phi(h, levi_civita(h), unit(5, 2)) == to_scalar_table(h5_data(h).phi));

    const ManifoldSpec h3 = builtin("heisenberg3");
    CHECK(derive_phi(h3.manifold, levi_civita(h3.manifold), unit(3, 2)) == to_scalar_table(h3.contact->phi));

    const FrameManifold a = builtin("abelian5").manifold;
    CHECK(is_zero(derive_phi(a, levi_civita(a), unit(5, 2))));
}

TEST_CASE("phi cubed is minus phi")
{
    for (const auto& name : builtin_names()) {
        const ManifoldSpec s = builtin(name);
        if (!s.contact || !check_almost_contact(s.manifold, *s.contact).all_pass())
            continue;
        CAPTURE(name);
        const Matrix<Rational>& phi = s.contact->phi;
        const int n = s.manifold.dim;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational cube;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        cube += phi(i, a) * phi(a, b) * phi(b, j);
                CHECK(cube == -phi(i, j));
            }
    }
}

TEST_CASE("Sasakian implies the curvature consequences")
{
    for (const auto& s : sasakian_fixtures()) {
        CAPTURE(s.manifold.name);
        const FrameManifold& m = s.manifold;
        const ConnectionTable conn = levi_civita(m);
        REQUIRE(check_sasakian(m, conn, *s.contact).all_pass());
        const CurvatureTensor riem = curvature(m, conn);
        CHECK(check_curvature_identity(m, riem, *s.contact).all_pass());
        CHECK(check_reeb_ricci(m, ricci(m, riem).ric, *s.contact, (m.dim - 1) / 2).all_pass());
        CHECK(check_contact_metric(m, *s.contact).all_pass());
        CHECK(is_killing(m, conn, to_frame_vector(s.contact->xi)).killing);

        const Matrix<Rational> deta = d_eta(m, *s.contact);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                Rational g_phi;
                for (int k = 0; k < m.dim; ++k)
                    g_phi += m.metric(i, k) * s.contact->phi(k, j);
                CHECK(deta(i, j) == g_phi);
            }
    }
}
