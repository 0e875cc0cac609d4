// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "solitonkit/frame.hpp"

namespace sk {

/// Almost-contact data in frame components. Column j of `phi` is phi(e_j);
/// `eta` holds eta(e_i).
struct AlmostContactData {
    Matrix<Rational> phi;
    RationalVector xi;
    RationalVector eta;

    /// eta = g(., xi).
    static AlmostContactData with_metric_dual(const FrameManifold& m, Matrix<Rational> phi, RationalVector xi);

    friend bool operator==(const AlmostContactData&, const AlmostContactData&) = default;
};

/// eta(xi)=1, phi^2 = -I + xi (x) eta, g(phi.,phi.) = g - eta (x) eta,
/// eta = g(., xi), phi xi = 0, eta o phi = 0.
CheckReport check_almost_contact(const FrameManifold& m, const AlmostContactData& d);

/// (nabla_{e_i} phi) e_j = g(e_i,e_j) xi - eta(e_j) e_i for every frame pair.
/// Reports a precondition violation when the almost-contact axioms fail.
CheckReport check_sasakian(const FrameManifold& m, const ConnectionTable& conn, const AlmostContactData& d);

/// [phi,phi](e_i,e_j) + 2 d eta(e_i,e_j) xi = 0, with d eta(X,Y) = -1/2 eta([X,Y]).
CheckReport check_normality(const FrameManifold& m, const AlmostContactData& d);

/// R(e_i, xi) e_j = eta(e_j) e_i - g(e_i, e_j) xi.
CheckReport check_curvature_identity(const FrameManifold& m, const CurvatureTensor& riem, const AlmostContactData& d);

/// Ric(xi, e_j) = 2n g(xi, e_j). Throws kind::domain unless dim = 2n+1.
CheckReport check_reeb_ricci(const FrameManifold& m, const ScalarTable& ric, const AlmostContactData& d, int n);

/// d eta(e_i, e_j) = g(e_i, phi e_j).
CheckReport check_contact_metric(const FrameManifold& m, const AlmostContactData& d);

/// d eta(e_i, e_j) = -1/2 eta([e_i, e_j]) for frame-constant eta.
Matrix<Rational> d_eta(const FrameManifold& m, const AlmostContactData& d);

/// The endomorphism X -> -nabla_X xi; column j is -nabla_{e_j} xi.
ScalarTable derive_phi(const FrameManifold& m, const ConnectionTable& conn, std::span<const Rational> xi);

}  // namespace sk
