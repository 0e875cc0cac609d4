// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "solitonkit/catalog.hpp"
#include "solitonkit/soliton.hpp"

#include <optional>

namespace sk {

// One report builder per CLI command. Expected values from the manifold file
// land in the ledger; they never feed the computation (except the explicit
// expected-Ricci option of solve_lambda).

CheckReport run_validate(const ManifoldSpec& spec, bool strict);
CheckReport run_connection(const ManifoldSpec& spec);
CheckReport run_curvature(const ManifoldSpec& spec);
CheckReport run_ricci(const ManifoldSpec& spec);
CheckReport run_check_contact(const ManifoldSpec& spec);
/// Sasakian identity, Reeb curvature identity and Reeb-Ricci identity; the
/// Ricci ledger is attached as waived.
CheckReport run_check_sasakian(const ManifoldSpec& spec);
CheckReport run_check_normality(const ManifoldSpec& spec);
CheckReport run_solve_lambda(const ManifoldSpec& spec, const FrameVector& field, SolitonKind kind,
                             bool use_expected_ricci);
CheckReport run_check_soliton(const ManifoldSpec& spec, const FrameVector& field, const ParamScalar& lambda,
                              SolitonKind kind);
CheckReport run_check_gradient(const ManifoldSpec& spec, const GradientData& gd, const ParamScalar& lambda,
                               SolitonKind kind);
/// `p`, when given, is substituted before classifying.
CheckReport run_theorem36(int dim, const std::optional<Rational>& p = std::nullopt);
/// Every check on the heisenberg5 fixture with the complete ledger.
CheckReport run_verify_paper_example();

}  // namespace sk
