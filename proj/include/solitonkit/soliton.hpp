// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "solitonkit/contact.hpp"
#include "solitonkit/frame.hpp"

#include <optional>
#include <string_view>

namespace sk {

/// Reserved symbol for lambda while it is being solved for.
inline constexpr std::string_view kLambdaSymbol = "lambda";
/// The conformal pressure.
inline constexpr std::string_view kPressureSymbol = "p";

enum class SolitonKind { ricci, almost_ricci, conformal, almost_conformal };

struct SolitonFlavor {
    SolitonKind kind = SolitonKind::ricci;
    bool gradient = false;
};

SolitonKind parse_soliton_kind(std::string_view name);
const char* to_string(SolitonKind kind);
bool is_conformal(SolitonKind kind);

/// Residual of the vector-field soliton equation
///   L_X g + 2 Ric - s g,   s = 2 lambda               (ricci flavors)
///                          s = 2 lambda - (p + 2/m)   (conformal flavors)
/// The equation holds iff the returned table is zero.
ScalarTable soliton_residual(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& ric,
                             std::span<const ParamScalar> x, const ParamScalar& lambda, SolitonKind kind);

enum class ResidualStatus { einstein_exact, trace_only };

const char* to_string(ResidualStatus status);

struct LambdaSolution {
    ParamScalar lambda;
    ResidualStatus status = ResidualStatus::trace_only;
    ScalarTable residual;       // full residual at the solved lambda
    LinearForm trace_equation;  // g-trace of the residual, linear in lambda
};

/// Traces the soliton equation with g^-1, solves for lambda and re-evaluates
/// the full residual at the solution.
LambdaSolution solve_lambda_trace(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& ric,
                                  std::span<const ParamScalar> x, SolitonKind kind);

/// `coefficient*lambda + remainder = 0` rendered with the unknown spelled out.
std::string render_equation(const LinearForm& eq);

enum class Verdict { shrinking, steady, expanding, conditional };

const char* to_string(Verdict verdict);

/// Sign classification of lambda. For lambda = a*p + b (a != 0) the verdict is
/// conditional: shrinking iff a*(p - threshold) > 0, steady at the threshold.
struct Classification {
    Verdict verdict = Verdict::steady;
    std::optional<std::string> parameter;
    std::optional<Rational> threshold;
    int direction = 0;  // +1: shrinking above threshold, -1: below
    std::string condition;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Throws kind::unsupported for degree >= 2 or more than one parameter.
Classification classify(const ParamScalar& lambda);

/// Frame derivatives of the potential f and (optionally) of lambda.
struct GradientData {
    FrameVector df;
    std::optional<FrameVector> dlambda;
};

struct IntegrabilityDefect {
    int i = 0;
    int j = 0;
    ParamScalar defect;  // df([e_i, e_j])
};

/// Pairs i<j with df([e_i,e_j]) != 0.
std::vector<IntegrabilityDefect> integrability_defects(const FrameManifold& m, const GradientData& gd);

/// -sum_k gamma(i,j,k) df[k], without checking integrability.
ScalarTable raw_hessian(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> df);

/// Hessian of f. Throws kind::invalid_input carrying the first
/// integrability defect when df is not closed.
ScalarTable hessian(const FrameManifold& m, const ConnectionTable& conn, const GradientData& gd);

/// Hess f + Ric - s' g with s' = lambda (ricci flavors) or
/// s' = lambda - (p/2 + 1/m) (conformal flavors).
ScalarTable gradient_soliton_residual(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& ric,
                                      const GradientData& gd, const ParamScalar& lambda, SolitonKind kind);

/// R(X,Y)Df = (X lambda)Y - (Y lambda)X - (nabla_X Q)Y + (nabla_Y Q)X on all
/// frame pairs. The gradient soliton equation at (lambda, kind) is checked
/// first; if it fails the report carries a precondition violation with the
/// residual. Requires gd.dlambda.
CheckReport lemma32_check(const FrameManifold& m, const ConnectionTable& conn, const CurvatureTensor& riem,
                          const RicciTensor& ric, const GradientData& gd, const ParamScalar& lambda, SolitonKind kind);

/// g(Df, Y) = Y(p/2 - lambda) for frame vectors Y with eta(Y) = 0, p
/// spatially constant. With lambda supplied and lambda = p/2, dlambda = 0,
/// also asserts df vanishes on that distribution. Reports the proof
/// constant k = -2/m - 2(m-1) as a value.
CheckReport theorem31_check(const FrameManifold& m, const AlmostContactData& d, const GradientData& gd,
                            const std::optional<ParamScalar>& lambda = std::nullopt);

/// d(lambda + f) = 0 componentwise; with dlambda = 0 also asserts df = 0.
CheckReport theorem34_check(const GradientData& gd);

/// nabla_{e_i} V = e_i for all i; on success also L_V g = 2g.
CheckReport concurrent_check(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> v);

/// L_V g evaluated after substituting nabla_{e_i} V := e_i.
ScalarTable concurrent_lie_derivative(const Matrix<Rational>& metric);

struct Theorem36Result {
    int dim = 0;
    ParamScalar einstein_constant;
    ParamScalar lambda;
    LinearForm lambda_equation;
    Classification classification;
};

/// Concurrent potential field on a Sasakian manifold of odd dimension m:
/// Einstein with constant (lambda - 1) - (p/2 + 1/m) = 2n, hence
/// lambda = m + p/2 + 1/m. Throws kind::domain for even or m < 3 and
/// kind::precondition without the concurrency assumption.
Theorem36Result theorem36_derive(int m, bool assume_concurrent = true);

}  // namespace sk
