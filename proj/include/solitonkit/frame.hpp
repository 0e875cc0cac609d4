// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "solitonkit/param_scalar.hpp"
#include "solitonkit/rational.hpp"
#include "solitonkit/report.hpp"
#include "solitonkit/tensor.hpp"

#include <span>
#include <string>
#include <vector>

namespace sk {

/// Components of a frame-constant vector field in the frame e_1..e_m.
using FrameVector = std::vector<ParamScalar>;
using RationalVector = std::vector<Rational>;
using ScalarTable = Matrix<ParamScalar>;

/// A manifold presented by a global frame with constant structure constants
/// `[e_i, e_j] = sum_k c(i,j,k) e_k` and a constant frame metric `g(i,j)`.
struct FrameManifold {
    std::string name;
    int dim = 0;
    Tensor<Rational, 3> structure;
    Matrix<Rational> metric;
    /// Declared parameters; `p` is declared by default.
    std::vector<std::string> params{"p"};

    /// Zero brackets and identity metric.
    static FrameManifold flat(std::string name, int dim);

    [[nodiscard]] const Rational& c(int i, int j, int k) const { return structure(i, j, k); }
    /// Sets c(i,j,.) = value and c(j,i,.) = -value.
    void set_bracket(int i, int j, const RationalVector& value);
    [[nodiscard]] bool declares(std::string_view param) const;

    friend bool operator==(const FrameManifold&, const FrameManifold&) = default;
};

/// Bilinear extension of the frame bracket.
RationalVector bracket(const FrameManifold& m, std::span<const Rational> x, std::span<const Rational> y);

Rational determinant(const Matrix<Rational>& a);
Matrix<Rational> adjugate(const Matrix<Rational>& a);
/// Exact inverse via adjugate / determinant. Throws kind::domain if singular.
Matrix<Rational> inverse(const Matrix<Rational>& a);

/// Every violated presentation invariant, with indices (1-based).
/// Strict mode also checks the Jacobi identity on all triples i<j<k.
CheckReport validate(const FrameManifold& m, bool strict = false);

/// Levi-Civita connection: `nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k`.
struct ConnectionTable {
    Tensor<ParamScalar, 3> gamma;

    [[nodiscard]] FrameVector nabla(int i, int j) const;
    /// Components of nabla_{e_i} X.
    [[nodiscard]] FrameVector nabla_field(int i, std::span<const ParamScalar> x) const;
};

/// `riem(i,j,k,l)` is the e_l component of R(e_i,e_j)e_k, with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
struct CurvatureTensor {
    Tensor<ParamScalar, 4> riem;

    [[nodiscard]] FrameVector apply(int i, int j, int k) const;
    /// R(e_a,e_b,e_c,e_d) = g(R(e_a,e_b)e_c, e_d).
    [[nodiscard]] ParamScalar lowered(const FrameManifold& m, int a, int b, int c, int d) const;
};

/// Ricci tensor and the Ricci operator Q with g(Q e_i, e_j) = ric(i,j);
/// column j of `q` is Q e_j.
struct RicciTensor {
    ScalarTable ric;
    ScalarTable q;
};

/// Throws kind::invalid_input when the manifold fails non-strict validation.
ConnectionTable levi_civita(const FrameManifold& m);
CurvatureTensor curvature(const FrameManifold& m, const ConnectionTable& conn);
/// ric(Y,Z) = trace(X -> R(X,Y)Z).
RicciTensor ricci(const FrameManifold& m, const CurvatureTensor& riem);
/// Ricci operator for an arbitrary (e.g. injected) Ricci table.
ScalarTable ricci_operator(const FrameManifold& m, const ScalarTable& ric);
ParamScalar scalar_curvature(const FrameManifold& m, const ScalarTable& ric);
/// sum_ij g^{ij} t(i,j).
ParamScalar metric_trace(const FrameManifold& m, const ScalarTable& t);

/// (L_X g)(i,j) = g(nabla_{e_i} X, e_j) + g(e_i, nabla_{e_j} X).
ScalarTable lie_derivative_metric(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> x);
/// Same formula from a supplied covariant derivative: row i of `nabla_x`
/// holds the components of nabla_{e_i} X.
ScalarTable lie_derivative_from_nabla(const Matrix<Rational>& metric, const ScalarTable& nabla_x);

/// `(i,j,l)`: e_l component of (nabla_{e_i} Q) e_j for a frame-constant
/// endomorphism whose column j is Q e_j.
Tensor<ParamScalar, 3> covariant_derivative_endo(const FrameManifold& m, const ConnectionTable& conn, const ScalarTable& q);

struct KillingResult {
    bool killing = false;
    ScalarTable defect;  // L_X g
};

KillingResult is_killing(const FrameManifold& m, const ConnectionTable& conn, std::span<const ParamScalar> x);

FrameVector to_frame_vector(std::span<const Rational> v);
ScalarTable to_scalar_table(const Matrix<Rational>& a);
bool is_zero(std::span<const ParamScalar> v);
bool is_zero(const ScalarTable& t);

/// `2*e1 + -1/2*e3`, `0` for the zero vector.
std::string render_vector(std::span<const ParamScalar> v, std::string_view basis = "e");
std::string render_vector(std::span<const Rational> v, std::string_view basis = "e");
/// `[[a, b], [c, d]]`.
std::string render_table(const ScalarTable& t);

}  // namespace sk
