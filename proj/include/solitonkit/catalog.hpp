// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "solitonkit/contact.hpp"
#include "solitonkit/frame.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sk {

struct ExpectedRicci {
    int i = 0;
    int j = 0;
    Rational value;
    std::string source;
    friend bool operator==(const ExpectedRicci&, const ExpectedRicci&) = default;
};

struct ExpectedLambda {
    ParamScalar value;
    std::string source;
    friend bool operator==(const ExpectedLambda&, const ExpectedLambda&) = default;
};

struct ExpectedNabla {
    int i = 0;
    int j = 0;
    RationalVector value;
    std::string source;
    friend bool operator==(const ExpectedNabla&, const ExpectedNabla&) = default;
};

struct ExpectedRiem {
    int i = 0;
    int j = 0;
    int k = 0;
    RationalVector value;
    std::string source;
    friend bool operator==(const ExpectedRiem&, const ExpectedRiem&) = default;
};

/// Published or hand-derived values; they only ever populate ledgers.
struct Expectations {
    std::vector<ExpectedNabla> nabla;
    std::vector<ExpectedRiem> riem;
    std::vector<ExpectedRicci> ricci;
    std::optional<ExpectedLambda> lambda;

    [[nodiscard]] bool empty() const { return nabla.empty() && riem.empty() && ricci.empty() && !lambda; }
    friend bool operator==(const Expectations&, const Expectations&) = default;
};

/// A parsed manifold definition file.
struct ManifoldSpec {
    FrameManifold manifold;
    std::optional<AlmostContactData> contact;
    Expectations expected;

    /// Ricci table built from the `expect ricci` entries (unlisted entries
    /// zero, symmetric closure). Throws kind::invalid_input if there are none.
    [[nodiscard]] ScalarTable expected_ricci_table() const;

    friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;
};

/// Parses the line-based manifold format. Errors carry "line L, column C".
///
///   manifold <ident> dim <int>
///   param <ident>
///   bracket e<i> e<j> = <vector-expr>
///   metric identity | metric g <i> <j> = <rational>
///   contact xi = <vector-expr>
///   contact eta = <vector-expr>            (default: g(., xi))
///   contact phi e<i> = <vector-expr> | 0
///   expect ricci <i> <j> = <rational> source "<text>"
///   expect lambda = <expr> source "<text>"
///   expect nabla e<i> e<j> = <vector-expr> source "<text>"
///   expect riem e<i> e<j> e<k> = <vector-expr> source "<text>"
ManifoldSpec parse_manifold(std::string_view text);

/// Canonical text that parses back to an identical ManifoldSpec.
std::string serialize_manifold(const ManifoldSpec& spec);

std::vector<std::string> builtin_names();
/// Throws kind::unknown_name listing the available fixtures.
ManifoldSpec builtin(std::string_view name);
/// Source text of a builtin fixture.
std::string_view builtin_text(std::string_view name);

/// Reads and parses a file. Throws kind::io when unreadable.
ManifoldSpec load_manifold_file(const std::string& path);

/// Parses "a1,...,am" into rationals / parameter expressions.
RationalVector parse_rational_list(std::string_view text);
FrameVector parse_scalar_list(std::string_view text);

}  // namespace sk
