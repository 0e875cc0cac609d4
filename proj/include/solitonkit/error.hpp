// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sk {

enum class ErrorKind {
    parse,           // malformed text input
    domain,          // mathematically undefined request (zero division, bad dimension)
    invalid_input,   // well-formed but rejected input (invalid manifold, wrong lengths)
    unknown_name,    // unknown builtin / flavor / parameter
    inconsistent,    // linear solve: 0*x + r = 0 with r != 0
    underdetermined, // linear solve: 0*x + 0 = 0
    unsupported,     // outside the supported fragment (e.g. nonlinear lambda)
    precondition,    // operation hypothesis does not hold
    io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sk
