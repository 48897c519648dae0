// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file audit.hpp
 * @brief Exact evaluation of the torsion/curvature identity catalog.
 *
 * Each check evaluates one or more equations lhs = rhs. Left sides come from
 * curvature traces, exterior derivatives or U(n) projections; right sides
 * from torsion expressions. A check passes iff every residual lhs - rhs is
 * identically zero (as polynomials when parameters are present).
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ahg/analysis.hpp"

namespace ahg {

class AuditError : public std::runtime_error {
public:
    AuditError(std::string id, const std::string& what)
        : std::runtime_error(id + ": " + what), id_(std::move(id)) {}
    [[nodiscard]] const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

struct Equation {
    std::string label;
    Matrix lhs;
    Matrix rhs;

    [[nodiscard]] Matrix residual() const { return lhs - rhs; }
    [[nodiscard]] bool holds() const;
};

struct IdentityCheck {
    std::string id;
    std::string statement;
    bool applicable = true;
    std::string skip_reason;
    std::vector<Equation> equations;
    bool passed = false;

    /// Labels of the equations with a nonzero residual.
    [[nodiscard]] std::vector<std::string> failures() const;
};

struct AuditReport {
    std::string structure;
    std::vector<IdentityCheck> checks;

    [[nodiscard]] int passed() const;
    [[nodiscard]] int failed() const;
    [[nodiscard]] int skipped() const;
    [[nodiscard]] bool ok() const { return failed() == 0; }
};

/// Stable identity ids in catalog order.
const std::vector<std::string>& identity_ids();

/// Throws std::out_of_range for an unknown id and AuditError if a lower
/// module fails while the identity is evaluated.
IdentityCheck run_identity(const Analysis& a, std::string_view id);

AuditReport run_suite(const Analysis& a);

}  // namespace ahg
