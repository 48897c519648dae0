// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Structure files and analysis reports.
 *
 * Structure files are JSON objects with 1-based indices:
 *
 *   {
 *     "name": "example",
 *     "dimension": 4,
 *     "parameters": ["q"],
 *     "sqrt_extension": 0,
 *     "brackets": [{"i": 1, "j": 4, "coeffs": {"1": "-1"}}],
 *     "metric": "identity",
 *     "kaehler_form": [{"i": 3, "j": 1, "c": "1"}],
 *     "complex_volume": {"psi_plus": [{"idx": [1, 2], "c": "1"}]}
 *   }
 *
 * Scalars are literals in the grammar of parse_scalar. Reports hold every
 * value as such a literal, so they round-trip through JSON unchanged.
 */

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ahg/analysis.hpp"
#include "ahg/audit.hpp"
#include "ahg/structure.hpp"

namespace ahg {

/// Syntax errors carry "line L, column C"; semantic errors a JSON pointer.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::string location, const std::string& what)
        : std::runtime_error(source + ":" + location + ": " + what),
          source_(std::move(source)),
          location_(std::move(location)) {}

    [[nodiscard]] const std::string& source() const noexcept { return source_; }
    [[nodiscard]] const std::string& location() const noexcept { return location_; }

private:
    std::string source_;
    std::string location_;
};

StructureInput parse_structure(std::string_view text, std::string_view source = "<input>");
StructureInput load_structure(const std::filesystem::path& path);

nlohmann::ordered_json structure_to_json(const StructureInput& in);

/// The structure re-expressed in its orthonormal frame (metric dropped).
StructureInput orthonormal_input(const AlmostHermitianStructure& s);

/// Basis label -> coefficient literal, in lexicographic basis order.
using FormTerms = std::vector<std::pair<std::string, std::string>>;
using MatrixText = std::vector<std::vector<std::string>>;

struct RicciFormsText {
    std::string connection;
    FormTerms rho;
    FormTerms r;
    FormTerms chern_class;  ///< -r; divide by 2 pi for c_1

    friend bool operator==(const RicciFormsText&, const RicciFormsText&) = default;
};

struct Report {
    std::string name;
    int dimension = 0;
    std::vector<std::string> parameters;
    long sqrt_extension = 0;

    std::string classification;
    std::string modules;
    std::vector<std::string> specializations;

    FormTerms theta;
    FormTerms dtheta;
    FormTerms dtheta_r_omega;
    FormTerms dtheta_lambda0_11;
    FormTerms dtheta_lambda20;
    std::string dstar_theta;
    std::array<std::string, 4> xi_norms;

    std::string s;
    std::string s_star;
    std::string s_minus_s_star;
    std::string s_plus_3s_star;

    MatrixText ric;
    MatrixText ric_star;
    MatrixText ric_minus_ric_star_trace;
    MatrixText ric_minus_ric_star_lambda0_11;
    MatrixText ric_minus_ric_star_sigma20;
    MatrixText ric_minus_ric_star_lambda11_skew;
    MatrixText ric_minus_ric_star_lambda20;
    MatrixText ric_star_lambda20;
    MatrixText ric_sigma20;
    MatrixText ric_plus_3ric_star_11;

    std::vector<RicciFormsText> ricci_forms;

    struct SU {
        FormTerms psi_plus;
        FormTerms psi_minus;
        FormTerms eta;
        FormTerms eta_hat;
        std::string w1_plus;  ///< empty unless n = 3

        friend bool operator==(const SU&, const SU&) = default;
    };
    std::optional<SU> su;
    std::string su_note;

    struct Audit {
        int passed = 0;
        int failed = 0;
        int skipped = 0;
        std::vector<std::string> failures;  ///< "id: equation label"
        std::vector<std::string> skips;     ///< "id: reason"

        friend bool operator==(const Audit&, const Audit&) = default;
    };
    Audit audit;

    friend bool operator==(const Report&, const Report&) = default;
};

/// e.g. "14" for e^{14}; indices are comma separated once dim > 9.
std::string basis_label(int dim, std::span<const int> idx);
FormTerms form_terms(const ScalarForm& a, const ScalarContext& ctx);
/// "-(1/2)*r e^5", "0" for the zero form.
std::string form_text(const FormTerms& terms, const ScalarContext& ctx);

Report make_report(const Analysis& a, const AuditReport& audit);

nlohmann::ordered_json report_to_json(const Report& r);
/// Throws ParseError on a malformed report.
Report report_from_json(const nlohmann::ordered_json& j);
std::string report_text(const Report& r);

}  // namespace ahg
