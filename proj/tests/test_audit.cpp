// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "catch2/catch_amalgamated.hpp"

#include "ahg/audit.hpp"
#include "support.hpp"

using namespace ahg;
using ahg::test::catalog_analysis;

namespace {

std::set<std::string> failing(const AuditReport& r) {
    std::set<std::string> out;
    for (const auto& c : r.checks)
        if (c.applicable && !c.passed) out.insert(c.id);
    return out;
}

// Identities whose residual does not vanish on the catalog; see the
// residual fits in the audit documentation.
const std::set<std::string> kKnownResiduals{"SIGMA", "P4.4", "P4.10", "C4.11", "C4.11-s", "C4.11-s*"};

}  // namespace

TEST_CASE("identity ids are unique and stable", "[audit]") {
    const auto& ids = identity_ids();
    CHECK(ids.size() == 40);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK(ids.front() == "L3.1a");
    CHECK(ids.back() == "F7");

    const auto r = run_suite(catalog_analysis("flat-kaehler-torus"));
    REQUIRE(r.checks.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(r.checks[i].id == ids[i]);
    CHECK_THROWS_AS(run_identity(catalog_analysis("flat-kaehler-torus"), "P9.9"), std::out_of_range);
}

TEST_CASE("flat torus passes every applicable identity", "[audit]") {
    const auto r = run_suite(catalog_analysis("flat-kaehler-torus"));
    CHECK(r.ok());
    CHECK(r.failed() == 0);
    CHECK(r.passed() + r.skipped() == static_cast<int>(identity_ids().size()));
    for (const auto& c : r.checks) {
        if (!c.applicable) {
            CHECK_FALSE(c.skip_reason.empty());
            CHECK(c.equations.empty());
        }
    }
}

TEST_CASE("single identities", "[audit]") {
    const auto& a = catalog_analysis("example-5.4");
    const auto l = run_identity(a, "L3.1b");
    CHECK(l.applicable);
    CHECK(l.passed);
    CHECK(l.failures().empty());

    const auto p = run_identity(a, "P3.4R");
    CHECK(p.passed);

    const auto c = run_identity(a, "C4.11");
    CHECK_FALSE(c.passed);
    REQUIRE(c.failures().size() == 1);
    CHECK(c.failures().front() == "s + 3 s*");

    const auto skip = run_identity(a, "P4.3iib");
    CHECK_FALSE(skip.applicable);
    CHECK(skip.skip_reason == "needs n = 2");
}

TEST_CASE("failing identities on the catalog", "[audit]") {
    CHECK(failing(run_suite(catalog_analysis("example-5.1"))) == std::set<std::string>{"SIGMA", "P4.4"});
    CHECK(failing(run_suite(catalog_analysis("example-5.2"))) == std::set<std::string>{"SIGMA", "P4.4"});
    CHECK(failing(run_suite(catalog_analysis("example-5.4"))) == kKnownResiduals);
    CHECK(failing(run_suite(catalog_analysis("nearly-kaehler-s3s3"))) ==
          std::set<std::string>{"P4.10", "C4.11", "C4.11-s", "C4.11-s*"});
}

TEST_CASE("randomized Kaehler forms", "[audit][property]") {
    std::uint32_t seed = 11;
    for (const auto& e : catalog_entries()) {
        const auto base = build_structure(catalog_input(e.name));
        for (int k = 0; k < 2; ++k, ++seed) {
            const auto a = analyze(build_structure(randomize_kaehler_form(orthonormal_input(base), seed)));
            const auto r = run_suite(a);
            INFO(e.name << " seed " << seed);
            for (const auto& id : failing(r)) CHECK(kKnownResiduals.contains(id));
            for (const auto& c : r.checks) {
                if (c.id == "L3.1a" || c.id == "L3.1b" || c.id == "L3.1c" || c.id == "P3.4R") CHECK(c.passed);
            }
        }
    }
}

TEST_CASE("residual of the Ricci trace formula on example-5.4", "[audit]") {
    // s + 3 s* is off by 8 (|xi1|^2 + |xi2|^2 - |xi3|^2)
    const auto& a = catalog_analysis("example-5.4");
    const auto c = run_identity(a, "C4.11");
    REQUIRE(c.equations.size() == 1);
    const Scalar residual = c.equations[0].residual()(0, 0);
    const auto& n = a.dec.norms;
    CHECK(residual == Scalar(8) * (n[0] + n[1] - n[2]));
}
