// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "catch2/catch_amalgamated.hpp"

#include "ahg/audit.hpp"
#include "support.hpp"

using namespace ahg;
using ahg::test::catalog_analysis;
using Catch::Matchers::ContainsSubstring;

namespace {

ParseError parse_error(const std::string& text) {
    try {
        parse_structure(text, "t.json");
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError for " << text);
    return ParseError("", "", "");
}

const char* kFlat = R"({"name": "t", "dimension": 4, "brackets": [], "metric": "identity",
  "kaehler_form": [{"i": 1, "j": 2, "c": "1"}, {"i": 3, "j": 4, "c": 1}]})";

Report report_of(const std::string& name) {
    const auto& a = catalog_analysis(name);
    return make_report(a, run_suite(a));
}

}  // namespace

TEST_CASE("structure JSON round trip", "[io]") {
    for (const auto& e : catalog_entries()) {
        const StructureInput in = catalog_input(e.name);
        const auto text = structure_to_json(in).dump(2);
        const StructureInput back = parse_structure(text);
        INFO(e.name);
        CHECK(structure_to_json(back) == structure_to_json(in));
        CHECK(back.omega == in.omega);
        CHECK(back.context.parameters == in.context.parameters);
    }
}

TEST_CASE("minimal input", "[io]") {
    const auto in = parse_structure(kFlat);
    CHECK(in.name == "t");
    CHECK_FALSE(in.metric);
    const auto a = analyze(build_structure(in));
    CHECK(a.xi.is_zero());
}

TEST_CASE("syntax errors carry line and column", "[io]") {
    const auto e = parse_error("{\n  \"name\": \"t\",\n  \"dimension\": 4,,\n}");
    CHECK(e.source() == "t.json");
    CHECK_THAT(e.location(), ContainsSubstring("line 3"));
    CHECK_THAT(std::string(e.what()), ContainsSubstring("t.json"));
}

TEST_CASE("semantic errors carry a JSON pointer", "[io]") {
    auto with = [](const std::string& from, const std::string& to) {
        std::string t = kFlat;
        t.replace(t.find(from), from.size(), to);
        return t;
    };
    CHECK(parse_error(with("\"dimension\": 4", "\"dimension\": 5")).location() == "/dimension");
    CHECK(parse_error(with("\"c\": 1}", "\"c\": \"1/0\"}")).location() == "/kaehler_form/1/c");
    CHECK(parse_error(with("\"i\": 3", "\"i\": 7")).location() == "/kaehler_form/1/i");
    CHECK(parse_error(with("\"metric\"", "\"metrik\"")).location() == "/metrik");
    const auto missing = parse_error(with("\"name\": \"t\",", ""));
    CHECK(missing.location() == "/");
    CHECK_THAT(std::string(missing.what()), ContainsSubstring("name"));
    CHECK_THAT(std::string(parse_error(with("\"brackets\": []", "\"brackets\": {}")).what()),
               ContainsSubstring("/brackets"));
}

TEST_CASE("input files in tests/data", "[io]") {
    for (const auto& e : catalog_entries()) {
        const auto in = load_structure(std::filesystem::path(AHG_TEST_DATA) / (e.name + ".json"));
        CHECK(structure_to_json(in) == structure_to_json(catalog_input(e.name)));
    }
    CHECK_THROWS_AS(load_structure(std::filesystem::path(AHG_TEST_DATA) / "missing.json"), ParseError);
}

TEST_CASE("report JSON round trip", "[io]") {
    for (const auto& e : catalog_entries()) {
        const Report r = report_of(e.name);
        INFO(e.name);
        CHECK(report_from_json(report_to_json(r)) == r);
        CHECK(report_from_json(nlohmann::ordered_json::parse(report_to_json(r).dump())) == r);
    }
    CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json::object()), ParseError);
}

TEST_CASE("report values", "[io]") {
    const Report r4 = report_of("example-5.4");
    const auto text = report_text(r4);
    CHECK_THAT(text, ContainsSubstring("theta = -(1/2)*r e^5"));
    CHECK_THAT(text, ContainsSubstring("s = -3/2"));
    CHECK_THAT(text, ContainsSubstring("class = Hermitian [W3+W4]"));
    CHECK_THAT(text, ContainsSubstring("r[minimal] = (1/2)*r e^14 + (1/2)*r e^23"));

    const auto j2 = report_to_json(report_of("example-5.2"));
    CHECK(j2["s"] == "-5/2 + -1/2*q^2");
    CHECK(j2["s_minus_s_star"] == "1 + q^2");
    CHECK(j2["dstar_theta"] == "0");
    CHECK(j2["classification"]["modules"] == "W4");
}

TEST_CASE("flat report is zero", "[io]") {
    const Report r = report_of("flat-kaehler-torus");
    const auto j = report_to_json(r);
    CHECK(j["theta"].empty());
    CHECK(j["s"] == "0");
    CHECK(j["s_star"] == "0");
    CHECK(j["classification"]["label"] == "Kähler");
    CHECK(j["su"].is_null());
    CHECK(r.audit.failed == 0);
    const auto text = report_text(r);
    CHECK_THAT(text, ContainsSubstring("theta = 0"));
    CHECK_THAT(text, ContainsSubstring("Ric = 0"));
}

TEST_CASE("basis labels", "[io]") {
    const std::vector<int> a{0, 3};
    CHECK(basis_label(4, a) == "14");
    const std::vector<int> b{0, 9};
    CHECK(basis_label(12, b) == "1,10");
}
