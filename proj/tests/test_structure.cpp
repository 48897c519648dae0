// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "catch2/catch_amalgamated.hpp"

#include "ahg/decomposition.hpp"
#include "support.hpp"

using namespace ahg;
using ahg::test::catalog_analysis;
using ahg::test::form;
using ahg::test::torsion_table;
using Catch::Matchers::ContainsSubstring;

namespace {

/// Gamma from entries D_{e_i} e_j = c e_k, 1-based.
Tensor3<Scalar> gamma(int dim, std::initializer_list<std::tuple<int, int, std::string, int>> entries,
                      const ScalarContext& ctx) {
    Tensor3<Scalar> g(dim);
    for (const auto& [i, j, c, k] : entries) g(i - 1, j - 1, k - 1) += parse_scalar(c, ctx);
    return g;
}

Vector column(const Matrix& m, int j) { return m.col(j); }

Vector unit(int dim, int i) {
    Vector v = Vector::Zero(dim);
    v(i - 1) = Scalar(1);
    return v;
}

StructureInput flipped_54() {
    StructureInput in = catalog_input("example-5.4");
    in.omega = form(6, 2, {{"1", {1, 2}}, {"1", {3, 4}}, {"1", {5, 6}}}, in.context);
    in.psi_plus.reset();
    return in;
}

}  // namespace

TEST_CASE("almost complex structure from the Kaehler form", "[structure]") {
    const auto s1 = build_structure(catalog_input("example-5.1"));
    CHECK(exactly_equal(column(s1.J, 0), unit(4, 3)));
    CHECK(exactly_equal(column(s1.J, 1), unit(4, 4)));
    CHECK(s1.n == 2);

    const auto s2 = build_structure(catalog_input("example-5.2"));
    CHECK(exactly_equal(column(s2.J, 0), unit(4, 2)));
    CHECK(exactly_equal(column(s2.J, 2), unit(4, 4)));

    for (const auto& e : catalog_entries()) {
        const auto s = build_structure(catalog_input(e.name));
        const int N = s.dim();
        CHECK(exactly_equal(mul(s.J, s.J), Matrix(-Matrix::Identity(N, N))));
        CHECK(exactly_equal(to_matrix(s.omega), s.J));
    }
}

TEST_CASE("invalid structures are rejected", "[structure]") {
    StructureInput in = catalog_input("flat-kaehler-torus");
    in.omega = form(4, 2, {{"1", {1, 2}}}, in.context);
    CHECK_THROWS_WITH(build_structure(in), ContainsSubstring("degenerate"));

    in.omega = form(4, 2, {{"2", {1, 2}}, {"1", {3, 4}}}, in.context);
    CHECK_THROWS_WITH(build_structure(in), ContainsSubstring("J^2 = -Id"));

    StructureInput bad = catalog_input("flat-kaehler-torus");
    bad.algebra = LieAlgebra::from_brackets(
        4, {{0, 1, {{0, Scalar(1)}}}, {1, 2, {{1, Scalar(1)}}}, {2, 0, {{2, Scalar(1)}}}});
    CHECK_THROWS_WITH(build_structure(bad), ContainsSubstring("Jacobi"));
}

TEST_CASE("non-orthonormal input basis", "[structure]") {
    // g = 4 e^1 e^1 + sum e^i e^i, omega = 2 e^12 + e^34 is compatible
    StructureInput in = catalog_input("flat-kaehler-torus");
    Matrix G = Matrix::Identity(4, 4);
    G(0, 0) = Scalar(4);
    in.metric = G;
    in.omega = form(4, 2, {{"2", {1, 2}}, {"1", {3, 4}}}, in.context);
    const auto s = build_structure(in);
    CHECK(s.frame(0, 0) == Scalar(Rational(1, 2)));
    CHECK(s.omega == form(4, 2, {{"1", {1, 2}}, {"1", {3, 4}}}, in.context));
}

TEST_CASE("Nijenhuis tensor", "[structure]") {
    CHECK(catalog_analysis("example-5.1").nijenhuis.is_zero());
    CHECK(catalog_analysis("example-5.2").nijenhuis.is_zero());
    CHECK(catalog_analysis("example-5.4").nijenhuis.is_zero());
    CHECK_FALSE(catalog_analysis("nearly-kaehler-s3s3").nijenhuis.is_zero());

    const auto s = build_structure(flipped_54());
    const auto N = nijenhuis(s);
    CHECK_FALSE(N.is_zero());
    // Je_1 = -e_2, Je_3 = -e_4: N(e_1, e_3) = J[e_3, e_2] + J[e_4, e_1] = 2 J e_6 = 2 e_5
    CHECK(N(0, 2, 4) == Scalar(2));
}

TEST_CASE("Levi-Civita connection of example-5.4", "[structure]") {
    const auto& a = catalog_analysis("example-5.4");
    const ScalarContext& c = a.s.context;
    const auto expected = gamma(6,
                                {{1, 2, "-1/2", 5}, {1, 4, "-1/2", 6}, {1, 5, "1/2", 2}, {1, 6, "1/2", 4},
                                 {2, 1, "1/2", 5},  {2, 3, "-1/2", 6}, {2, 5, "-1/2", 1}, {2, 6, "1/2", 3},
                                 {3, 2, "1/2", 6},  {3, 6, "-1/2", 2}, {4, 1, "1/2", 6},  {4, 6, "-1/2", 1},
                                 {5, 1, "1/2", 2},  {5, 2, "-1/2", 1}, {6, 1, "1/2", 4},  {6, 2, "1/2", 3},
                                 {6, 3, "-1/2", 2}, {6, 4, "-1/2", 1}},
                                c);
    CHECK(a.lc.gamma == expected);
    CHECK(is_metric(a.lc));
    CHECK(torsion(a.s.algebra, a.lc).is_zero());
}

TEST_CASE("Levi-Civita connection of example-5.1", "[structure]") {
    const auto& a = catalog_analysis("example-5.1");
    const auto expected = gamma(4,
                                {{1, 1, "1", 4}, {3, 3, "1", 4}, {1, 4, "-1", 1}, {2, 3, "1/2", 4}, {3, 2, "1/2", 4},
                                 {2, 4, "-1/2", 3}, {4, 2, "1/2", 3}, {3, 4, "-1/2", 2}, {3, 4, "-1", 3},
                                 {4, 3, "-1/2", 2}},
                                a.s.context);
    CHECK(a.lc.gamma == expected);
    CHECK(levi_civita(LieAlgebra(4)).gamma.is_zero());
}

TEST_CASE("intrinsic torsion of example-5.4", "[structure]") {
    const auto& a = catalog_analysis("example-5.4");
    const auto eight_xi = torsion_table(6,
                                        {{"-r", 1, 1, 5},  {"-r", 2, 2, 5},  {"-r", 3, 3, 5},  {"-r", 4, 4, 5},
                                         {"1", 1, 2, 5},   {"-r", 1, 3, 6},  {"1", 1, 4, 6},   {"-1", 2, 1, 5},
                                         {"1", 2, 3, 6},   {"r", 2, 4, 6},   {"-2", 3, 2, 6},  {"-1", 3, 4, 5},
                                         {"-2", 4, 1, 6},  {"1", 4, 3, 5},   {"-2", 5, 1, 2},  {"-2", 5, 3, 4},
                                         {"-r", 6, 1, 3},  {"-1", 6, 1, 4},  {"-1", 6, 2, 3},  {"r", 6, 2, 4}},
                                        a.s.context);
    CHECK(a.xi * Scalar(8) == eight_xi);
    CHECK(a.xi(0, 0, 4) == Scalar::quadratic(0, Rational(-1, 8), 3));
}

TEST_CASE("intrinsic torsion basics", "[structure]") {
    const auto& flat = catalog_analysis("flat-kaehler-torus");
    CHECK(flat.xi.is_zero());
    CHECK(flat.minimal.gamma.is_zero());
    CHECK(flat.chern.xi_h.is_zero());
    CHECK(flat.chern.connection.gamma.is_zero());

    // sum_i (xi_{e_i} e_i)^flat = (n - 1)/2 theta
    for (const auto& e : catalog_entries()) {
        const auto& a = catalog_analysis(e.name);
        const Scalar k = Scalar(a.s.n - 1) / Scalar(2);
        CHECK(exactly_equal(trace_first(a.xi), Vector(to_vector(a.dec.theta) * k)));
    }
    const auto& a1 = catalog_analysis("example-5.1");
    CHECK(exactly_equal(trace_first(a1.xi), to_vector(form(4, 1, {{"-1/2", {1}}, {"-1", {4}}}, a1.s.context))));
}

TEST_CASE("minimal connection is unitary", "[structure]") {
    for (const auto& e : catalog_entries()) {
        const auto& a = catalog_analysis(e.name);
        INFO(e.name);
        for (const auto& dj : derivative_of_j(a.s, a.minimal)) CHECK(is_zero(dj));
        CHECK(is_metric(a.minimal));
        const int N = a.s.dim();
        CHECK(covariant_derivative(a.minimal, Matrix(Matrix::Identity(N, N))).is_zero());
    }
}

TEST_CASE("Chern connection", "[structure]") {
    CHECK(catalog_analysis("example-5.1").chern.is_unitary);
    CHECK(catalog_analysis("example-5.2").chern.is_unitary);
    CHECK(catalog_analysis("example-5.4").chern.is_unitary);
    CHECK_FALSE(catalog_analysis("nearly-kaehler-s3s3").chern.is_unitary);

    const auto s = build_structure(flipped_54());
    const auto lc = levi_civita(s.algebra);
    const auto ch = chern_connection(s, lc, intrinsic_torsion(s, lc));
    CHECK_FALSE(ch.is_unitary);
}
