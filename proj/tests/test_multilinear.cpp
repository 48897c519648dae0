// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "catch2/catch_amalgamated.hpp"

#include "ahg/lie_algebra.hpp"
#include "support.hpp"

using namespace ahg;
using ahg::test::form;

namespace {

const ScalarContext kQ{0, {}};

LieAlgebra algebra_of(const char* name) { return catalog_input(name).algebra; }

ScalarForm e(int dim, std::initializer_list<int> idx) {
    std::vector<int> z;
    for (int i : idx) z.push_back(i - 1);
    return ScalarForm::basis(dim, std::span<const int>(z));
}

}  // namespace

TEST_CASE("Jacobi identity", "[multilinear]") {
    CHECK(jacobi_check(algebra_of("example-5.4")).passed);
    CHECK(jacobi_check(LieAlgebra(4)).passed);
    CHECK(jacobi_check(algebra_of("nearly-kaehler-s3s3")).passed);

    // [e1,e2] = e1, [e2,e3] = e2, [e3,e1] = e3, padded to dimension 4
    const auto bad = LieAlgebra::from_brackets(
        4, {{0, 1, {{0, Scalar(1)}}}, {1, 2, {{1, Scalar(1)}}}, {2, 0, {{2, Scalar(1)}}}});
    const auto r = jacobi_check(bad);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.witness);
    CHECK_FALSE(r.witness->value.is_zero());
    // e1, e2, e3 are the only candidates for a nonzero Jacobi sum
    CHECK(r.witness->i < 3);
    CHECK(r.witness->j < 3);
    CHECK(r.witness->k < 3);
}

TEST_CASE("bracket list consistency", "[multilinear]") {
    CHECK_NOTHROW(LieAlgebra::from_brackets(4, {{0, 1, {{2, Scalar(1)}}}, {1, 0, {{2, Scalar(-1)}}}}));
    CHECK_THROWS(LieAlgebra::from_brackets(4, {{0, 1, {{2, Scalar(1)}}}, {1, 0, {{2, Scalar(1)}}}}));
}

TEST_CASE("exterior derivative on basis forms", "[multilinear]") {
    const auto L1 = algebra_of("example-5.1");
    CHECK(exterior_derivative(L1, e(4, {1})) == e(4, {1, 4}));
    CHECK(exterior_derivative(L1, e(4, {3})) == e(4, {2, 4}) + e(4, {3, 4}));
    CHECK(exterior_derivative(L1, ScalarForm(4, 2)).is_zero());

    const auto L4 = algebra_of("example-5.4");
    CHECK(exterior_derivative(L4, e(6, {6})) == e(6, {1, 4}) + e(6, {2, 3}));
    CHECK(exterior_derivative(L4, e(6, {5})) == e(6, {1, 2}));

    const ScalarContext qc{0, {"q"}};
    const auto L2 = algebra_of("example-5.2");
    CHECK(exterior_derivative(L2, e(4, {1})) == form(4, 2, {{"1", {2, 3}}, {"q", {3, 4}}}, qc));
}

TEST_CASE("d squared vanishes on every basis form", "[multilinear][property]") {
    for (const char* name : {"example-5.1", "example-5.2", "example-5.4", "nearly-kaehler-s3s3"}) {
        const auto L = algebra_of(name);
        const int N = L.dim();
        for (int p = 0; p + 2 <= N; ++p) {
            for (Mask m : detail::lex_masks(N, p)) {
                ScalarForm a(N, p);
                a.coeff(m) = Scalar(1);
                INFO(name << " degree " << p);
                CHECK(exterior_derivative(L, exterior_derivative(L, a)).is_zero());
            }
        }
    }
}

TEST_CASE("wedge, interior product and musical maps", "[multilinear]") {
    const ScalarForm w = wedge(e(4, {1}), e(4, {4}));
    CHECK(w == e(4, {1, 4}));
    CHECK(w({0, 3}) == Scalar(1));
    CHECK(w({3, 0}) == Scalar(-1));
    CHECK(e(4, {4, 1}) == -e(4, {1, 4}));

    Vector e1 = Vector::Zero(4);
    e1(0) = Scalar(1);
    CHECK(interior(e1, e(4, {1, 4})) == e(4, {4}));
    CHECK(flat(e1) == e(4, {1}));
    CHECK(exactly_equal(sharp(e(4, {1})), e1));

    // graded Leibniz rule
    const auto L = algebra_of("example-5.4");
    const ScalarForm a = e(6, {5}) + e(6, {6});
    const ScalarForm b = e(6, {6}) * Scalar(2) + e(6, {3});
    CHECK(exterior_derivative(L, wedge(a, b)) ==
          wedge(exterior_derivative(L, a), b) - wedge(a, exterior_derivative(L, b)));
}

TEST_CASE("form inner product", "[multilinear]") {
    CHECK(inner(e(4, {1, 2}), e(4, {1, 2})) == Scalar(1));
    const ScalarForm omega = e(4, {3, 1}) + e(4, {4, 2});
    CHECK(inner(omega, omega) == Scalar(2));
    CHECK(inner(-e(4, {1, 4}), omega) == Scalar(0));
}

TEST_CASE("Hodge star", "[multilinear]") {
    const Scalar vol(1);
    const ScalarForm one = ScalarForm::constant(4, Scalar(1));
    CHECK(hodge_star(one, vol) == e(4, {1, 2, 3, 4}));
    CHECK(hodge_star(e(4, {1, 2, 3, 4}), vol) == one);
    CHECK(hodge_star(e(4, {1, 2}), vol) == e(4, {3, 4}));
    CHECK(hodge_star(e(4, {1, 2}), Scalar(-1)) == -e(4, {3, 4}));
    // a ^ *b = <a, b> vol
    const ScalarForm a = e(4, {1, 3}) + e(4, {2, 4}) * Scalar(3);
    const ScalarForm b = e(4, {1, 3}) * Scalar(2) - e(4, {2, 4});
    CHECK(wedge(a, hodge_star(b, vol)) == e(4, {1, 2, 3, 4}) * inner(a, b));
}

TEST_CASE("codifferential", "[multilinear]") {
    const ScalarForm theta1 = form(4, 1, {{"-1", {1}}, {"-2", {4}}}, kQ);
    // d(e^123) = 2 e^1234 on this algebra, so d* theta = -4 for either volume sign
    CHECK(codifferential(algebra_of("example-5.1"), theta1, Scalar(1)) == ScalarForm::constant(4, Scalar(-4)));
    CHECK(codifferential(algebra_of("example-5.1"), theta1, Scalar(-1)) == ScalarForm::constant(4, Scalar(-4)));

    const ScalarContext qc{0, {"q"}};
    const ScalarForm theta2 = form(4, 1, {{"q", {2}}, {"-1", {4}}}, qc);
    CHECK(codifferential(algebra_of("example-5.2"), theta2, Scalar(-1)).is_zero());

    CHECK(codifferential(LieAlgebra(4), e(4, {1}), Scalar(1)).is_zero());
}

TEST_CASE("norm of the Lee form of example-5.2", "[multilinear]") {
    const ScalarContext qc{0, {"q"}};
    const ScalarForm theta = form(4, 1, {{"q", {2}}, {"-1", {4}}}, qc);
    CHECK(inner(theta, theta) == parse_scalar("1 + q^2", qc));
}
