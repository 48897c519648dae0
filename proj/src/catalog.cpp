// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/catalog.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace ahg {

namespace {

using Term1 = std::pair<std::vector<int>, Scalar>;

/// Brackets and forms are written 1-based here, as in the source tables.
Bracket br(int i, int j, std::initializer_list<std::pair<int, Scalar>> coeffs) {
    Bracket b{i - 1, j - 1, {}};
    for (const auto& [k, v] : coeffs) b.coeffs[k - 1] = v;
    return b;
}

ScalarForm form(int dim, int degree, std::initializer_list<Term1> terms) {
    ScalarForm f(dim, degree);
    for (const auto& [idx, c] : terms) {
        std::vector<int> zero_based;
        for (int i : idx) zero_based.push_back(i - 1);
        f += ScalarForm::basis(dim, std::span<const int>(zero_based)) * c;
    }
    return f;
}

Scalar q(const Rational& r) { return Scalar(r); }

StructureInput example_51() {
    StructureInput in;
    in.name = "example-5.1";
    in.algebra = LieAlgebra::from_brackets(4, {br(1, 4, {{1, -1}}), br(2, 4, {{3, -1}}), br(3, 4, {{3, -1}})});
    in.omega = form(4, 2, {{{3, 1}, 1}, {{4, 2}, 1}});
    in.psi_plus = form(4, 2, {{{1, 2}, 1}, {{3, 4}, -1}});
    return in;
}

StructureInput example_52() {
    StructureInput in;
    in.name = "example-5.2";
    in.context.parameters = {"q"};
    const Scalar p = Scalar::parameter(0);
    in.algebra = LieAlgebra::from_brackets(4, {br(2, 3, {{1, -1}}), br(2, 4, {{2, -1}}), br(3, 4, {{1, -p}, {3, 1}})});
    in.omega = form(4, 2, {{{2, 1}, 1}, {{4, 3}, 1}});
    in.psi_plus = form(4, 2, {{{1, 3}, 1}, {{2, 4}, -1}});
    return in;
}

StructureInput example_54() {
    StructureInput in;
    in.name = "example-5.4";
    in.context.d = 3;
    const Scalar half = q(Rational(1, 2));
    const Scalar r3half = Scalar::quadratic(0, Rational(1, 2), 3);
    in.algebra = LieAlgebra::from_brackets(6, {br(1, 2, {{5, -1}}), br(1, 4, {{6, -1}}), br(2, 3, {{6, -1}})});
    // e^65 + (-1/2 e^3 + sqrt3/2 e^4) ^ e^1 + (1/2 e^4 + sqrt3/2 e^3) ^ e^2
    in.omega = form(6, 2,
                    {{{6, 5}, 1}, {{3, 1}, -half}, {{4, 1}, r3half}, {{4, 2}, half}, {{3, 2}, r3half}});
    in.psi_plus = form(6, 3,
                       {{{1, 2, 5}, 1},
                        {{3, 4, 5}, 1},
                        {{1, 4, 6}, -half},
                        {{2, 3, 6}, -half},
                        {{2, 4, 6}, r3half},
                        {{1, 3, 6}, -r3half}});
    return in;
}

StructureInput flat_torus() {
    StructureInput in;
    in.name = "flat-kaehler-torus";
    in.algebra = LieAlgebra(4);
    in.omega = form(4, 2, {{{1, 2}, 1}, {{3, 4}, 1}});
    return in;
}

StructureInput nearly_kaehler() {
    // Basis u_1, u_2, u_3, g_1, g_2, g_3 = e_1 .. e_6.
    StructureInput in;
    in.name = "nearly-kaehler-s3s3";
    std::vector<Bracket> b;
    const Scalar third = q(Rational(1, 3));
    const std::array<std::array<int, 3>, 3> cyc{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    for (const auto& [i, j, k] : cyc) {
        b.push_back(br(i, j, {{k, 1}}));
        b.push_back(br(i, j + 3, {{k + 3, 1}}));
        b.push_back(br(j, i + 3, {{k + 3, -1}}));
        b.push_back(br(i + 3, j + 3, {{k, third}}));
    }
    in.algebra = LieAlgebra::from_brackets(6, b);
    in.omega = form(6, 2, {{{1, 4}, 1}, {{2, 5}, 1}, {{3, 6}, 1}});
    return in;
}

const std::array<std::array<int, 3>, 5> kTriples{{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}}};

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"example-5.1", "solvable algebra, omega = e^31 + e^42, locally conformal Kähler"},
        {"example-5.2", "Inoue-type solvable algebra with parameter q, locally conformal Kähler"},
        {"example-5.4", "6-dimensional nilpotent algebra over Q(sqrt 3), Hermitian"},
        {"flat-kaehler-torus", "abelian 4-dimensional algebra, standard Kähler form"},
        {"nearly-kaehler-s3s3", "su(2)+su(2) with its 3-symmetric nearly Kähler structure"},
    };
    return entries;
}

StructureInput catalog_input(std::string_view name) {
    if (name == "example-5.1") return example_51();
    if (name == "example-5.2") return example_52();
    if (name == "example-5.4") return example_54();
    if (name == "flat-kaehler-torus") return flat_torus();
    if (name == "nearly-kaehler-s3s3") return nearly_kaehler();
    throw std::out_of_range("unknown catalog entry: " + std::string(name));
}

Matrix random_rotation(int dim, std::uint32_t seed, int rotations) {
    std::mt19937 rng(seed);
    const auto pick = [&](std::uint32_t bound) { return static_cast<int>(rng() % bound); };
    Matrix Q = Matrix::Identity(dim, dim);
    for (int r = 0; r < rotations; ++r) {
        const int i = pick(static_cast<std::uint32_t>(dim));
        int j = pick(static_cast<std::uint32_t>(dim - 1));
        if (j >= i) ++j;
        const auto& t = kTriples[static_cast<std::size_t>(pick(kTriples.size()))];
        Rational c(t[0], t[2]);
        Rational s(t[1], t[2]);
        if (pick(2)) std::swap(c, s);
        if (pick(2)) s = -s;
        Matrix G = Matrix::Identity(dim, dim);
        G(i, i) = Scalar(c);
        G(j, j) = Scalar(c);
        G(i, j) = Scalar(Rational(-s));
        G(j, i) = Scalar(s);
        Q = mul(Q, G);
    }
    return Q;
}

StructureInput randomize_kaehler_form(const StructureInput& input, std::uint32_t seed, int rotations) {
    if (input.metric) throw std::invalid_argument("randomize_kaehler_form needs an orthonormal basis");
    const Matrix Q = random_rotation(input.algebra.dim(), seed, rotations);
    StructureInput out = input;
    out.name = input.name + "/random-" + std::to_string(seed);
    out.omega = pull_back(input.omega, Q);
    if (input.psi_plus) out.psi_plus = pull_back(*input.psi_plus, Q);
    return out;
}

}  // namespace ahg
