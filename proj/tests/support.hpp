// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ahg/analysis.hpp"
#include "ahg/catalog.hpp"
#include "ahg/io.hpp"

namespace ahg::test {

/// Analysis of a catalog entry, computed once per process.
inline const Analysis& catalog_analysis(const std::string& name) {
    static std::map<std::string, Analysis> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, analyze(build_structure(catalog_input(name)))).first;
    return it->second;
}

inline Scalar lit(const std::string& text, const ScalarContext& ctx) { return parse_scalar(text, ctx); }

struct Term {
    std::string c;
    std::vector<int> idx;  // 1-based
};

/// Sum of c * e^{idx}, written with 1-based indices.
inline ScalarForm form(int dim, int degree, std::initializer_list<Term> terms, const ScalarContext& ctx) {
    ScalarForm f(dim, degree);
    for (const auto& t : terms) {
        std::vector<int> z;
        for (int i : t.idx) z.push_back(i - 1);
        f += ScalarForm::basis(dim, std::span<const int>(z)) * lit(t.c, ctx);
    }
    return f;
}

/// Symmetric/general bilinear form sum c e^i (x) e^j, 1-based.
inline Matrix bilinear(int dim, std::initializer_list<std::tuple<std::string, int, int>> terms,
                       const ScalarContext& ctx) {
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& [c, i, j] : terms) m(i - 1, j - 1) += lit(c, ctx);
    return m;
}

/// sum c e^a (x) e^{bc} as the tensor T(a, b, c) = -T(a, c, b), 1-based.
inline Tensor3<Scalar> torsion_table(int dim, std::initializer_list<std::tuple<std::string, int, int, int>> terms,
                                     const ScalarContext& ctx) {
    Tensor3<Scalar> t(dim);
    for (const auto& [c, a, b, d] : terms) {
        const Scalar v = lit(c, ctx);
        t(a - 1, b - 1, d - 1) += v;
        t(a - 1, d - 1, b - 1) -= v;
    }
    return t;
}

inline Matrix diag(std::initializer_list<std::string> entries, const ScalarContext& ctx) {
    const int n = static_cast<int>(entries.size());
    Matrix m = Matrix::Zero(n, n);
    int i = 0;
    for (const auto& e : entries) {
        m(i, i) = lit(e, ctx);
        ++i;
    }
    return m;
}

}  // namespace ahg::test
