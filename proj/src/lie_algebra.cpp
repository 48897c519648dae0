// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/lie_algebra.hpp"

#include <stdexcept>

namespace ahg {

LieAlgebra::LieAlgebra(int dim) : dim_(dim), c_(dim) {
    if (dim <= 0 || dim > 24) throw std::invalid_argument("Lie algebra dimension out of range");
    index_terms();
}

LieAlgebra LieAlgebra::from_brackets(int dim, const std::vector<Bracket>& brackets) {
    LieAlgebra L(dim);
    std::vector<bool> seen(static_cast<std::size_t>(dim * dim), false);
    for (const auto& b : brackets) {
        if (b.i < 0 || b.i >= dim || b.j < 0 || b.j >= dim) {
            throw std::invalid_argument("bracket index out of range");
        }
        for (const auto& [k, v] : b.coeffs) {
            if (k < 0 || k >= dim) throw std::invalid_argument("bracket coefficient index out of range");
        }
        if (b.i == b.j) {
            for (const auto& [k, v] : b.coeffs) {
                if (!v.is_zero()) {
                    throw std::invalid_argument("bracket [e_" + std::to_string(b.i + 1) + ", e_" +
                                                std::to_string(b.i + 1) + "] must vanish");
                }
            }
            continue;
        }
        const auto key = static_cast<std::size_t>(std::min(b.i, b.j) * dim + std::max(b.i, b.j));
        if (seen[key]) {
            for (int k = 0; k < dim; ++k) {
                Scalar v;
                if (auto it = b.coeffs.find(k); it != b.coeffs.end()) v = it->second;
                if (!(L.c_(k, b.i, b.j) == v)) {
                    throw std::invalid_argument("bracket [e_" + std::to_string(b.i + 1) + ", e_" +
                                                std::to_string(b.j + 1) + "] given inconsistently");
                }
            }
            continue;
        }
        seen[key] = true;
        for (const auto& [k, v] : b.coeffs) {
            L.c_(k, b.i, b.j) = v;
            L.c_(k, b.j, b.i) = -v;
        }
    }
    L.index_terms();
    return L;
}

void LieAlgebra::index_terms() {
    terms_.assign(static_cast<std::size_t>(dim_ * dim_), {});
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                if (!c_(k, i, j).is_zero()) terms_[static_cast<std::size_t>(i * dim_ + j)].emplace_back(k, c_(k, i, j));
            }
        }
    }
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    Vector out = Vector::Zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x(i).is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y(j).is_zero()) continue;
            const Scalar xy = x(i) * y(j);
            for (const auto& [k, v] : bracket_terms(i, j)) out(k) += xy * v;
        }
    }
    return out;
}

std::vector<Bracket> LieAlgebra::brackets() const {
    std::vector<Bracket> out;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            const auto& t = bracket_terms(i, j);
            if (t.empty()) continue;
            Bracket b{i, j, {}};
            for (const auto& [k, v] : t) b.coeffs[k] = v;
            out.push_back(std::move(b));
        }
    }
    return out;
}

JacobiResult jacobi_check(const LieAlgebra& L) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                std::vector<Scalar> sum(static_cast<std::size_t>(n));
                auto add = [&](int a, int b, int c) {
                    for (const auto& [m, cm] : L.bracket_terms(a, b)) {
                        for (const auto& [l, cl] : L.bracket_terms(m, c)) sum[static_cast<std::size_t>(l)] += cm * cl;
                    }
                };
                add(i, j, k);
                add(j, k, i);
                add(k, i, j);
                for (int l = 0; l < n; ++l) {
                    if (!sum[static_cast<std::size_t>(l)].is_zero()) {
                        return {false, JacobiWitness{i, j, k, l, sum[static_cast<std::size_t>(l)]}};
                    }
                }
            }
        }
    }
    return {};
}

ScalarForm exterior_derivative(const LieAlgebra& L, const ScalarForm& a) {
    const int n = L.dim();
    if (a.dim() != n) throw std::invalid_argument("form dimension does not match the algebra");
    const int p = a.degree();
    if (p + 1 > n) throw std::invalid_argument("exterior derivative of a top-degree form");
    ScalarForm out(n, p + 1);
    if (p == 0 || a.is_zero()) return out;
    for (Mask m : detail::lex_masks(n, p + 1)) {
        const auto idx = detail::indices_of(m);
        Scalar acc;
        std::vector<int> args(static_cast<std::size_t>(p));
        for (int x = 0; x <= p; ++x) {
            for (int y = x + 1; y <= p; ++y) {
                const auto& terms = L.bracket_terms(idx[static_cast<std::size_t>(x)], idx[static_cast<std::size_t>(y)]);
                if (terms.empty()) continue;
                std::size_t w = 1;
                for (int r = 0; r <= p; ++r) {
                    if (r != x && r != y) args[w++] = idx[static_cast<std::size_t>(r)];
                }
                for (const auto& [k, ck] : terms) {
                    args[0] = k;
                    Scalar v = a(std::span<const int>(args));
                    if (v.is_zero()) continue;
                    v *= ck;
                    if ((x + y) & 1) acc -= v;
                    else acc += v;
                }
            }
        }
        out.coeff(m) = acc;
    }
    return out;
}

ScalarForm codifferential(const LieAlgebra& L, const ScalarForm& a, const Scalar& vol) {
    if (a.degree() == 0) throw std::invalid_argument("codifferential of a 0-form");
    return -hodge_star(exterior_derivative(L, hodge_star(a, vol)), vol);
}

}  // namespace ahg
