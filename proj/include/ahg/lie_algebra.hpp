// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lie_algebra.hpp
 * @brief Lie algebras by structure constants and the invariant exterior calculus.
 *
 * [e_i, e_j] = sum_k c(k, i, j) e_k with all indices 0-based. The exterior
 * derivative of invariant forms is
 *   d a(X_0, .., X_p) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0, .., ^i, .., ^j, .., X_p),
 * so d e^k (e_i, e_j) = -c(k, i, j).
 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahg/eigen_support.hpp"
#include "ahg/forms.hpp"
#include "ahg/scalar.hpp"
#include "ahg/tensor.hpp"

namespace ahg {

using ScalarForm = Form<Scalar>;

/// One bracket [e_i, e_j] = sum coeffs[k] e_k (0-based indices).
struct Bracket {
    int i = 0;
    int j = 0;
    std::map<int, Scalar> coeffs;
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(int dim);

    /// Builds c from a bracket list; [e_j, e_i] is implied. A pair given twice
    /// must agree (up to the antisymmetry sign).
    static LieAlgebra from_brackets(int dim, const std::vector<Bracket>& brackets);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const Scalar& c(int k, int i, int j) const { return c_(k, i, j); }
    [[nodiscard]] const Tensor3<Scalar>& structure_constants() const noexcept { return c_; }

    /// Nonzero (k, c(k, i, j)) for the pair (i, j).
    [[nodiscard]] const std::vector<std::pair<int, Scalar>>& bracket_terms(int i, int j) const {
        return terms_[static_cast<std::size_t>(i * dim_ + j)];
    }

    [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;

    /// Nonzero brackets [e_i, e_j], i < j.
    [[nodiscard]] std::vector<Bracket> brackets() const;

private:
    void index_terms();

    int dim_ = 0;
    Tensor3<Scalar> c_;
    std::vector<std::vector<std::pair<int, Scalar>>> terms_;
};

struct JacobiWitness {
    int i = 0, j = 0, k = 0, l = 0;
    Scalar value;
};

struct JacobiResult {
    bool passed = true;
    std::optional<JacobiWitness> witness;
};

/// Checks sum_m (c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj) = 0 for all i, j, k, l.
JacobiResult jacobi_check(const LieAlgebra& L);

ScalarForm exterior_derivative(const LieAlgebra& L, const ScalarForm& a);

/// d* a = -*d*a with the volume form vol * e^{1..dim}.
ScalarForm codifferential(const LieAlgebra& L, const ScalarForm& a, const Scalar& vol);

}  // namespace ahg
