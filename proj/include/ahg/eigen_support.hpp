// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file eigen_support.hpp
 * @brief Eigen integration for the exact Scalar type.
 *
 * Rank-2 objects (endomorphisms, bilinear forms, 2-forms as skew matrices)
 * are plain Eigen matrices over ahg::Scalar. Only the ring operations are
 * meaningful; norms, decompositions and anything that compares magnitudes
 * are not available for exact scalars.
 */

#pragma once

#include <Eigen/Core>

#include "ahg/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<ahg::Scalar> : GenericNumTraits<ahg::Scalar> {
    using Real = ahg::Scalar;
    using NonInteger = ahg::Scalar;
    using Nested = ahg::Scalar;
    using Literal = ahg::Scalar;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 100
    };

    static Real epsilon() { return ahg::Scalar(); }
    static Real dummy_precision() { return ahg::Scalar(); }
    static int digits10() { return 0; }
    static int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace ahg {

template <class T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

/// True iff every entry is exactly zero.
template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!(m(i, j) == typename Derived::Scalar(0))) return false;
        }
    }
    return true;
}

/// Exact entrywise equality (dimensions must match).
template <class A, class B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!(a(i, j) == b(i, j))) return false;
        }
    }
    return true;
}

/// Product without Eigen's blocked kernel; exact scalars gain nothing from it.
template <class T>
MatrixX<T> mul(const MatrixX<T>& a, const MatrixX<T>& b) {
    MatrixX<T> out = MatrixX<T>::Zero(a.rows(), b.cols());
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (b(k, j) == T(0)) continue;
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                if (a(i, k) == T(0)) continue;
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

}  // namespace ahg
