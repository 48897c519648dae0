// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file decomposition.hpp
 * @brief Gray-Hervella splitting of the intrinsic torsion, Lee form, U(n)
 *        splitting of 2-forms and bilinear forms, and contractions of
 *        torsion-type tensors.
 *
 * Component projectors:
 *   (T xi)_X = -J xi_{JX} is an involution on T* (x) u(n)^perp;
 *   W3+W4 is its +1 eigenspace and W1+W2 its -1 eigenspace;
 *   xi_(1) is the total alternation of the -1 part, xi_(2) the remainder;
 *   xi_(4) is given by theta, xi_(3) = (+1 part) - xi_(4).
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "ahg/structure.hpp"

namespace ahg {

class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// theta = -(1/(n-1)) J d*omega.
ScalarForm lee_form_codifferential(const AlmostHermitianStructure& s);
/// theta = (2/(n-1)) sum_i (xi_{e_i} e_i)^flat.
ScalarForm lee_form_trace(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi);
/// Both routes; throws DecompositionError if they disagree.
ScalarForm lee_form(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi);

Tensor3<Scalar> t_operator(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi);

/// 4 xi_(4)X Y = <X,Y> theta# - theta(Y) X - <JX,Y> (J theta)# + (J theta)(Y) JX.
Tensor3<Scalar> xi4_from_lee(const AlmostHermitianStructure& s, const ScalarForm& theta);

struct TorsionDecomposition {
    std::array<Tensor3<Scalar>, 4> xi;  ///< xi[a] = xi_(a+1)
    ScalarForm theta;
    std::array<Scalar, 4> norms;        ///< |xi_(a)|^2
};

TorsionDecomposition split_torsion(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi,
                                   const ScalarForm& theta);

/// Torsion-tensor invariants: xi(a,b,c) = -xi(a,c,b) and J xi_X Y + xi_X JY = 0.
bool is_skew_torsion(const Tensor3<Scalar>& xi);
bool anticommutes_with_j(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi);

struct Specialization {
    std::string parameter;
    Rational value;
    int component = 0;  ///< 1..4: W_i vanishes at this value
};

struct GHClass {
    std::array<bool, 4> present{};
    std::string modules;  ///< e.g. "W3+W4", "0"
    std::string label;    ///< e.g. "Hermitian", "Kähler"
    std::vector<Specialization> specializations;
};

GHClass classify(const TorsionDecomposition& dec, const ScalarContext& ctx);

struct TwoFormSplit {
    ScalarForm r_omega;
    ScalarForm lambda0_11;
    ScalarForm lambda20;
};

TwoFormSplit split_two_form(const AlmostHermitianStructure& s, const ScalarForm& a);

/// J-invariant part 1/2 (b + b(J., J.)) of a bilinear form.
Matrix j_invariant_part(const AlmostHermitianStructure& s, const Matrix& b);
Matrix j_anti_invariant_part(const AlmostHermitianStructure& s, const Matrix& b);

/// U(n) pieces of a general bilinear form. The symmetric part splits into
/// R<.,.> + [lambda_0^{1,1}] + [[sigma^{2,0}]], the skew part into a J-invariant
/// piece and [[lambda^{2,0}]].
struct BilinearSplit {
    Matrix trace_part;
    Matrix lambda0_11;
    Matrix sigma20;
    Matrix lambda11_skew;
    Matrix lambda20;
};

BilinearSplit split_bilinear(const AlmostHermitianStructure& s, const Matrix& b);
/// As split_bilinear, rejecting asymmetric input.
BilinearSplit split_symmetric(const AlmostHermitianStructure& s, const Matrix& b);

// ---------------------------------------------------------------------------
// Contractions of (0,3) torsion-type tensors, t(a, b, c) = <t_{e_a} e_b, e_c>.
// All results are bilinear forms indexed (X, Y).
// ---------------------------------------------------------------------------

/// sum_i <A_X e_i, B_Y e_i>
Matrix pair_first(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B);
/// sum_i <A_{e_i} X, B_{e_i} Y>
Matrix pair_second(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B);
/// sum_i <A_X e_i, B_Y J e_i>
Matrix pair_first_j(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B, const Matrix& J);
/// sum_i <A_{e_i} X, B_{J e_i} Y>
Matrix pair_second_j(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B, const Matrix& J);
/// <A_v X, Y>
Matrix along(const Tensor3<Scalar>& A, const Vector& v);
/// a(A_X Y) for a 1-form a
Matrix evaluate_on(const Tensor3<Scalar>& A, const ScalarForm& a);
/// sum_i A_{e_i} e_i
Vector trace_first(const Tensor3<Scalar>& A);
/// sum_i <(D_{e_i} A)_{e_i} X, Y> from DA(x, a, b, c)
Matrix divergence_first(const Tensor4<Scalar>& DA);
/// sum_i <(D_{e_i} A)_X Y, e_i>
Matrix divergence_last(const Tensor4<Scalar>& DA);
/// sum_i <(D_{e_i} A)_X Y, J e_i>
Matrix divergence_last_j(const Tensor4<Scalar>& DA, const Matrix& J);

/// Components of d theta. The left sides come from d and split_two_form,
/// the right sides from the torsion expressions (scaled by (n-2)/2).
struct DThetaReport {
    ScalarForm dtheta;
    TwoFormSplit parts;
    bool trivial = false;  ///< n = 2: both scaled sides vanish identically
    Matrix lhs_lambda0;    ///< (n-2)/2 (d theta)_{[lambda_0^{1,1}]}
    Matrix rhs_lambda0;
    Matrix lhs_lambda20;   ///< (n-2)/2 (d theta)_{[[lambda^{2,0}]]}
    Matrix rhs_lambda20;
};

/// Throws DecompositionError if (d theta)_{R omega} != 0.
DThetaReport dtheta_report(const AlmostHermitianStructure& s, const Connection& minimal,
                           const TorsionDecomposition& dec);

/// |t|^2 = sum t(a,b,c)^2
Scalar norm2(const Tensor3<Scalar>& t);
/// |a|^2 for a form
Scalar norm2(const ScalarForm& a);

Vector to_vector(const ScalarForm& one_form);

}  // namespace ahg
