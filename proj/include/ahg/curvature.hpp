// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file curvature.hpp
 * @brief Curvature of invariant connections, Ricci tensors, Ricci forms and
 *        SU(n) refinement data.
 *
 * R_{X,Y} = D_{[X,Y]} - [D_X, D_Y], stored as R(i, j, k, l) = <R_{e_i,e_j} e_k, e_l>.
 *   Ric(X, Y)  = <R_{X,e_i} Y, e_i>
 *   Ric*(X, Y) = <R_{X,e_i} JY, J e_i>
 *   rho_D(X, Y) = -1/2 <R_D(e_i, J e_i) X, Y>
 *   r_D(X, Y)   = -1/2 <R_D(X, Y) e_i, J e_i>
 */

#pragma once

#include <optional>

#include "ahg/decomposition.hpp"
#include "ahg/structure.hpp"

namespace ahg {

class CurvatureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Tensor4<Scalar> riemann(const LieAlgebra& L, const Connection& D);

/// Symmetries every curvature tensor of `kind` must satisfy; returns the
/// first violated one or an empty string.
std::string curvature_symmetry_violation(const Tensor4<Scalar>& R, ConnectionKind kind);

Matrix ricci(const Tensor4<Scalar>& R);
Matrix ricci_star(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R);

struct RicciPair {
    Matrix ric;
    Matrix ric_star;
    Scalar s;
    Scalar s_star;
};

RicciPair ricci_pair(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R);

ScalarForm first_ricci_form(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R);
ScalarForm second_ricci_form(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R);

struct RicciFormPair {
    ScalarForm rho;
    ScalarForm r;
};

struct RicciForms {
    RicciFormPair levi_civita;
    RicciFormPair minimal;
    std::optional<RicciFormPair> chern;  ///< present iff the Chern connection is unitary
};

/// Ricci forms of the Chern connection; throws CurvatureError("Chern connection not unitary").
RicciFormPair chern_ricci_forms(const AlmostHermitianStructure& s, const ChernData& chern,
                                const Tensor4<Scalar>& R_chern);

RicciForms ricci_forms(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R_lc,
                       const Tensor4<Scalar>& R_min, const ChernData& chern, const Tensor4<Scalar>& R_chern);

struct SURefinement {
    ScalarForm psi_plus;
    ScalarForm psi_minus;
    ScalarForm star_sum;  ///< *(*d psi_+ ^ psi_+ + *d psi_- ^ psi_-)
    ScalarForm eta;
    ScalarForm eta_hat;   ///< J eta
    std::optional<Scalar> w1_plus;  ///< n = 3: <d omega, psi_+> / |psi_+|^2 / 3
};

/// n = 2: 4 eta - theta = star_sum; n = 3: 4 (3 eta - theta) = star_sum.
SURefinement su_refinement(const AlmostHermitianStructure& s, const ScalarForm& theta);

struct CurvatureComponents {
    BilinearSplit ric_minus_ric_star;
    Matrix ric_star_lambda20;
    Matrix ric_sigma20;
    Matrix ric_plus_3ric_star_11;  ///< J-invariant part, trace part included
    Matrix ric_plus_3ric_star_trace;
    Matrix ric_plus_3ric_star_lambda0;
    Scalar s_minus_s_star;
    Scalar s_plus_3s_star;
};

CurvatureComponents curvature_components(const AlmostHermitianStructure& s, const RicciPair& pair);

/// First Chern class representative: c_1 = -(1 / 2 pi) r_D; the 2-form -r_D is returned.
ScalarForm chern_class_representative(const RicciFormPair& forms);

}  // namespace ahg
