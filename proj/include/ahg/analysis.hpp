// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file analysis.hpp
 * @brief The full pipeline for one structure: connections, torsion split,
 *        Lee form, curvature and Ricci data.
 */

#pragma once

#include <array>
#include <optional>

#include "ahg/curvature.hpp"
#include "ahg/decomposition.hpp"
#include "ahg/structure.hpp"

namespace ahg {

class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Analysis {
    AlmostHermitianStructure s;
    Connection lc;
    Connection minimal;
    ChernData chern;
    Tensor3<Scalar> xi;
    Tensor3<Scalar> nijenhuis;
    ScalarForm domega;
    TorsionDecomposition dec;
    GHClass cls;
    Scalar dstar_theta;
    DThetaReport dtheta;

    /// (D^U_x xi)(a, b, c) and the same for each component.
    Tensor4<Scalar> d_xi;
    std::array<Tensor4<Scalar>, 4> d_xi_parts;
    /// (nabla_x theta)(y) for the Levi-Civita connection.
    Matrix nabla_theta;

    Tensor4<Scalar> R_lc;
    Tensor4<Scalar> R_min;
    Tensor4<Scalar> R_chern;
    RicciPair ricci;
    RicciForms forms;
    CurvatureComponents components;
    std::optional<SURefinement> su;
};

/// Runs every stage and asserts the structural invariants along the way
/// (metric/torsion-free Levi-Civita, D^U omega = 0, Lee routes,
/// (d theta)_{R omega} = 0, curvature symmetries). Throws on violation.
Analysis analyze(const AlmostHermitianStructure& s);

}  // namespace ahg
