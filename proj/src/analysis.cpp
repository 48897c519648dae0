// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/analysis.hpp"

namespace ahg {

Analysis analyze(const AlmostHermitianStructure& s) {
    Analysis a;
    a.s = s;
    const LieAlgebra& L = s.algebra;

    a.lc = levi_civita(L);
    if (!is_metric(a.lc)) throw AnalysisError("Levi-Civita connection is not metric");
    if (!torsion(L, a.lc).is_zero()) throw AnalysisError("Levi-Civita connection has torsion");

    a.xi = intrinsic_torsion(s, a.lc);
    a.minimal = minimal_connection(a.lc, a.xi);
    if (!is_metric(a.minimal)) throw AnalysisError("minimal connection is not metric");
    if (!covariant_derivative(a.minimal, to_matrix(s.omega)).is_zero()) {
        throw AnalysisError("minimal connection does not preserve omega");
    }
    a.chern = chern_connection(s, a.lc, a.xi);
    a.nijenhuis = nijenhuis(s);
    a.domega = exterior_derivative(L, s.omega);

    const ScalarForm theta = lee_form(s, a.xi);
    a.dec = split_torsion(s, a.xi, theta);
    a.cls = classify(a.dec, s.context);
    a.dstar_theta = codifferential(L, theta, s.vol).coeff(0);
    a.dtheta = dtheta_report(s, a.minimal, a.dec);

    a.d_xi = covariant_derivative(a.minimal, a.xi);
    for (std::size_t i = 0; i < 4; ++i) a.d_xi_parts[i] = covariant_derivative(a.minimal, a.dec.xi[i]);
    a.nabla_theta = covariant_derivative_form(a.lc, theta);

    a.R_lc = riemann(L, a.lc);
    a.R_min = riemann(L, a.minimal);
    a.R_chern = riemann(L, a.chern.connection);
    if (auto v = curvature_symmetry_violation(a.R_lc, ConnectionKind::levi_civita); !v.empty()) {
        throw AnalysisError("Levi-Civita curvature violates " + v);
    }
    if (auto v = curvature_symmetry_violation(a.R_min, ConnectionKind::minimal); !v.empty()) {
        throw AnalysisError("minimal curvature violates " + v);
    }
    if (auto v = curvature_symmetry_violation(a.R_chern, ConnectionKind::chern); !v.empty()) {
        throw AnalysisError("Chern curvature violates " + v);
    }
    a.ricci = ricci_pair(s, a.R_lc);
    a.forms = ricci_forms(s, a.R_lc, a.R_min, a.chern, a.R_chern);
    a.components = curvature_components(s, a.ricci);
    if (s.psi_plus) a.su = su_refinement(s, theta);
    return a;
}

}  // namespace ahg
