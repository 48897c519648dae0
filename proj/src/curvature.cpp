// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/curvature.hpp"

namespace ahg {

Tensor4<Scalar> riemann(const LieAlgebra& L, const Connection& D) {
    const int N = L.dim();
    std::vector<Matrix> A;
    A.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) A.push_back(D.matrix(i));
    Tensor4<Scalar> R(N);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            Matrix Rij = mul(A[static_cast<std::size_t>(j)], A[static_cast<std::size_t>(i)]) -
                         mul(A[static_cast<std::size_t>(i)], A[static_cast<std::size_t>(j)]);
            for (const auto& [m, c] : L.bracket_terms(i, j)) Rij += A[static_cast<std::size_t>(m)] * c;
            for (int k = 0; k < N; ++k) {
                for (int l = 0; l < N; ++l) {
                    if (Rij(l, k).is_zero()) continue;
                    R(i, j, k, l) = Rij(l, k);
                    R(j, i, k, l) = -Rij(l, k);
                }
            }
        }
    }
    return R;
}

std::string curvature_symmetry_violation(const Tensor4<Scalar>& R, ConnectionKind kind) {
    const int N = R.dim();
    const bool metric = kind != ConnectionKind::custom;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k < N; ++k) {
                for (int l = 0; l < N; ++l) {
                    const Scalar& v = R(i, j, k, l);
                    if (!(v == -R(j, i, k, l))) return "R(X,Y) = -R(Y,X)";
                    if (metric && !(v == -R(i, j, l, k))) return "<R_{X,Y} Z, W> = -<R_{X,Y} W, Z>";
                    if (kind == ConnectionKind::levi_civita) {
                        if (!(v + R(j, k, i, l) + R(k, i, j, l)).is_zero()) return "first Bianchi identity";
                        if (!(v == R(k, l, i, j))) return "pair symmetry";
                    }
                }
            }
        }
    }
    return {};
}

Matrix ricci(const Tensor4<Scalar>& R) {
    const int N = R.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) acc += R(x, i, y, i);
            out(x, y) = acc;
        }
    }
    return out;
}

Matrix ricci_star(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R) {
    const int N = s.dim();
    const Matrix& J = s.J;
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int k = 0; k < N; ++k) {
                if (J(k, y).is_zero()) continue;
                for (int i = 0; i < N; ++i) {
                    for (int l = 0; l < N; ++l) {
                        if (J(l, i).is_zero() || R(x, i, k, l).is_zero()) continue;
                        acc += J(k, y) * J(l, i) * R(x, i, k, l);
                    }
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

RicciPair ricci_pair(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R) {
    RicciPair p;
    p.ric = ricci(R);
    p.ric_star = ricci_star(s, R);
    for (int i = 0; i < s.dim(); ++i) {
        p.s += p.ric(i, i);
        p.s_star += p.ric_star(i, i);
    }
    if (!exactly_equal(p.ric, Matrix(p.ric.transpose()))) throw CurvatureError("Ric is not symmetric");
    const Matrix jrj = mul(mul(Matrix(s.J.transpose()), p.ric_star), s.J);
    if (!exactly_equal(jrj, Matrix(p.ric_star.transpose()))) {
        throw CurvatureError("Ric*(JX, JY) = Ric*(Y, X) fails");
    }
    return p;
}

ScalarForm first_ricci_form(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R) {
    const int N = s.dim();
    const Matrix& J = s.J;
    Matrix out = Matrix::Zero(N, N);
    const Scalar minus_half(Rational(-1, 2));
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int m = 0; m < N; ++m) {
                    if (!J(m, i).is_zero() && !R(i, m, x, y).is_zero()) acc += J(m, i) * R(i, m, x, y);
                }
            }
            out(x, y) = minus_half * acc;
        }
    }
    return from_matrix(out);
}

ScalarForm second_ricci_form(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R) {
    const int N = s.dim();
    const Matrix& J = s.J;
    Matrix out = Matrix::Zero(N, N);
    const Scalar minus_half(Rational(-1, 2));
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int m = 0; m < N; ++m) {
                    if (!J(m, i).is_zero() && !R(x, y, i, m).is_zero()) acc += J(m, i) * R(x, y, i, m);
                }
            }
            out(x, y) = minus_half * acc;
        }
    }
    return from_matrix(out);
}

RicciFormPair chern_ricci_forms(const AlmostHermitianStructure& s, const ChernData& chern,
                                const Tensor4<Scalar>& R_chern) {
    if (!chern.is_unitary) throw CurvatureError("Chern connection not unitary");
    return {first_ricci_form(s, R_chern), second_ricci_form(s, R_chern)};
}

RicciForms ricci_forms(const AlmostHermitianStructure& s, const Tensor4<Scalar>& R_lc,
                       const Tensor4<Scalar>& R_min, const ChernData& chern, const Tensor4<Scalar>& R_chern) {
    RicciForms out;
    out.levi_civita = {first_ricci_form(s, R_lc), second_ricci_form(s, R_lc)};
    out.minimal = {first_ricci_form(s, R_min), second_ricci_form(s, R_min)};
    if (chern.is_unitary) out.chern = chern_ricci_forms(s, chern, R_chern);
    return out;
}

SURefinement su_refinement(const AlmostHermitianStructure& s, const ScalarForm& theta) {
    if (!s.psi_plus || !s.psi_minus) throw CurvatureError("no complex volume form: " + s.su_note);
    SURefinement out;
    out.psi_plus = *s.psi_plus;
    out.psi_minus = *s.psi_minus;
    const auto star_d_wedge = [&](const ScalarForm& psi) {
        return wedge(hodge_star(exterior_derivative(s.algebra, psi), s.vol), psi);
    };
    out.star_sum = hodge_star(star_d_wedge(out.psi_plus) + star_d_wedge(out.psi_minus), s.vol);
    if (s.n == 2) {
        out.eta = (out.star_sum + theta) * Scalar(Rational(1, 4));
    } else if (s.n == 3) {
        out.eta = out.star_sum * Scalar(Rational(1, 12)) + theta * Scalar(Rational(1, 3));
        const ScalarForm domega = exterior_derivative(s.algebra, s.omega);
        out.w1_plus = inner(domega, out.psi_plus) / Scalar(12);
    } else {
        throw CurvatureError("SU(n) refinement is available for n = 2 and n = 3 only");
    }
    out.eta_hat = j_one_form(s, out.eta);
    return out;
}

CurvatureComponents curvature_components(const AlmostHermitianStructure& s, const RicciPair& pair) {
    CurvatureComponents c;
    const Matrix diff = pair.ric - pair.ric_star;
    c.ric_minus_ric_star = split_bilinear(s, diff);
    c.ric_star_lambda20 = j_anti_invariant_part(s, Matrix((pair.ric_star - Matrix(pair.ric_star.transpose())) *
                                                         Scalar(Rational(1, 2))));
    c.ric_sigma20 = j_anti_invariant_part(s, pair.ric);
    const Matrix plus = pair.ric + pair.ric_star * Scalar(3);
    c.ric_plus_3ric_star_11 = j_invariant_part(s, plus);
    const BilinearSplit split = split_bilinear(s, c.ric_plus_3ric_star_11);
    c.ric_plus_3ric_star_trace = split.trace_part;
    c.ric_plus_3ric_star_lambda0 = split.lambda0_11 + split.lambda11_skew;
    c.s_minus_s_star = pair.s - pair.s_star;
    c.s_plus_3s_star = pair.s + Scalar(3) * pair.s_star;
    return c;
}

ScalarForm chern_class_representative(const RicciFormPair& forms) { return -forms.r; }

}  // namespace ahg
