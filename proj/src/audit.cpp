// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/audit.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace ahg {

bool Equation::holds() const { return is_zero(residual()); }

std::vector<std::string> IdentityCheck::failures() const {
    std::vector<std::string> out;
    for (const auto& e : equations) {
        if (!e.holds()) out.push_back(e.label);
    }
    return out;
}

int AuditReport::passed() const {
    int k = 0;
    for (const auto& c : checks) k += c.applicable && c.passed ? 1 : 0;
    return k;
}

int AuditReport::failed() const {
    int k = 0;
    for (const auto& c : checks) k += c.applicable && !c.passed ? 1 : 0;
    return k;
}

int AuditReport::skipped() const {
    int k = 0;
    for (const auto& c : checks) k += c.applicable ? 0 : 1;
    return k;
}

namespace {

Scalar q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return Scalar(r);
}

Matrix T(const Matrix& m) { return m.transpose(); }

Matrix scalar_matrix(const Scalar& v) {
    Matrix m(1, 1);
    m(0, 0) = v;
    return m;
}

Matrix truth(bool v) { return scalar_matrix(Scalar(v ? 1 : 0)); }

Matrix outer(const Vector& u, const Vector& v) {
    const int N = static_cast<int>(u.size());
    Matrix m(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) m(x, y) = u(x) * v(y);
    }
    return m;
}

Matrix column(const ScalarForm& f) {
    const auto masks = detail::lex_masks(f.dim(), f.degree());
    Matrix m(static_cast<Eigen::Index>(masks.size()), 1);
    for (std::size_t i = 0; i < masks.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = f.coeff(masks[i]);
    return m;
}

Matrix column(const Tensor4<Scalar>& t) {
    const int N = t.dim();
    Matrix m(N * N, N * N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k < N; ++k) {
                for (int l = 0; l < N; ++l) m(i * N + j, k * N + l) = t(i, j, k, l);
            }
        }
    }
    return m;
}

Matrix column(const Tensor3<Scalar>& t) {
    const int N = t.dim();
    Matrix m(N * N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k < N; ++k) m(i * N + j, k) = t(i, j, k);
        }
    }
    return m;
}

/// Read-only view of the analysis with the quantities the identities share.
struct Ctx {
    const Analysis& a;
    const AlmostHermitianStructure& s;
    int N;
    int n;
    const Matrix& J;
    Matrix W;  ///< omega(e_i, e_j)
    Matrix I;
    ScalarForm theta;
    ScalarForm jtheta;
    Vector t;   ///< theta#
    Vector jt;  ///< (J theta)#
    const std::array<Tensor3<Scalar>, 4>& x;
    const std::array<Tensor4<Scalar>, 4>& dx;
    std::array<bool, 4> zero{};
    Scalar theta2;
    Scalar dstar;
    Matrix nt;  ///< (nabla_X theta)(Y), Levi-Civita

    explicit Ctx(const Analysis& an)
        : a(an), s(an.s), N(an.s.dim()), n(an.s.n), J(an.s.J), x(an.dec.xi), dx(an.d_xi_parts) {
        W = to_matrix(s.omega);
        I = Matrix::Identity(N, N);
        theta = a.dec.theta;
        jtheta = j_one_form(s, theta);
        t = sharp(theta);
        jt = sharp(jtheta);
        for (std::size_t i = 0; i < 4; ++i) zero[i] = a.dec.norms[i].is_zero();
        theta2 = norm2(theta);
        dstar = a.dstar_theta;
        nt = a.nabla_theta;
    }

    [[nodiscard]] Matrix jj(const Matrix& m) const { return mul(mul(Matrix(J.transpose()), m), J); }
    [[nodiscard]] Matrix rj(const Matrix& m) const { return mul(m, J); }  ///< m(X, JY)
    [[nodiscard]] Matrix inv(const Matrix& m) const { return j_invariant_part(s, m); }
    [[nodiscard]] Matrix anti(const Matrix& m) const { return j_anti_invariant_part(s, m); }
    [[nodiscard]] Matrix pf(int i, int j) const { return pair_first(x[i - 1], x[j - 1]); }
    [[nodiscard]] Matrix ps(int i, int j) const { return pair_second(x[i - 1], x[j - 1]); }
    [[nodiscard]] Matrix pfj(int i, int j) const { return pair_first_j(x[i - 1], x[j - 1], J); }
    [[nodiscard]] Matrix psj(int i, int j) const { return pair_second_j(x[i - 1], x[j - 1], J); }
    [[nodiscard]] Matrix divf(int i) const { return divergence_first(dx[i - 1]); }
    [[nodiscard]] Matrix divl(int i) const { return divergence_last(dx[i - 1]); }
    [[nodiscard]] Matrix th_along(int i) const { return along(x[i - 1], t); }
    [[nodiscard]] Matrix th_eval(int i) const { return evaluate_on(x[i - 1], theta); }
    [[nodiscard]] Matrix jth_eval(int i) const { return evaluate_on(x[i - 1], jtheta); }
    [[nodiscard]] Matrix theta_wedge_jtheta() const { return outer(t, jt) - outer(jt, t); }
    /// theta(X)theta(Y) + theta(JX)theta(JY)
    [[nodiscard]] Matrix theta_sq_plus() const { return outer(t, t) + outer(jt, jt); }
    [[nodiscard]] Matrix dtheta_20() const { return to_matrix(a.dtheta.parts.lambda20); }
    [[nodiscard]] Matrix zeros() const { return Matrix::Zero(N, N); }
    [[nodiscard]] bool hermitian() const { return zero[0] && zero[1]; }
};

using Builder = std::function<void(const Ctx&, IdentityCheck&)>;

struct Entry {
    std::string id;
    std::string statement;
    Builder build;
};

void skip(IdentityCheck& c, std::string reason) {
    c.applicable = false;
    c.skip_reason = std::move(reason);
}

void eq(IdentityCheck& c, std::string label, Matrix lhs, Matrix rhs) {
    c.equations.push_back({std::move(label), std::move(lhs), std::move(rhs)});
}

/// Endomorphism xi_v: column u holds xi_v e_u.
Matrix xi_along(const Tensor3<Scalar>& xi, const Vector& v) {
    const int N = xi.dim();
    Matrix m = Matrix::Zero(N, N);
    for (int a = 0; a < N; ++a) {
        if (v(a).is_zero()) continue;
        for (int u = 0; u < N; ++u) {
            for (int w = 0; w < N; ++w) {
                if (!xi(a, u, w).is_zero()) m(w, u) += v(a) * xi(a, u, w);
            }
        }
    }
    return m;
}

Vector basis_vector(int N, int i) {
    Vector v = Vector::Zero(N);
    v(i) = Scalar(1);
    return v;
}

/// xi_{e_i} e_j as a vector.
Vector xi_apply(const Tensor3<Scalar>& xi, int i, int j) {
    const int N = xi.dim();
    Vector v(N);
    for (int c = 0; c < N; ++c) v(c) = xi(i, j, c);
    return v;
}

/// (D_{e_x} xi)_{e_y} as an endomorphism.
Matrix dxi_endo(const Tensor4<Scalar>& D, int x, int y) {
    const int N = D.dim();
    Matrix m(N, N);
    for (int u = 0; u < N; ++u) {
        for (int w = 0; w < N; ++w) m(w, u) = D(x, y, u, w);
    }
    return m;
}

/// Curvature endomorphism R_{e_i, e_j}.
Matrix curvature_endo(const Tensor4<Scalar>& R, int i, int j) {
    const int N = R.dim();
    Matrix m(N, N);
    for (int k = 0; k < N; ++k) {
        for (int l = 0; l < N; ++l) m(l, k) = R(i, j, k, l);
    }
    return m;
}

/// (A omega)(U, V) = -omega(AU, V) - omega(U, AV).
Matrix act_on_omega(const Matrix& A, const Matrix& W) { return -(mul(Matrix(A.transpose()), W) + mul(W, A)); }

/// sum_{a<b} (-1)^{a+b} (E(X_a, X_b) omega)(X_c, X_d) on all basis quadruples.
ScalarForm alternate_on_omega(const Ctx& c, const std::function<Matrix(int, int)>& E) {
    std::vector<std::vector<Matrix>> act(static_cast<std::size_t>(c.N));
    for (int i = 0; i < c.N; ++i) {
        for (int j = 0; j < c.N; ++j) {
            act[static_cast<std::size_t>(i)].push_back(i == j ? c.zeros() : act_on_omega(E(i, j), c.W));
        }
    }
    return tabulate<Scalar>(c.N, 4, [&](std::span<const int> X) {
        Scalar acc;
        for (int p = 0; p < 4; ++p) {
            for (int r = p + 1; r < 4; ++r) {
                std::array<int, 2> rest{};
                int k = 0;
                for (int m = 0; m < 4; ++m) {
                    if (m != p && m != r) rest[static_cast<std::size_t>(k++)] = X[static_cast<std::size_t>(m)];
                }
                const Scalar& v = act[static_cast<std::size_t>(X[static_cast<std::size_t>(p)])]
                                    [static_cast<std::size_t>(X[static_cast<std::size_t>(r)])](rest[0], rest[1]);
                if (v.is_zero()) continue;
                if ((p + r) % 2 == 0) {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
        }
        return acc;
    });
}

/// Torsion-side curvature difference R - R^U as an endomorphism.
std::function<Matrix(int, int)> torsion_curvature_difference(const Ctx& c) {
    const Analysis* an = &c.a;
    std::vector<Matrix> Xi;
    for (int i = 0; i < c.N; ++i) Xi.push_back(xi_along(an->xi, basis_vector(c.N, i)));
    return [an, Xi](int i, int j) {
        const auto& xi = an->xi;
        Matrix m = dxi_endo(an->d_xi, i, j) - dxi_endo(an->d_xi, j, i);
        m += xi_along(xi, xi_apply(xi, i, j)) - xi_along(xi, xi_apply(xi, j, i));
        m -= mul(Xi[static_cast<std::size_t>(i)], Xi[static_cast<std::size_t>(j)]) -
             mul(Xi[static_cast<std::size_t>(j)], Xi[static_cast<std::size_t>(i)]);
        return m;
    };
}

// ---------------------------------------------------------------------------

void l31a(const Ctx& c, IdentityCheck& k) {
    const Vector v4 = trace_first(c.x[3]);
    const Matrix Dv = covariant_derivative(c.a.minimal, v4);
    Scalar acc;
    for (int j = 0; j < c.N; ++j) {
        for (int m = 0; m < c.N; ++m) acc += Dv(j, m) * c.J(m, j);
    }
    eq(k, "0 = <D^U_{e_j} xi4_{e_i} e_i, J e_j>", scalar_matrix(Scalar()), scalar_matrix(acc));
}

void l31b(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Matrix M = covariant_derivative(c.a.minimal, trace_first(c.x[3]));
    const Scalar r = q(n - 2, n - 1);
    const Matrix d3 = c.divl(3);
    const Matrix p12 = c.pf(1, 2);
    const Matrix jm = c.jj(M);
    const Matrix rhs = (T(M) - M) * r + (T(d3) - d3) * Scalar(2) + (T(jm) - jm) * r + (T(p12) - p12) * Scalar(3);
    eq(k, "0 = skew combination", c.zeros(), rhs);
}

void l31c(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Vector v4 = trace_first(c.x[3]);
    const Matrix p31 = c.pf(3, 1);
    const Matrix p32 = c.pf(3, 2);
    const Matrix rhs = c.divf(1) * Scalar(3) - c.divf(3) + c.divf(4) * Scalar(n - 2) - p31 + T(p31) +
                       (p32 - T(p32)) * q(1, 2) - along(c.x[0], v4) * q(n - 5, n - 1) -
                       along(c.x[1], v4) * q(n - 2, n - 1) + along(c.x[2], v4);
    eq(k, "0 = [lambda^{2,0}] combination", c.zeros(), rhs);
}

void e31(const Ctx& c, IdentityCheck& k) {
    if (c.N < 4) return skip(k, "dimension below 4");
    const ScalarForm lhs = exterior_derivative(c.s.algebra, c.a.domega);
    const ScalarForm rhs = alternate_on_omega(c, torsion_curvature_difference(c));
    eq(k, "d(d omega)", column(lhs), column(rhs));
}

void r33(const Ctx& c, IdentityCheck& k) {
    const auto E = torsion_curvature_difference(c);
    Tensor4<Scalar> lhs(c.N);
    Tensor4<Scalar> rhs(c.N);
    for (int i = 0; i < c.N; ++i) {
        for (int j = 0; j < c.N; ++j) {
            const Matrix e = E(i, j);
            for (int u = 0; u < c.N; ++u) {
                for (int w = 0; w < c.N; ++w) {
                    lhs(i, j, u, w) = c.a.R_lc(i, j, u, w) - c.a.R_min(i, j, u, w);
                    rhs(i, j, u, w) = e(w, u);
                }
            }
        }
    }
    eq(k, "R - R^U", column(lhs), column(rhs));
    if (c.N >= 4) {
        const ScalarForm alt = alternate_on_omega(c, [&](int i, int j) -> Matrix {
            return curvature_endo(c.a.R_lc, i, j) - curvature_endo(c.a.R_min, i, j);
        });
        eq(k, "alternation of (R - R^U) omega", column(alt), column(ScalarForm(c.N, 4)));
    }
}

void p34r(const Ctx& c, IdentityCheck& k) {
    eq(k, "(d theta)_{R omega}", to_matrix(c.a.dtheta.parts.r_omega), c.zeros());
}

void p34h(const Ctx& c, IdentityCheck& k) {
    eq(k, "(n-2)/2 (d theta)_{[lambda_0^{1,1}]}", c.a.dtheta.lhs_lambda0, c.a.dtheta.rhs_lambda0);
}

void p34s(const Ctx& c, IdentityCheck& k) {
    eq(k, "(n-2)/2 (d theta)_{[lambda^{2,0}]}", c.a.dtheta.lhs_lambda20, c.a.dtheta.rhs_lambda20);
}

void p36i(const Ctx& c, IdentityCheck& k) {
    if (c.n <= 2) return skip(k, "needs n > 2");
    if (!(c.zero[0] && c.zero[2])) return skip(k, "torsion not in W2+W4");
    eq(k, "d theta", to_matrix(c.a.dtheta.dtheta), c.zeros());
}

void p36ii(const Ctx& c, IdentityCheck& k) {
    if (c.n <= 2) return skip(k, "needs n > 2");
    if (!(c.zero[1] && c.zero[2])) return skip(k, "torsion not in W1+W4");
    eq(k, "(d theta)_{[lambda_0^{1,1}]}", to_matrix(c.a.dtheta.parts.lambda0_11), c.zeros());
    if (c.n == 3) eq(k, "d theta (n = 3)", to_matrix(c.a.dtheta.dtheta), c.zeros());
    if (!c.zero[0]) eq(k, "theta (xi1 != 0, invariant)", column(c.theta), column(ScalarForm(c.N, 1)));
}

void su3(const Ctx& c, IdentityCheck& k) {
    if (c.n != 3) return skip(k, "needs n = 3");
    if (!c.a.su) return skip(k, "no complex volume form");
    if (!(c.zero[1] && c.zero[2])) return skip(k, "torsion not in W1+W4");
    const auto& su = *c.a.su;
    if (!inner(c.a.domega, su.psi_minus).is_zero()) return skip(k, "d omega has a psi_- component");
    const Scalar w1 = *su.w1_plus;
    const LieAlgebra& L = c.s.algebra;
    const ScalarForm a = su.eta * Scalar(-3) + c.theta;
    eq(k, "d omega = 3 w1+ psi_+ + theta ^ omega", column(c.a.domega),
       column(su.psi_plus * (Scalar(3) * w1) + wedge(c.theta, c.s.omega)));
    eq(k, "d psi_+ = (-3 eta + theta) ^ psi_+", column(exterior_derivative(L, su.psi_plus)),
       column(wedge(a, su.psi_plus)));
    eq(k, "d psi_- = 2 w1+ omega ^ omega + (-3 eta + theta) ^ psi_-", column(exterior_derivative(L, su.psi_minus)),
       column(wedge(c.s.omega, c.s.omega) * (Scalar(2) * w1) + wedge(a, su.psi_minus)));
}

void e41(const Ctx& c, IdentityCheck& k) {
    const int N = c.N;
    const auto& xi = c.a.xi;
    const auto& D = c.a.d_xi;
    Matrix rhs = c.zeros();
    for (int X = 0; X < N; ++X) {
        for (int Y = 0; Y < N; ++Y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                acc += Scalar(-2) * D(i, X, Y, i) + Scalar(2) * D(X, i, Y, i);
                for (int m = 0; m < N; ++m) {
                    acc += Scalar(-2) * xi(i, X, m) * xi(m, Y, i) + Scalar(2) * xi(X, i, m) * xi(m, Y, i);
                }
            }
            rhs(X, Y) = acc;
        }
    }
    eq(k, "Ric - Ric*", c.a.ricci.ric - c.a.ricci.ric_star, rhs);
}

void e42(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Matrix p12 = c.pf(1, 2);
    const Matrix rhs = c.divl(3) * Scalar(-2) - (c.nt + c.jj(c.nt)) * q(n - 2, 2) +
                       c.I * (q(1, 2) * (c.dstar + q(2 * n - 3, 2) * c.theta2)) + c.pf(1, 1) * Scalar(4) -
                       c.ps(2, 2) * Scalar(2) - c.theta_sq_plus() * q(n - 2, 4) - p12 * Scalar(2) + T(p12) +
                       c.th_eval(3) * Scalar(n - 2);
    eq(k, "(Ric - Ric*)_{[lambda^{1,1}]}", c.inv(c.a.ricci.ric - c.a.ricci.ric_star), rhs);
}

void l41(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const auto& nm = c.a.dec.norms;
    const Scalar rhs = Scalar(2 * (n - 1)) * c.dstar + Scalar((n - 1) * (n - 1)) * c.theta2 + Scalar(4) * nm[0] -
                       Scalar(2) * nm[1];
    eq(k, "s - s*", scalar_matrix(c.a.ricci.s - c.a.ricci.s_star), scalar_matrix(rhs));
}

void e44(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Matrix p13 = c.pf(1, 3);
    const Matrix p23 = c.pf(2, 3);
    const Matrix rhs = c.divf(1) * Scalar(2) - c.divf(2) + c.dtheta_20() * q(n - 1, 2) - T(p13) + p13 -
                       c.th_along(1) * Scalar(n - 3) + (T(p23) - p23) * q(1, 2) + c.th_along(2) * q(n, 2);
    eq(k, "Ric*_{[lambda^{2,0}]}", c.a.components.ric_star_lambda20, rhs);
}

void e45(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const int N = c.N;
    const auto& xi = c.a.xi;
    const auto& D = c.a.d_xi;
    const Vector w = mul(c.J, Matrix(trace_first(xi))).col(0);
    Matrix direct = c.zeros();
    for (int X = 0; X < N; ++X) {
        for (int Y = 0; Y < N; ++Y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int p = 0; p < N; ++p) {
                    if (c.J(p, i).is_zero()) continue;
                    for (int b = 0; b < N; ++b) {
                        if (!c.J(b, X).is_zero()) acc += c.J(p, i) * c.J(b, X) * D(i, p, b, Y);
                    }
                }
            }
            for (int p = 0; p < N; ++p) {
                if (w(p).is_zero()) continue;
                for (int b = 0; b < N; ++b) {
                    if (!c.J(b, X).is_zero()) acc -= w(p) * c.J(b, X) * xi(p, b, Y);
                }
            }
            direct(X, Y) = acc;
        }
    }
    eq(k, "Ric*_{[lambda^{2,0}]} (J-twisted divergence)", c.a.components.ric_star_lambda20, direct);
    const Matrix rhs = -c.divf(1) - c.divf(2) + c.divf(3) + c.dtheta_20() * q(1, 2) + c.th_along(1) * q(n - 3, 2) +
                       c.th_along(2) * q(n, 2) - c.th_along(3) * q(n - 1, 2);
    eq(k, "Ric*_{[lambda^{2,0}]} (components)", c.a.components.ric_star_lambda20, rhs);
}

Matrix sigma_theta_term(const Ctx& c) {
    const Matrix jn = c.jj(c.nt);
    return (c.nt + T(c.nt) - jn - T(jn)) * q(-(c.n - 1), 4);
}

void sigma(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Matrix d2 = c.divl(2);
    const Matrix p13 = c.pf(1, 3);
    const Matrix p23 = c.pf(2, 3);
    const Matrix e2 = c.th_eval(2);
    const Matrix rhs = -d2 - T(d2) + sigma_theta_term(c) + p13 + T(p13) - (p23 + T(p23)) * q(1, 2) +
                       (e2 + T(e2)) * q(n - 2, 2);
    eq(k, "Ric_{[[sigma^{2,0}]]}", c.a.components.ric_sigma20, rhs);
}

void p43i(const Ctx& c, IdentityCheck& k) {
    if (!c.zero[2]) return skip(k, "torsion not in W1+W2+W4");
    const int n = c.n;
    const Matrix rhs = -c.divf(2) + c.dtheta_20() * q(n + 1, 6) + c.th_along(2) * q(n, 2);
    eq(k, "Ric*_{[lambda^{2,0}]}", c.a.components.ric_star_lambda20, rhs);
}

void p43ia(const Ctx& c, IdentityCheck& k) {
    if (!(c.zero[1] && c.zero[2])) return skip(k, "torsion not in W1+W4");
    const int n = c.n;
    const Matrix& R = c.a.components.ric_star_lambda20;
    eq(k, "Ric*_{[lambda^{2,0}]} = (n+1)/6 (d theta)_{[lambda^{2,0}]}", R, c.dtheta_20() * q(n + 1, 6));
    if (n > 2) eq(k, "d theta = (d theta)_{[lambda^{2,0}]}", to_matrix(c.a.dtheta.dtheta), c.dtheta_20());
    if (n == 3) {
        eq(k, "Ric*_{[lambda^{2,0}]} = 0 (n = 3)", R, c.zeros());
        eq(k, "d theta = 0 (n = 3)", to_matrix(c.a.dtheta.dtheta), c.zeros());
    }
}

void p43ib(const Ctx& c, IdentityCheck& k) {
    if (!(c.zero[0] && c.zero[2])) return skip(k, "torsion not in W2+W4");
    const int n = c.n;
    const Matrix& R = c.a.components.ric_star_lambda20;
    if (n > 2) {
        eq(k, "Ric*_{[lambda^{2,0}]} (n > 2)", R, -c.divf(2) + c.th_along(2) * q(n, 2));
    } else {
        eq(k, "Ric*_{[lambda^{2,0}]} (n = 2)", R, -c.divf(2) + c.dtheta_20() * q(1, 2) + c.th_along(2));
    }
}

void p43iia(const Ctx& c, IdentityCheck& k) {
    if (!c.hermitian()) return skip(k, "structure not Hermitian");
    const int n = c.n;
    const Matrix& R = c.a.components.ric_star_lambda20;
    eq(k, "Ric*_{[lambda^{2,0}]} = (n-1)/2 (d theta)_{[lambda^{2,0}]}", R, c.dtheta_20() * q(n - 1, 2));
    if (n > 2) {
        eq(k, "Ric*_{[lambda^{2,0}]} via xi3", R,
           (c.divf(3) - c.th_along(3) * q(n - 1, 2)) * q(n - 1, n - 2));
    }
}

void p43iib(const Ctx& c, IdentityCheck& k) {
    if (c.n != 2) return skip(k, "needs n = 2");
    if (!c.hermitian()) return skip(k, "structure not Hermitian");
    eq(k, "(Ric - Ric*)_{[lambda_0^{1,1}]}", c.a.components.ric_minus_ric_star.lambda0_11, c.zeros());
}

void p44(const Ctx& c, IdentityCheck& k) {
    const bool w14 = c.zero[1] && c.zero[2];
    if (!(w14 || c.hermitian())) return skip(k, "torsion neither in W1+W4 nor in W3+W4");
    eq(k, "Ric_{[[sigma^{2,0}]]}", c.a.components.ric_sigma20, sigma_theta_term(c));
    const Matrix sym = c.nt + T(c.nt);
    if (is_zero(sym)) eq(k, "Ric_{[[sigma^{2,0}]]} = 0 (theta# Killing)", c.a.components.ric_sigma20, c.zeros());
}

void p46i(const Ctx& c, IdentityCheck& k) {
    const LieAlgebra& L = c.s.algebra;
    const auto check = [&](const std::string& tag, const RicciFormPair& f) {
        eq(k, "rho in [lambda^{1,1}] (" + tag + ")", c.anti(to_matrix(f.rho)), c.zeros());
        eq(k, "d r = 0 (" + tag + ")", column(exterior_derivative(L, f.r)), column(ScalarForm(c.N, 3)));
    };
    check("minimal", c.a.forms.minimal);
    if (c.a.forms.chern) check("Chern", *c.a.forms.chern);
}

void p46ii(const Ctx& c, IdentityCheck& k) {
    const Matrix ricj = c.rj(c.a.ricci.ric_star);
    const Matrix rho = to_matrix(c.a.forms.levi_civita.rho);
    const Matrix r = to_matrix(c.a.forms.levi_civita.r);
    const Matrix rU = to_matrix(c.a.forms.minimal.r);
    eq(k, "Ric*(X, JY) = rho", ricj, rho);
    eq(k, "rho = r", rho, r);
    eq(k, "r = r^U + <xi_X e_i, xi_Y J e_i>", r, rU + pair_first_j(c.a.xi, c.a.xi, c.J));
    Matrix rhs = rU;
    for (int a = 1; a <= 3; ++a) {
        const Matrix e = c.jth_eval(a);
        rhs += c.pfj(a, a) - (e - T(e));
        for (int b = a + 1; b <= 3; ++b) rhs += c.pfj(a, b) - T(c.pfj(a, b));
    }
    rhs += c.W * q(-1, 4) * c.theta2 - c.theta_wedge_jtheta() * q(1, 4);
    eq(k, "r = r^U + component expansion", r, rhs);
}

void p46iii(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Matrix lhs = c.inv(to_matrix(c.a.forms.levi_civita.rho));
    const Matrix rhoU = to_matrix(c.a.forms.minimal.rho);
    eq(k, "rho_[lambda^{1,1}] = rho^U + <xi_{e_i} X, xi_{J e_i} Y>", lhs,
       rhoU + pair_second_j(c.a.xi, c.a.xi, c.J));
    Matrix rhs = rhoU;
    for (int a = 1; a <= 3; ++a) {
        rhs += c.psj(a, a);
        for (int b = a + 1; b <= 3; ++b) rhs += c.psj(a, b) - T(c.psj(a, b));
    }
    const Matrix e3 = c.jth_eval(3);
    rhs += c.W * (q(-1, 8) * c.theta2) - (e3 - T(e3)) * q(1, 2) + c.theta_wedge_jtheta() * q(n - 2, 8);
    eq(k, "rho_[lambda^{1,1}] = rho^U + component expansion", lhs, rhs);
}

void p48i(const Ctx& c, IdentityCheck& k) {
    if (!c.hermitian()) return skip(k, "structure not Hermitian");
    if (!c.a.forms.chern) return skip(k, "Chern connection not unitary");
    const int n = c.n;
    const Matrix rh = to_matrix(c.a.forms.chern->r);
    const Matrix rU = to_matrix(c.a.forms.minimal.r);
    const Matrix dj = to_matrix(exterior_derivative(c.s.algebra, c.jtheta));
    eq(k, "r^h = r^U + (n-1)/2 dJtheta", rh, rU + dj * q(n - 1, 2));
    eq(k, "r^h = (r^U)_[lambda^{1,1}] + (n-1)/2 (dJtheta)_[lambda^{1,1}]", rh, c.inv(rU) + c.inv(dj) * q(n - 1, 2));
}

void p48ii(const Ctx& c, IdentityCheck& k) {
    if (!c.hermitian()) return skip(k, "structure not Hermitian");
    if (!c.a.forms.chern) return skip(k, "Chern connection not unitary");
    const int n = c.n;
    const Matrix rhoh = to_matrix(c.a.forms.chern->rho);
    const Matrix rho11 = c.inv(to_matrix(c.a.forms.levi_civita.rho));
    const Matrix dj = to_matrix(exterior_derivative(c.s.algebra, c.jtheta));
    const Matrix d3 = divergence_last_j(c.dx[2], c.J);
    const Matrix e3 = c.jth_eval(3);
    const Matrix rhs = rho11 - d3 + T(d3) - c.inv(dj) * q(1, 2) + c.W * (q(1, 2) * c.dstar) +
                       c.W * (q(2 * n - 1, 4) * c.theta2) + c.theta_wedge_jtheta() * q(1, 4) +
                       (e3 - T(e3)) * q(n, 2) - c.psj(3, 3) * Scalar(2) + c.pfj(3, 3);
    eq(k, "rho^h", rhoh, rhs);
}

void p410(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const Matrix rU11 = c.inv(to_matrix(c.a.forms.minimal.r));
    const Matrix p12 = c.pf(1, 2);
    const Matrix e3 = c.th_eval(3);
    const Matrix rhs = c.rj(rU11) * Scalar(-2) - c.divl(3) - (c.nt + c.jj(c.nt)) * q(n - 2, 4) +
                       c.I * (q(1, 4) * (c.dstar + q(2 * n - 7, 2) * c.theta2)) - c.pf(2, 2) * Scalar(2) -
                       c.ps(2, 2) + c.pf(3, 3) * Scalar(2) - c.theta_sq_plus() * q(n - 6, 8) + p12 +
                       T(p12) * q(5, 2) + e3 * q(n - 6, 2) - T(e3) * Scalar(2);
    eq(k, "1/2 (Ric + 3 Ric*)_[lambda^{1,1}]", c.a.components.ric_plus_3ric_star_11 * q(1, 2), rhs);
}

Scalar ru_omega(const Ctx& c) { return inner(c.a.forms.minimal.r, c.s.omega); }

void c411(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const auto& nm = c.a.dec.norms;
    const Scalar rhs = Scalar(8) * ru_omega(c) + Scalar(2 * (n - 1)) * c.dstar +
                       Scalar((n - 3) * (n - 1)) * c.theta2 - Scalar(6) * nm[1] + Scalar(4) * nm[2];
    eq(k, "s + 3 s*", scalar_matrix(c.a.ricci.s + Scalar(3) * c.a.ricci.s_star), scalar_matrix(rhs));
}

void c411s(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const auto& nm = c.a.dec.norms;
    const Scalar rhs = Scalar(2) * ru_omega(c) + Scalar(2 * (n - 1)) * c.dstar +
                       q((2 * n - 3) * (n - 1), 2) * c.theta2 + Scalar(3) * nm[0] - Scalar(3) * nm[1] + nm[2];
    eq(k, "s", scalar_matrix(c.a.ricci.s), scalar_matrix(rhs));
}

void c411ss(const Ctx& c, IdentityCheck& k) {
    const int n = c.n;
    const auto& nm = c.a.dec.norms;
    const Scalar rhs = Scalar(2) * ru_omega(c) - q(n - 1, 2) * c.theta2 - nm[0] - nm[1] + nm[2];
    eq(k, "s*", scalar_matrix(c.a.ricci.s_star), scalar_matrix(rhs));
}

void r47(const Ctx& c, IdentityCheck& k) {
    if (!c.a.su) return skip(k, c.s.su_note.empty() ? "no complex volume form" : c.s.su_note);
    const ScalarForm d = exterior_derivative(c.s.algebra, c.a.su->eta_hat);
    eq(k, "r^U = -n d eta_hat", to_matrix(c.a.forms.minimal.r), to_matrix(d) * Scalar(-c.n));
}

void f1(const Ctx& c, IdentityCheck& k) {
    const auto dj = derivative_of_j(c.s, c.a.lc);
    Tensor3<Scalar> lhs(c.N);
    Tensor3<Scalar> rhs(c.N);
    for (int x = 0; x < c.N; ++x) {
        const Matrix two_j_xi = mul(c.J, xi_along(c.a.xi, basis_vector(c.N, x))) * Scalar(2);
        for (int u = 0; u < c.N; ++u) {
            for (int w = 0; w < c.N; ++w) {
                lhs(x, u, w) = dj[static_cast<std::size_t>(x)](w, u);
                rhs(x, u, w) = two_j_xi(w, u);
            }
        }
    }
    eq(k, "nabla J = 2 J xi", column(lhs), column(rhs));
    eq(k, "xi_X skew", truth(is_skew_torsion(c.a.xi)), truth(true));
    eq(k, "xi_X J + J xi_X = 0", truth(anticommutes_with_j(c.s, c.a.xi)), truth(true));
}

void f2(const Ctx& c, IdentityCheck& k) {
    if (!c.hermitian()) return skip(k, "structure not Hermitian");
    const Tensor3<Scalar> Th = torsion(c.s.algebra, c.a.chern.connection);
    const int N = c.N;
    Tensor3<Scalar> lhs(N);
    Tensor3<Scalar> rhs(N);
    for (int X = 0; X < N; ++X) {
        for (int Y = 0; Y < N; ++Y) {
            for (int w = 0; w < N; ++w) {
                Scalar a;
                Scalar b;
                for (int m = 0; m < N; ++m) {
                    a += c.J(m, X) * Th(m, Y, w);
                    b += c.J(w, m) * Th(X, Y, m);
                }
                lhs(X, Y, w) = a;
                rhs(X, Y, w) = b;
            }
        }
    }
    eq(k, "T^h(JX, Y) = J T^h(X, Y)", column(lhs), column(rhs));
    eq(k, "Chern connection unitary", truth(c.a.chern.is_unitary), truth(true));
}

void f3(const Ctx& c, IdentityCheck& k) {
    Tensor3<Scalar> sum(c.N);
    for (const auto& part : c.x) sum += part;
    eq(k, "sum xi_(i) = xi", column(sum), column(c.a.xi));
}

void f4(const Ctx& c, IdentityCheck& k) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            eq(k, "<xi_(" + std::to_string(i + 1) + "), xi_(" + std::to_string(j + 1) + ")>",
               scalar_matrix(inner(c.x[static_cast<std::size_t>(i)], c.x[static_cast<std::size_t>(j)])),
               scalar_matrix(Scalar()));
        }
    }
    eq(k, "<xi1_{e_j} e_i, xi2_{e_j} J e_i>", scalar_matrix(c.pfj(1, 2).trace()), scalar_matrix(Scalar()));
}

void f5(const Ctx& c, IdentityCheck& k) {
    const auto& z = c.zero;
    eq(k, "N = 0 <=> xi1 = xi2 = 0", truth(c.a.nijenhuis.is_zero()), truth(z[0] && z[1]));
    eq(k, "d omega = 0 <=> xi1 = xi3 = xi4 = 0", truth(c.a.domega.is_zero()), truth(z[0] && z[2] && z[3]));
    eq(k, "theta = 0 <=> xi4 = 0", truth(c.theta.is_zero()), truth(z[3]));
}

void f6(const Ctx& c, IdentityCheck& k) {
    const auto& xi = c.a.xi;
    const Matrix& J = c.J;
    const auto term = [&](int y, int z, int w) {
        Scalar acc;
        for (int m = 0; m < c.N; ++m) {
            if (!J(m, w).is_zero()) acc += xi(y, z, m) * J(m, w);
        }
        return acc;
    };
    const ScalarForm rhs = tabulate<Scalar>(c.N, 3, [&](std::span<const int> i) {
        return term(i[0], i[1], i[2]) + term(i[2], i[0], i[1]) + term(i[1], i[2], i[0]);
    });
    eq(k, "1/2 d omega", column(c.a.domega * q(1, 2)), column(rhs));
}

/// 1-form part of a 3-form in [lambda^{1,0}] ^ omega, found from the contraction with omega.
ScalarForm lefschetz_part(const Ctx& c, const ScalarForm& beta) {
    const auto contract = [&](const ScalarForm& f) {
        ScalarForm out(c.N, 1);
        for (int x = 0; x < c.N; ++x) {
            Scalar acc;
            for (int i = 0; i < c.N; ++i) {
                for (int j = 0; j < c.N; ++j) {
                    if (!c.W(i, j).is_zero()) acc += c.W(i, j) * f({i, j, x});
                }
            }
            out.coeff(Mask{1} << x) = acc;
        }
        return out;
    };
    const ScalarForm probe = ScalarForm::basis(c.N, {0});
    const Scalar scale = contract(wedge(probe, c.s.omega)).coeff(1);
    return contract(beta) * inverse(scale);
}

void f7(const Ctx& c, IdentityCheck& k) {
    if (!c.hermitian()) return skip(k, "structure not Hermitian");
    const ScalarForm alpha = lefschetz_part(c, c.a.domega);
    eq(k, "(d omega)_{W4} = theta ^ omega", column(wedge(alpha, c.s.omega)), column(wedge(c.theta, c.s.omega)));
}

const std::vector<Entry>& catalog() {
    static const std::vector<Entry> entries = {
        {"L3.1a", "<D^U_{e_j} xi4_{e_i} e_i, J e_j> = 0", l31a},
        {"L3.1b", "skew [lambda^{1,1}] identity from d^2 omega = 0", l31b},
        {"L3.1c", "[lambda^{2,0}] identity from d^2 omega = 0", l31c},
        {"E3.1", "d^2 omega in terms of D^U xi and xi", e31},
        {"R3.3", "R = R^U + (D^U xi) terms, and its omega alternation", r33},
        {"P3.4R", "(d theta)_{R omega} = 0", p34r},
        {"P3.4H", "(d theta)_{[lambda_0^{1,1}]} from torsion", p34h},
        {"P3.4S", "(d theta)_{[lambda^{2,0}]} from torsion", p34s},
        {"P3.6i", "W2+W4, n > 2: d theta = 0", p36i},
        {"P3.6ii", "W1+W4, n > 2: (d theta)_{[lambda_0^{1,1}]} = 0; theta = 0 if xi1 != 0", p36ii},
        {"SU3", "SU(3) structure equations for W1+W4", su3},
        {"E4.1", "Ric - Ric* from D^U xi", e41},
        {"E4.2", "(Ric - Ric*)_{[lambda^{1,1}]} from torsion components", e42},
        {"L4.1", "s - s* = 2(n-1) d*theta + (n-1)^2 |theta|^2 + 4|xi1|^2 - 2|xi2|^2", l41},
        {"E4.4", "Ric*_{[lambda^{2,0}]} from torsion components", e44},
        {"E4.5", "Ric*_{[lambda^{2,0}]}, second expression", e45},
        {"SIGMA", "Ric_{[[sigma^{2,0}]]} from torsion components", sigma},
        {"P4.3i", "W1+W2+W4: Ric*_{[lambda^{2,0}]}", p43i},
        {"P4.3ia", "W1+W4: Ric*_{[lambda^{2,0}]} = (n+1)/6 d theta", p43ia},
        {"P4.3ib", "W2+W4: Ric*_{[lambda^{2,0}]}", p43ib},
        {"P4.3iia", "W3+W4: Ric*_{[lambda^{2,0}]} = (n-1)/2 (d theta)_{[lambda^{2,0}]}", p43iia},
        {"P4.3iib", "W3+W4, n = 2: (Ric - Ric*)_{[lambda_0^{1,1}]} = 0", p43iib},
        {"P4.4", "W1+W4 or W3+W4: Ric_{[[sigma^{2,0}]]} from nabla theta", p44},
        {"P4.6i", "U(n)-connections: rho in [lambda^{1,1}], r closed", p46i},
        {"P4.6ii", "Ric*(X, JY) = rho = r = r^U + ...", p46ii},
        {"P4.6iii", "rho_{[lambda^{1,1}]} = rho^U + ...", p46iii},
        {"P4.8i", "r^h = r^U + (n-1)/2 dJtheta", p48i},
        {"P4.8ii", "rho^h from rho and torsion", p48ii},
        {"P4.10", "(Ric + 3 Ric*)_{[lambda^{1,1}]} from r^U and torsion", p410},
        {"C4.11", "s + 3 s* from <r^U, omega> and torsion norms", c411},
        {"C4.11-s", "s from <r^U, omega> and torsion norms", c411s},
        {"C4.11-s*", "s* from <r^U, omega> and torsion norms", c411ss},
        {"R4.7", "r^U = -n d eta_hat", r47},
        {"F1", "nabla J = 2 J xi; xi skew and J-anticommuting", f1},
        {"F2", "Chern torsion T^h(JX, Y) = J T^h(X, Y)", f2},
        {"F3", "xi = xi_(1) + xi_(2) + xi_(3) + xi_(4)", f3},
        {"F4", "components mutually orthogonal", f4},
        {"F5", "class characterizations by N, d omega and theta", f5},
        {"F6", "1/2 d omega from xi", f6},
        {"F7", "(d omega)_{W4} = theta ^ omega on Hermitian structures", f7},
    };
    return entries;
}

IdentityCheck evaluate(const Ctx& c, const Entry& e) {
    IdentityCheck k;
    k.id = e.id;
    k.statement = e.statement;
    try {
        e.build(c, k);
    } catch (const std::exception& ex) {
        throw AuditError(e.id, ex.what());
    }
    if (k.applicable) {
        k.passed = true;
        for (const auto& e2 : k.equations) k.passed = k.passed && e2.holds();
    }
    return k;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : catalog()) out.push_back(e.id);
        return out;
    }();
    return ids;
}

IdentityCheck run_identity(const Analysis& a, std::string_view id) {
    for (const auto& e : catalog()) {
        if (e.id == id) return evaluate(Ctx(a), e);
    }
    throw std::out_of_range("unknown identity id: " + std::string(id));
}

AuditReport run_suite(const Analysis& a) {
    AuditReport r;
    r.structure = a.s.name;
    const Ctx c(a);
    for (const auto& e : catalog()) r.checks.push_back(evaluate(c, e));
    return r;
}

}  // namespace ahg
