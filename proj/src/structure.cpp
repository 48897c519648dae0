// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/structure.hpp"

#include <array>

namespace ahg {

const char* to_string(ConnectionKind kind) {
    switch (kind) {
        case ConnectionKind::levi_civita: return "levi_civita";
        case ConnectionKind::minimal: return "minimal";
        case ConnectionKind::chern: return "chern";
        case ConnectionKind::custom: return "custom";
    }
    return "custom";
}

Matrix Connection::matrix(int i) const {
    const int n = gamma.dim();
    Matrix A = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) A(l, k) = gamma(i, k, l);
    }
    return A;
}

namespace {

Matrix inverse_matrix(const Matrix& m) {
    const Eigen::Index n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw StructureError("metric frame is singular");
        a.row(col).swap(a.row(piv));
        inv.row(col).swap(inv.row(piv));
        const Scalar p = a(col, col);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Scalar f = a(r, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Columns of the returned P form a G-orthonormal frame (Gram-Schmidt).
Matrix orthonormal_frame(const Matrix& G, long d) {
    const Eigen::Index n = G.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!(G(i, j) == G(j, i))) throw StructureError("metric is not symmetric");
            if (!G(i, j).is_constant()) throw StructureError("metric entries must be parameter-free");
        }
    }
    auto ip = [&](const Vector& u, const Vector& v) {
        Scalar acc;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (u(i).is_zero()) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (v(j).is_zero() || G(i, j).is_zero()) continue;
                acc += u(i) * G(i, j) * v(j);
            }
        }
        return acc;
    };
    Matrix P = Matrix::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        Vector v = Vector::Zero(n);
        v(a) = Scalar(1);
        for (Eigen::Index b = 0; b < a; ++b) {
            const Vector fb = P.col(b);
            const Scalar c = ip(v, fb);
            if (!c.is_zero()) v -= fb * c;
        }
        const Scalar norm2 = ip(v, v);
        if (norm2.is_zero()) throw StructureError("metric is degenerate");
        auto [p, q] = norm2.constant_parts();
        if (q == 0 && p < 0) throw StructureError("metric is not positive definite");
        auto root = exact_sqrt(norm2, d);
        if (!root) {
            throw StructureError("orthonormalizing the metric needs a square root outside Q(sqrt(" +
                                 std::to_string(d) + "))");
        }
        P.col(a) = v / *root;
    }
    return P;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, const Matrix& Q) {
    const int n = L.dim();
    std::vector<Bracket> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            Vector fa = P.col(a);
            Vector fb = P.col(b);
            Vector br = Q * L.bracket(fa, fb);
            Bracket bk{a, b, {}};
            for (int k = 0; k < n; ++k) {
                if (!br(k).is_zero()) bk.coeffs[k] = br(k);
            }
            if (!bk.coeffs.empty()) out.push_back(std::move(bk));
        }
    }
    return LieAlgebra::from_brackets(n, out);
}

Scalar factorial(int n) {
    Scalar f(1);
    for (int i = 2; i <= n; ++i) f *= Scalar(i);
    return f;
}

}  // namespace

ScalarForm pull_back(const ScalarForm& a, const Matrix& P) {
    std::vector<int> slots(static_cast<std::size_t>(a.degree()));
    for (int s = 0; s < a.degree(); ++s) slots[static_cast<std::size_t>(s)] = s;
    return tabulate<Scalar>(a.dim(), a.degree(), [&](std::span<const int> idx) {
        return value_with(a, P, idx, std::span<const int>(slots));
    });
}

ScalarForm volume_form(const ScalarForm& omega, int n) {
    ScalarForm p = ScalarForm::constant(omega.dim(), Scalar(1));
    for (int i = 0; i < n; ++i) p = wedge(p, omega);
    Scalar scale = inverse(factorial(n));
    if (((n * (n + 1)) / 2) & 1) scale = -scale;
    return p * scale;
}

AlmostHermitianStructure build_structure(const StructureInput& input) {
    const int N = input.algebra.dim();
    if (N % 2 != 0) throw StructureError("dimension must be even");
    if (input.omega.dim() != N || input.omega.degree() != 2) {
        throw StructureError("Kähler form must be a 2-form on the algebra");
    }
    if (auto jac = jacobi_check(input.algebra); !jac.passed) {
        const auto& w = *jac.witness;
        throw StructureError("Jacobi identity fails at (i, j, k, l) = (" + std::to_string(w.i + 1) + ", " +
                             std::to_string(w.j + 1) + ", " + std::to_string(w.k + 1) + ", " +
                             std::to_string(w.l + 1) + ")");
    }
    AlmostHermitianStructure s;
    s.name = input.name;
    s.context = input.context;
    s.n = N / 2;
    if (input.metric) {
        const Matrix P = orthonormal_frame(*input.metric, input.context.d);
        const Matrix Q = inverse_matrix(P);
        s.frame = P;
        s.algebra = change_basis(input.algebra, P, Q);
        s.omega = pull_back(input.omega, P);
    } else {
        s.frame = Matrix::Identity(N, N);
        s.algebra = input.algebra;
        s.omega = input.omega;
    }
    const ScalarForm vol = volume_form(s.omega, s.n);
    const Mask full = (Mask{1} << N) - 1;
    s.vol = vol.coeff(full);
    if (s.vol.is_zero()) throw StructureError("Kähler form is degenerate");
    s.J = to_matrix(s.omega);
    if (!exactly_equal(mul(s.J, s.J), Matrix(-Matrix::Identity(N, N)))) {
        throw StructureError("J^2 = -Id fails for the J defined by omega = <., J.>");
    }
    // <JX, JY> = <X, Y> follows from J^2 = -Id and the skew symmetry of omega.
    if (!exactly_equal(mul(Matrix(s.J.transpose()), s.J), Matrix(Matrix::Identity(N, N)))) {
        throw StructureError("compatibility <JX, JY> = <X, Y> fails");
    }
    if (!(s.vol * s.vol == Scalar(1))) throw StructureError("volume form is not unit length");

    if (input.psi_plus) {
        ScalarForm psi = input.metric ? pull_back(*input.psi_plus, s.frame) : *input.psi_plus;
        attach_complex_volume(s, psi);
    } else if (s.n == 3) {
        const ScalarForm domega = exterior_derivative(s.algebra, s.omega);
        const ScalarForm d30 = project_30(domega, s.J);
        if (d30.is_zero()) {
            s.su_note = "no complex volume form supplied and d(omega) has no [lambda^{3,0}] part";
        } else {
            const Scalar norm2 = inner(d30, d30);
            auto norm = exact_sqrt(norm2, s.context.d);
            if (!norm) {
                s.su_note = "|d(omega)_{[lambda^{3,0}]}| is not in the coefficient field";
            } else {
                // psi_+ = d(omega)_{30} / (3 w), w = |d(omega)_{30}| / 6
                attach_complex_volume(s, d30 * (Scalar(2) / *norm));
            }
        }
    } else {
        s.su_note = "no complex volume form supplied";
    }
    return s;
}

void attach_complex_volume(AlmostHermitianStructure& s, const ScalarForm& psi_plus) {
    const int N = s.dim();
    if (s.n != 2 && s.n != 3) throw StructureError("complex volume forms are supported for n = 2 and n = 3 only");
    if (psi_plus.dim() != N || psi_plus.degree() != s.n) {
        throw StructureError("psi_+ must be an n-form");
    }
    const ScalarForm minus1 = j_slot(psi_plus, s.J, 0);
    const ScalarForm minus2 = j_slot(psi_plus, s.J, 1);
    if (!(minus1 == minus2)) {
        throw StructureError("psi_+ is not of type (n,0)+(0,n): J_(1) psi_+ != J_(2) psi_+");
    }
    const Mask full = (Mask{1} << N) - 1;
    if (s.n == 2) {
        const Scalar top = wedge(psi_plus, psi_plus).coeff(full);
        if (!(top == Scalar(-2) * s.vol)) throw StructureError("volume relation psi_+ ^ psi_+ = -2 Vol fails");
    } else {
        const Scalar top = wedge(psi_plus, minus1).coeff(full);
        if (!(top == Scalar(-4) * s.vol)) throw StructureError("volume relation Vol = -1/4 psi_+ ^ psi_- fails");
    }
    s.psi_plus = psi_plus;
    s.psi_minus = minus1;
    s.su_note.clear();
}

ScalarForm j_one_form(const AlmostHermitianStructure& s, const ScalarForm& a) {
    return j_slot(a, s.J, 0);
}

Tensor3<Scalar> nijenhuis(const AlmostHermitianStructure& s) {
    const int N = s.dim();
    const LieAlgebra& L = s.algebra;
    Tensor3<Scalar> out(N);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            Vector x = Vector::Zero(N);
            Vector y = Vector::Zero(N);
            x(i) = Scalar(1);
            y(j) = Scalar(1);
            const Vector jx = s.J * x;
            const Vector jy = s.J * y;
            Vector v = L.bracket(x, y) + s.J * L.bracket(jx, y) + s.J * L.bracket(x, jy) - L.bracket(jx, jy);
            for (int k = 0; k < N; ++k) {
                out(i, j, k) = v(k);
                out(j, i, k) = -v(k);
            }
        }
    }
    return out;
}

Connection levi_civita(const LieAlgebra& L) {
    const int N = L.dim();
    Connection D{ConnectionKind::levi_civita, Tensor3<Scalar>(N)};
    const Scalar half = Scalar(Rational(1, 2));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k < N; ++k) {
                Scalar v = L.c(k, i, j) - L.c(i, j, k) + L.c(j, k, i);
                if (!v.is_zero()) D.gamma(i, j, k) = half * v;
            }
        }
    }
    return D;
}

Tensor3<Scalar> intrinsic_torsion(const AlmostHermitianStructure& s, const Connection& lc) {
    const int N = s.dim();
    Tensor3<Scalar> xi(N);
    const Scalar minus_half = Scalar(Rational(-1, 2));
    for (int a = 0; a < N; ++a) {
        const Matrix A = lc.matrix(a);
        const Matrix nablaJ = mul(A, s.J) - mul(s.J, A);
        const Matrix X = mul(s.J, nablaJ);
        for (int b = 0; b < N; ++b) {
            for (int c = 0; c < N; ++c) {
                if (!X(c, b).is_zero()) xi(a, b, c) = minus_half * X(c, b);
            }
        }
    }
    return xi;
}

Connection minimal_connection(const Connection& lc, const Tensor3<Scalar>& xi) {
    return Connection{ConnectionKind::minimal, lc.gamma + xi};
}

Tensor3<Scalar> chern_torsion(const Tensor3<Scalar>& xi) {
    const int N = xi.dim();
    Tensor3<Scalar> h(N);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            for (int c = 0; c < N; ++c) h(a, b, c) = xi(a, b, c) + xi(b, a, c) - xi(c, a, b);
        }
    }
    return h;
}

std::vector<Matrix> derivative_of_j(const AlmostHermitianStructure& s, const Connection& D) {
    std::vector<Matrix> out;
    for (int x = 0; x < s.dim(); ++x) {
        const Matrix A = D.matrix(x);
        out.push_back(mul(A, s.J) - mul(s.J, A));
    }
    return out;
}

ChernData chern_connection(const AlmostHermitianStructure& s, const Connection& lc, const Tensor3<Scalar>& xi) {
    ChernData out;
    out.xi_h = chern_torsion(xi);
    out.connection = Connection{ConnectionKind::chern, lc.gamma + out.xi_h};
    bool parallel = true;
    for (const auto& m : derivative_of_j(s, out.connection)) parallel = parallel && is_zero(m);
    out.is_unitary = parallel && is_metric(out.connection);
    return out;
}

Matrix covariant_derivative(const Connection& D, const Vector& v) {
    const int N = D.gamma.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int m = 0; m < N; ++m) {
            if (v(m).is_zero()) continue;
            for (int c = 0; c < N; ++c) {
                const Scalar& g = D.gamma(x, m, c);
                if (!g.is_zero()) out(x, c) += v(m) * g;
            }
        }
    }
    return out;
}

Matrix covariant_derivative_form(const Connection& D, const ScalarForm& a) {
    const int N = D.gamma.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int m = 0; m < N; ++m) {
                const Scalar& g = D.gamma(x, y, m);
                if (g.is_zero()) continue;
                const Scalar& am = a.coeff(Mask{1} << m);
                if (!am.is_zero()) acc -= g * am;
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Tensor3<Scalar> covariant_derivative(const Connection& D, const Matrix& t) {
    const int N = D.gamma.dim();
    Tensor3<Scalar> out(N);
    for (int x = 0; x < N; ++x) {
        for (int a = 0; a < N; ++a) {
            for (int b = 0; b < N; ++b) {
                Scalar acc;
                for (int m = 0; m < N; ++m) {
                    const Scalar& ga = D.gamma(x, a, m);
                    if (!ga.is_zero() && !t(m, b).is_zero()) acc -= ga * t(m, b);
                    const Scalar& gb = D.gamma(x, b, m);
                    if (!gb.is_zero() && !t(a, m).is_zero()) acc -= gb * t(a, m);
                }
                out(x, a, b) = acc;
            }
        }
    }
    return out;
}

Tensor4<Scalar> covariant_derivative(const Connection& D, const Tensor3<Scalar>& t) {
    const int N = D.gamma.dim();
    Tensor4<Scalar> out(N);
    for (int x = 0; x < N; ++x) {
        for (int m = 0; m < N; ++m) {
            for (int slot = 0; slot < 3; ++slot) {
                // Gamma(x, u, m) for every u: contributes -Gamma(x,u,m) t(.., m, ..) to index u in `slot`.
                for (int u = 0; u < N; ++u) {
                    const Scalar& g = D.gamma(x, u, m);
                    if (g.is_zero()) continue;
                    for (int p = 0; p < N; ++p) {
                        for (int q = 0; q < N; ++q) {
                            std::array<int, 3> src{};
                            std::array<int, 4> dst{};
                            if (slot == 0) {
                                src = {m, p, q};
                                dst = {x, u, p, q};
                            } else if (slot == 1) {
                                src = {p, m, q};
                                dst = {x, p, u, q};
                            } else {
                                src = {p, q, m};
                                dst = {x, p, q, u};
                            }
                            const Scalar& tv = t.at(src);
                            if (!tv.is_zero()) out.at(dst) -= g * tv;
                        }
                    }
                }
            }
        }
    }
    return out;
}

Tensor3<Scalar> torsion(const LieAlgebra& L, const Connection& D) {
    const int N = L.dim();
    Tensor3<Scalar> T(N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k < N; ++k) T(i, j, k) = D.gamma(i, j, k) - D.gamma(j, i, k) - L.c(k, i, j);
        }
    }
    return T;
}

bool is_metric(const Connection& D) {
    const int N = D.gamma.dim();
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int k = j; k < N; ++k) {
                if (!(D.gamma(i, j, k) == -D.gamma(i, k, j))) return false;
            }
        }
    }
    return true;
}

}  // namespace ahg
