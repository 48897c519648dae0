// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/decomposition.hpp"

#include <set>

namespace ahg {

namespace {

const Scalar& half() {
    static const Scalar h(Rational(1, 2));
    return h;
}

Tensor3<Scalar> combine(const Tensor3<Scalar>& a, const Tensor3<Scalar>& b, int sign) {
    Tensor3<Scalar> out = sign > 0 ? a + b : a - b;
    out *= half();
    return out;
}

void require_torsion_type(const AlmostHermitianStructure& s, const Tensor3<Scalar>& t, const char* what) {
    if (!is_skew_torsion(t)) {
        throw DecompositionError(std::string(what) + " is not skew in its last two slots");
    }
    if (!anticommutes_with_j(s, t)) {
        throw DecompositionError(std::string(what) + " does not anticommute with J");
    }
}

}  // namespace

Vector to_vector(const ScalarForm& one_form) { return sharp(one_form); }

ScalarForm lee_form_codifferential(const AlmostHermitianStructure& s) {
    if (s.n < 2) throw DecompositionError("the Lee form needs n >= 2");
    const ScalarForm dstar = codifferential(s.algebra, s.omega, s.vol);
    return j_one_form(s, dstar) * Scalar(Rational(-1, s.n - 1));
}

ScalarForm lee_form_trace(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi) {
    if (s.n < 2) throw DecompositionError("the Lee form needs n >= 2");
    const Vector tr = trace_first(xi);
    return flat(tr) * Scalar(Rational(2, s.n - 1));
}

ScalarForm lee_form(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi) {
    ScalarForm a = lee_form_codifferential(s);
    const ScalarForm b = lee_form_trace(s, xi);
    if (!(a == b)) {
        throw DecompositionError(
            "Lee form routes disagree: -(1/(n-1)) J d*omega != (2/(n-1)) sum xi_{e_i} e_i (sign convention bug)");
    }
    return a;
}

Tensor3<Scalar> t_operator(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi) {
    const int N = s.dim();
    const Matrix& J = s.J;
    Tensor3<Scalar> out(N);
    for (int a = 0; a < N; ++a) {
        for (int a2 = 0; a2 < N; ++a2) {
            if (J(a2, a).is_zero()) continue;
            for (int c = 0; c < N; ++c) {
                for (int c2 = 0; c2 < N; ++c2) {
                    if (J(c2, c).is_zero()) continue;
                    const Scalar f = J(a2, a) * J(c2, c);
                    for (int b = 0; b < N; ++b) {
                        const Scalar& v = xi(a2, b, c2);
                        if (!v.is_zero()) out(a, b, c) += f * v;
                    }
                }
            }
        }
    }
    return out;
}

Tensor3<Scalar> xi4_from_lee(const AlmostHermitianStructure& s, const ScalarForm& theta) {
    const int N = s.dim();
    const Matrix& J = s.J;
    const Vector t = sharp(theta);
    const Vector jt = sharp(j_one_form(s, theta));
    const Scalar quarter(Rational(1, 4));
    Tensor3<Scalar> out(N);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            for (int c = 0; c < N; ++c) {
                Scalar v;
                if (a == b) v += t(c);
                if (a == c) v -= t(b);
                v -= J(b, a) * jt(c);
                v += jt(b) * J(c, a);
                if (!v.is_zero()) out(a, b, c) = quarter * v;
            }
        }
    }
    return out;
}

bool is_skew_torsion(const Tensor3<Scalar>& xi) {
    const int N = xi.dim();
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            for (int c = b; c < N; ++c) {
                if (!(xi(a, b, c) == -xi(a, c, b))) return false;
            }
        }
    }
    return true;
}

bool anticommutes_with_j(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi) {
    // <J xi_X Y + xi_X JY, Z> = sum_c J(Z,c) xi(X,Y,c) + sum_m J(m,Y) xi(X,m,Z)
    const int N = s.dim();
    const Matrix& J = s.J;
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            for (int z = 0; z < N; ++z) {
                Scalar v;
                for (int m = 0; m < N; ++m) {
                    if (!J(z, m).is_zero() && !xi(x, y, m).is_zero()) v += J(z, m) * xi(x, y, m);
                    if (!J(m, y).is_zero() && !xi(x, m, z).is_zero()) v += J(m, y) * xi(x, m, z);
                }
                if (!v.is_zero()) return false;
            }
        }
    }
    return true;
}

TorsionDecomposition split_torsion(const AlmostHermitianStructure& s, const Tensor3<Scalar>& xi,
                                   const ScalarForm& theta) {
    const int N = s.dim();
    require_torsion_type(s, xi, "xi");
    const Tensor3<Scalar> t = t_operator(s, xi);
    const Tensor3<Scalar> plus = combine(xi, t, +1);
    const Tensor3<Scalar> minus = combine(xi, t, -1);

    TorsionDecomposition dec;
    dec.theta = theta;
    Tensor3<Scalar> x1(N);
    const Scalar third(Rational(1, 3));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            for (int c = 0; c < N; ++c) {
                Scalar v = minus(a, b, c) + minus(b, c, a) + minus(c, a, b);
                if (!v.is_zero()) x1(a, b, c) = third * v;
            }
        }
    }
    dec.xi[0] = x1;
    dec.xi[1] = minus - x1;
    dec.xi[3] = xi4_from_lee(s, theta);
    dec.xi[2] = plus - dec.xi[3];

    static const char* names[4] = {"xi_(1)", "xi_(2)", "xi_(3)", "xi_(4)"};
    for (int i = 0; i < 4; ++i) {
        require_torsion_type(s, dec.xi[static_cast<std::size_t>(i)], names[i]);
        dec.norms[static_cast<std::size_t>(i)] = norm2(dec.xi[static_cast<std::size_t>(i)]);
    }
    if (s.n == 2 && !(dec.xi[0].is_zero() && dec.xi[2].is_zero())) {
        throw DecompositionError("n = 2 but xi_(1) or xi_(3) is nonzero");
    }
    return dec;
}

GHClass classify(const TorsionDecomposition& dec, const ScalarContext& ctx) {
    GHClass out;
    std::string modules;
    for (int i = 0; i < 4; ++i) {
        out.present[static_cast<std::size_t>(i)] = !dec.norms[static_cast<std::size_t>(i)].is_zero();
        if (out.present[static_cast<std::size_t>(i)]) {
            if (!modules.empty()) modules += "+";
            modules += "W" + std::to_string(i + 1);
        }
    }
    out.modules = modules.empty() ? "0" : modules;
    const auto& p = out.present;
    const int key = (p[0] ? 1 : 0) | (p[1] ? 2 : 0) | (p[2] ? 4 : 0) | (p[3] ? 8 : 0);
    switch (key) {
        case 0: out.label = "Kähler"; break;
        case 1: out.label = "nearly Kähler"; break;
        case 2: out.label = "almost Kähler"; break;
        case 3: out.label = "quasi-Kähler"; break;
        case 4: out.label = "balanced"; break;
        case 7: out.label = "semi-Kähler"; break;
        case 8: out.label = "locally conformal Kähler"; break;
        case 12: out.label = "Hermitian"; break;
        default: out.label = out.modules; break;
    }

    for (int i = 0; i < 4; ++i) {
        const Scalar& norm = dec.norms[static_cast<std::size_t>(i)];
        if (norm.is_zero() || norm.is_constant()) continue;
        std::set<std::size_t> used;
        for (const auto& term : norm.terms()) {
            for (std::size_t k = 0; k < term.mono.size(); ++k) {
                if (term.mono.exponent(k) != 0) used.insert(k);
            }
        }
        if (used.size() != 1) continue;
        const std::size_t index = *used.begin();
        for (const auto& r : rational_roots(norm, index)) {
            const std::string name = index < ctx.parameters.size() ? ctx.parameters[index] : "p" + std::to_string(index);
            out.specializations.push_back(Specialization{name, r, i + 1});
        }
    }
    return out;
}

TwoFormSplit split_two_form(const AlmostHermitianStructure& s, const ScalarForm& a) {
    if (a.degree() != 2) throw DecompositionError("split_two_form needs a 2-form");
    const Matrix M = to_matrix(a);
    const Matrix JMJ = mul(mul(Matrix(s.J.transpose()), M), s.J);
    const Matrix inv = (M + JMJ) * half();
    const Matrix anti = (M - JMJ) * half();
    TwoFormSplit out;
    out.r_omega = s.omega * (inner(a, s.omega) / Scalar(s.n));
    out.lambda0_11 = from_matrix(inv) - out.r_omega;
    out.lambda20 = from_matrix(anti);
    return out;
}

Matrix j_invariant_part(const AlmostHermitianStructure& s, const Matrix& b) {
    const Matrix JbJ = mul(mul(Matrix(s.J.transpose()), b), s.J);
    return (b + JbJ) * half();
}

Matrix j_anti_invariant_part(const AlmostHermitianStructure& s, const Matrix& b) {
    const Matrix JbJ = mul(mul(Matrix(s.J.transpose()), b), s.J);
    return (b - JbJ) * half();
}

BilinearSplit split_bilinear(const AlmostHermitianStructure& s, const Matrix& b) {
    const int N = s.dim();
    const Matrix sym = (b + Matrix(b.transpose())) * half();
    const Matrix skew = (b - Matrix(b.transpose())) * half();
    Scalar tr;
    for (int i = 0; i < N; ++i) tr += sym(i, i);
    BilinearSplit out;
    out.trace_part = Matrix::Identity(N, N) * (tr / Scalar(N));
    out.lambda0_11 = j_invariant_part(s, sym) - out.trace_part;
    out.sigma20 = j_anti_invariant_part(s, sym);
    out.lambda11_skew = j_invariant_part(s, skew);
    out.lambda20 = j_anti_invariant_part(s, skew);
    return out;
}

BilinearSplit split_symmetric(const AlmostHermitianStructure& s, const Matrix& b) {
    if (!exactly_equal(b, Matrix(b.transpose()))) throw DecompositionError("split_symmetric: input is not symmetric");
    return split_bilinear(s, b);
}

Matrix pair_first(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B) {
    const int N = A.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int c = 0; c < N; ++c) {
                    const Scalar& u = A(x, i, c);
                    if (u.is_zero()) continue;
                    const Scalar& v = B(y, i, c);
                    if (!v.is_zero()) acc += u * v;
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Matrix pair_second(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B) {
    const int N = A.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int c = 0; c < N; ++c) {
                    const Scalar& u = A(i, x, c);
                    if (u.is_zero()) continue;
                    const Scalar& v = B(i, y, c);
                    if (!v.is_zero()) acc += u * v;
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Matrix pair_first_j(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B, const Matrix& J) {
    const int N = A.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int m = 0; m < N; ++m) {
                    if (J(m, i).is_zero()) continue;
                    for (int c = 0; c < N; ++c) {
                        const Scalar& u = A(x, i, c);
                        if (u.is_zero()) continue;
                        const Scalar& v = B(y, m, c);
                        if (!v.is_zero()) acc += J(m, i) * u * v;
                    }
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Matrix pair_second_j(const Tensor3<Scalar>& A, const Tensor3<Scalar>& B, const Matrix& J) {
    const int N = A.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int i = 0; i < N; ++i) {
                for (int m = 0; m < N; ++m) {
                    if (J(m, i).is_zero()) continue;
                    for (int c = 0; c < N; ++c) {
                        const Scalar& u = A(i, x, c);
                        if (u.is_zero()) continue;
                        const Scalar& v = B(m, y, c);
                        if (!v.is_zero()) acc += J(m, i) * u * v;
                    }
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Matrix along(const Tensor3<Scalar>& A, const Vector& v) {
    const int N = A.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int a = 0; a < N; ++a) {
        if (v(a).is_zero()) continue;
        for (int x = 0; x < N; ++x) {
            for (int y = 0; y < N; ++y) {
                if (!A(a, x, y).is_zero()) out(x, y) += v(a) * A(a, x, y);
            }
        }
    }
    return out;
}

Matrix evaluate_on(const Tensor3<Scalar>& A, const ScalarForm& a) {
    const int N = A.dim();
    const Vector v = sharp(a);
    Matrix out = Matrix::Zero(N, N);
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            Scalar acc;
            for (int c = 0; c < N; ++c) {
                if (!v(c).is_zero() && !A(x, y, c).is_zero()) acc += A(x, y, c) * v(c);
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Vector trace_first(const Tensor3<Scalar>& A) {
    const int N = A.dim();
    Vector out = Vector::Zero(N);
    for (int i = 0; i < N; ++i) {
        for (int c = 0; c < N; ++c) {
            if (!A(i, i, c).is_zero()) out(c) += A(i, i, c);
        }
    }
    return out;
}

Matrix divergence_first(const Tensor4<Scalar>& DA) {
    const int N = DA.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        for (int x = 0; x < N; ++x) {
            for (int y = 0; y < N; ++y) {
                if (!DA(i, i, x, y).is_zero()) out(x, y) += DA(i, i, x, y);
            }
        }
    }
    return out;
}

Matrix divergence_last(const Tensor4<Scalar>& DA) {
    const int N = DA.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        for (int x = 0; x < N; ++x) {
            for (int y = 0; y < N; ++y) {
                if (!DA(i, x, y, i).is_zero()) out(x, y) += DA(i, x, y, i);
            }
        }
    }
    return out;
}

Matrix divergence_last_j(const Tensor4<Scalar>& DA, const Matrix& J) {
    const int N = DA.dim();
    Matrix out = Matrix::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        for (int m = 0; m < N; ++m) {
            if (J(m, i).is_zero()) continue;
            for (int x = 0; x < N; ++x) {
                for (int y = 0; y < N; ++y) {
                    if (!DA(i, x, y, m).is_zero()) out(x, y) += J(m, i) * DA(i, x, y, m);
                }
            }
        }
    }
    return out;
}

DThetaReport dtheta_report(const AlmostHermitianStructure& s, const Connection& minimal,
                           const TorsionDecomposition& dec) {
    const int n = s.n;
    DThetaReport out;
    out.dtheta = exterior_derivative(s.algebra, dec.theta);
    out.parts = split_two_form(s, out.dtheta);
    if (!out.parts.r_omega.is_zero()) throw DecompositionError("(d theta)_{R omega} != 0");
    out.trivial = n == 2;

    const Scalar k(Rational(n - 2, 2));
    const auto& x1 = dec.xi[0];
    const auto& x2 = dec.xi[1];
    const auto& x3 = dec.xi[2];
    const Vector t = sharp(dec.theta);
    const Tensor4<Scalar> d1 = covariant_derivative(minimal, x1);
    const Tensor4<Scalar> d3 = covariant_derivative(minimal, x3);
    const auto T = [](const Matrix& m) { return Matrix(m.transpose()); };

    out.lhs_lambda0 = to_matrix(out.parts.lambda0_11) * k;
    const Matrix div3 = divergence_last(d3);
    const Matrix e3 = evaluate_on(x3, dec.theta);
    const Matrix p12 = pair_first(x1, x2);
    out.rhs_lambda0 = -div3 + T(div3) + (e3 - T(e3)) * k + (T(p12) - p12) * Scalar(Rational(3, 2));

    out.lhs_lambda20 = to_matrix(out.parts.lambda20) * k;
    const Matrix p31 = pair_first(x3, x1);
    const Matrix p32 = pair_first(x3, x2);
    out.rhs_lambda20 = divergence_first(d1) * Scalar(-3) + divergence_first(d3) + p31 - T(p31) +
                       (T(p32) - p32) * Scalar(Rational(1, 2)) + along(x1, t) * Scalar(Rational(3 * (n - 3), 2)) -
                       along(x3, t) * Scalar(Rational(n - 1, 2));
    return out;
}

Scalar norm2(const Tensor3<Scalar>& t) { return inner(t, t); }

Scalar norm2(const ScalarForm& a) { return inner(a, a); }

}  // namespace ahg
