// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file structure.hpp
 * @brief Left-invariant almost Hermitian structures and their connections.
 *
 * Everything is expressed in a g-orthonormal basis. J is recovered from the
 * Kähler form by omega(X, Y) = <X, JY>, i.e. J(k, j) = omega(e_k, e_j).
 * Connection coefficients are Gamma(i, j, k) = <D_{e_i} e_j, e_k>.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ahg/eigen_support.hpp"
#include "ahg/lie_algebra.hpp"
#include "ahg/tensor.hpp"

namespace ahg {

class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ConnectionKind { levi_civita, minimal, chern, custom };

const char* to_string(ConnectionKind kind);

struct Connection {
    ConnectionKind kind = ConnectionKind::custom;
    Tensor3<Scalar> gamma;

    /// Endomorphism D_{e_i}: column k holds D_{e_i} e_k.
    [[nodiscard]] Matrix matrix(int i) const;
};

/// Raw input of a structure, possibly in a non-orthonormal basis.
struct StructureInput {
    std::string name;
    ScalarContext context;
    LieAlgebra algebra;
    std::optional<Matrix> metric;  ///< nullopt: the basis is orthonormal
    ScalarForm omega;
    std::optional<ScalarForm> psi_plus;
};

struct AlmostHermitianStructure {
    std::string name;
    ScalarContext context;
    LieAlgebra algebra;
    ScalarForm omega;
    Matrix J;
    int n = 0;
    Scalar vol;  ///< Vol = vol * e^{1...2n}, vol = +-1
    std::optional<ScalarForm> psi_plus;
    std::optional<ScalarForm> psi_minus;
    std::string su_note;  ///< why no SU data is present, if so
    Matrix frame;         ///< columns: orthonormal frame in the input basis

    [[nodiscard]] int dim() const noexcept { return 2 * n; }
};

/// Validates the input and returns the structure in an orthonormal frame.
/// Throws StructureError naming the violated identity.
AlmostHermitianStructure build_structure(const StructureInput& input);

/// (P^* a)(X_1, .., X_p) = a(P X_1, .., P X_p).
ScalarForm pull_back(const ScalarForm& a, const Matrix& P);

/// (-1)^{n(n+1)/2} omega^n / n!
ScalarForm volume_form(const ScalarForm& omega, int n);

/// Attaches (psi_+, psi_- = J_(1) psi_+) after checking type and the volume relation.
void attach_complex_volume(AlmostHermitianStructure& s, const ScalarForm& psi_plus);

/// (J a)(X) = -a(JX) for a 1-form.
ScalarForm j_one_form(const AlmostHermitianStructure& s, const ScalarForm& a);

/// N(e_i, e_j) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY]; N(i, j, k) is the e_k component.
Tensor3<Scalar> nijenhuis(const AlmostHermitianStructure& s);

Connection levi_civita(const LieAlgebra& L);

/// xi(a, b, c) = <xi_{e_a} e_b, e_c> with xi_X = -1/2 J (nabla_X J).
Tensor3<Scalar> intrinsic_torsion(const AlmostHermitianStructure& s, const Connection& lc);

Connection minimal_connection(const Connection& lc, const Tensor3<Scalar>& xi);

/// xi^h(a, b, c) = xi(a, b, c) + xi(b, a, c) - xi(c, a, b).
Tensor3<Scalar> chern_torsion(const Tensor3<Scalar>& xi);

struct ChernData {
    Connection connection;
    Tensor3<Scalar> xi_h;
    bool is_unitary = false;
};
ChernData chern_connection(const AlmostHermitianStructure& s, const Connection& lc, const Tensor3<Scalar>& xi);

/// (D_x J) as matrices, one per basis direction; zero iff D J = 0.
std::vector<Matrix> derivative_of_j(const AlmostHermitianStructure& s, const Connection& D);

/// D_{e_x} of an invariant vector field v: out(x, c).
Matrix covariant_derivative(const Connection& D, const Vector& v);
/// (D_{e_x} a)(e_y) for a 1-form: out(x, y).
Matrix covariant_derivative_form(const Connection& D, const ScalarForm& a);
/// (D_{e_x} t)(a, b) for a (0,2)-tensor given as a matrix: out(x, a, b).
Tensor3<Scalar> covariant_derivative(const Connection& D, const Matrix& t);
/// (D_{e_x} t)(a, b, c) for a (0,3)-tensor: out(x, a, b, c).
Tensor4<Scalar> covariant_derivative(const Connection& D, const Tensor3<Scalar>& t);

/// Torsion T(i, j, k) = <D_i e_j - D_j e_i - [e_i, e_j], e_k>.
Tensor3<Scalar> torsion(const LieAlgebra& L, const Connection& D);

/// True iff Gamma(i, j, k) = -Gamma(i, k, j).
bool is_metric(const Connection& D);

}  // namespace ahg
