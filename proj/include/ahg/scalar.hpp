// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scalar.hpp
 * @brief Exact coefficient ring: polynomials in formal parameters with
 *        coefficients in Q(sqrt(d)).
 *
 * A Scalar is a finite sum  sum_m (p_m + q_m*sqrt(d)) * m  over monomials m in
 * the parameters of the owning context. Rationals are arbitrary precision
 * (GMP), so every value in a computation is exact and zero tests are
 * decidable.
 *
 * Canonical form:
 *   - no term with p = q = 0 is stored,
 *   - terms are sorted by monomial,
 *   - monomial exponent vectors carry no trailing zeros,
 *   - extension() is 0 whenever every q vanishes.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ahg {

using Rational = mpq_class;

/// Error raised by ring operations (extension mismatch, bad divisor, ...).
class ScalarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector over the parameter list, trailing zeros trimmed.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    /// Monomial consisting of a single parameter raised to `power`.
    static Monomial variable(std::size_t index, int power = 1);

    [[nodiscard]] bool is_constant() const noexcept { return exp_.empty(); }
    [[nodiscard]] int exponent(std::size_t index) const noexcept {
        return index < exp_.size() ? exp_[index] : 0;
    }
    [[nodiscard]] std::size_t size() const noexcept { return exp_.size(); }
    [[nodiscard]] int degree() const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<int> exp_;
};

/// One monomial with its coefficient p + q*sqrt(d).
struct Term {
    Monomial mono;
    Rational p;
    Rational q;
};

/// True iff `d` is a positive square-free integer (or 0, meaning "no extension").
bool is_square_free(long d);

class Scalar {
public:
    Scalar() = default;
    Scalar(long value);                        // NOLINT(google-explicit-constructor)
    Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
    Scalar(const Rational& value);             // NOLINT(google-explicit-constructor)

    /// p + q*sqrt(d); throws if d is not square-free.
    static Scalar quadratic(const Rational& p, const Rational& q, long d);
    /// sqrt(d) itself.
    static Scalar root(long d) { return quadratic(0, 1, d); }
    /// Parameter with index `index` (raised to `power`).
    static Scalar parameter(std::size_t index, int power = 1);

    /// Canonicalizes an arbitrary term list (merges duplicates, reduces,
    /// drops zeros). Throws ScalarError if d is not square-free.
    static Scalar normalize(std::vector<Term> raw, long d);

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] long extension() const noexcept { return d_; }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] bool is_rational() const noexcept;  ///< constant with q = 0
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Rational value; throws unless is_rational().
    [[nodiscard]] Rational to_rational() const;
    /// Constant part (p, q) of a parameter-free scalar.
    [[nodiscard]] std::pair<Rational, Rational> constant_parts() const;
    /// Largest parameter index + 1 appearing in any monomial.
    [[nodiscard]] std::size_t parameter_span() const noexcept;
    /// Highest total degree of any monomial (0 for constants and zero).
    [[nodiscard]] int degree() const noexcept;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other) { return *this = divide_by_constant(*this, other); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return divide_by_constant(a, b); }
    friend Scalar operator-(Scalar a);

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// a / c for a nonzero parameter-free c (quadratic-conjugate inversion).
    friend Scalar divide_by_constant(const Scalar& a, const Scalar& c);

private:
    void canonicalize();

    long d_ = 0;
    std::vector<Term> terms_;
};

/// Multiplicative inverse of a nonzero parameter-free scalar.
Scalar inverse(const Scalar& c);

/// Exact square root inside Q(sqrt(d)) of a parameter-free scalar, if one
/// exists. `d` is the extension the root may use (0 = rational only).
std::optional<Scalar> exact_sqrt(const Scalar& a, long d);

/// Declared parameters and quadratic extension of one analysis.
struct ScalarContext {
    long d = 0;
    std::vector<std::string> parameters;

    [[nodiscard]] std::optional<std::size_t> parameter_index(std::string_view name) const;
};

/// Substitutes rational values for every parameter.
/// Throws ScalarError listing the unbound parameters if a binding is missing.
Scalar evaluate(const Scalar& a, const ScalarContext& ctx,
                const std::map<std::string, Rational>& bindings);

/// Parses the literal grammar, e.g. "-1/2 + 1/2*r", "-q", "3/4*q^2".
/// `r` denotes sqrt(ctx.d). Throws ScalarError with a column on failure.
Scalar parse_scalar(std::string_view text, const ScalarContext& ctx);

/// Canonical literal rendering that parse_scalar accepts back.
std::string to_literal(const Scalar& a, const ScalarContext& ctx);

/// Compact rendering used for a single coefficient in text reports, e.g.
/// "-(1/2)*r" or "(q/2 + 1)". Returns the sign separately.
struct CoefficientText {
    bool negative = false;
    std::string magnitude;  ///< empty when the coefficient is exactly 1
};
CoefficientText coefficient_text(const Scalar& a, const ScalarContext& ctx);

std::ostream& operator<<(std::ostream& os, const Scalar& a);

/// Distinct rational roots of a univariate polynomial scalar in parameter
/// `index` (the scalar must not involve other parameters nor sqrt(d)).
std::vector<Rational> rational_roots(const Scalar& poly, std::size_t index);

}  // namespace ahg
