// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file forms.hpp
 * @brief Invariant exterior forms on sorted index tuples.
 *
 * A p-form on a dim-dimensional space is stored by its coefficients on the
 * sorted tuples i_1 < ... < i_p, with the determinant convention
 * e^{i_1...i_p}(e_{i_1}, ..., e_{i_p}) = 1. Tuples are addressed by bitmask
 * and stored in colex rank. All basis computations assume the fixed basis is
 * orthonormal.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "ahg/eigen_support.hpp"

namespace ahg {

using Mask = std::uint32_t;

namespace detail {

inline std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

/// Combinatorial number system rank of a mask among masks of equal popcount.
inline std::size_t colex_rank(Mask m) {
    std::size_t r = 0;
    int k = 1;
    while (m != 0) {
        const int pos = std::countr_zero(m);
        r += binomial(pos, k);
        ++k;
        m &= m - 1;
    }
    return r;
}

/// Number of inversions needed to merge the (sorted) tuples a and b.
inline int merge_parity(Mask a, Mask b) {
    int swaps = 0;
    while (b != 0) {
        const int pos = std::countr_zero(b);
        swaps += std::popcount(a >> (pos + 1));
        b &= b - 1;
    }
    return swaps & 1;
}

inline std::vector<int> indices_of(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Lexicographically ordered masks with `k` bits among `n`.
inline std::vector<Mask> lex_masks(int n, int k) {
    std::vector<Mask> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return out;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask{1} << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

template <class T>
class Form {
public:
    Form() = default;
    Form(int dim, int degree) : dim_(dim), deg_(degree) {
        if (dim < 0 || dim > 24) throw std::invalid_argument("form dimension out of range");
        if (degree < 0 || degree > dim) throw std::invalid_argument("form degree out of range");
        c_.assign(detail::binomial(dim, degree), T(0));
    }

    /// e^{i_1} ^ ... ^ e^{i_p} for 0-based indices in any order.
    static Form basis(int dim, std::initializer_list<int> idx) {
        return basis(dim, std::span<const int>(idx.begin(), idx.size()));
    }
    static Form basis(int dim, std::span<const int> idx) {
        Form f(dim, static_cast<int>(idx.size()));
        const auto [mask, sign] = sort_tuple(idx);
        if (sign != 0) f.coeff(mask) = T(sign);
        return f;
    }
    static Form constant(int dim, const T& value) {
        Form f(dim, 0);
        f.c_[0] = value;
        return f;
    }

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] int degree() const noexcept { return deg_; }

    T& coeff(Mask m) { return c_[detail::colex_rank(m)]; }
    const T& coeff(Mask m) const { return c_[detail::colex_rank(m)]; }

    /// Value on basis vectors e_{idx[0]}, ..., e_{idx[p-1]} (any order, repeats give 0).
    T operator()(std::span<const int> idx) const {
        const auto [mask, sign] = sort_tuple(idx);
        if (sign == 0) return T(0);
        const T& v = coeff(mask);
        return sign > 0 ? v : T(-v);
    }
    T operator()(std::initializer_list<int> idx) const {
        return (*this)(std::span<const int>(idx.begin(), idx.size()));
    }

    /// Visits nonzero coefficients in lexicographic tuple order.
    void for_each(const std::function<void(Mask, const T&)>& fn) const {
        for (Mask m : detail::lex_masks(dim_, deg_)) {
            const T& v = coeff(m);
            if (!(v == T(0))) fn(m, v);
        }
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const T& v) { return v == T(0); });
    }

    Form& operator+=(const Form& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Form& operator-=(const Form& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Form& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) { return a *= T(-1); }
    friend Form operator*(const T& s, Form a) { return a *= s; }
    friend Form operator*(Form a, const T& s) { return a *= s; }
    friend bool operator==(const Form& a, const Form& b) {
        return a.dim_ == b.dim_ && a.deg_ == b.deg_ && a.c_ == b.c_;
    }

    /// Sorted mask of a tuple and the sign of the sorting permutation (0 on repeats).
    static std::pair<Mask, int> sort_tuple(std::span<const int> idx) {
        Mask m = 0;
        int sign = 1;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const Mask bit = Mask{1} << idx[a];
            if (m & bit) return {0, 0};
            // Count earlier entries larger than this one.
            if (std::popcount(m >> (idx[a] + 1)) & 1) sign = -sign;
            m |= bit;
        }
        return {m, sign};
    }

private:
    void check(const Form& o) const {
        if (o.dim_ != dim_ || o.deg_ != deg_) throw std::invalid_argument("form degree mismatch");
    }

    int dim_ = 0;
    int deg_ = 0;
    std::vector<T> c_;
};

// ---------------------------------------------------------------------------
// Graded algebra
// ---------------------------------------------------------------------------

template <class T>
Form<T> wedge(const Form<T>& a, const Form<T>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    if (a.degree() + b.degree() > a.dim()) throw std::invalid_argument("wedge: degree exceeds dimension");
    Form<T> out(a.dim(), a.degree() + b.degree());
    const auto am = detail::lex_masks(a.dim(), a.degree());
    const auto bm = detail::lex_masks(b.dim(), b.degree());
    for (Mask x : am) {
        const T& ax = a.coeff(x);
        if (ax == T(0)) continue;
        for (Mask y : bm) {
            if (x & y) continue;
            const T& by = b.coeff(y);
            if (by == T(0)) continue;
            T v = ax * by;
            if (detail::merge_parity(x, y)) v = -v;
            out.coeff(x | y) += v;
        }
    }
    return out;
}

/// X _| a with X given by its components in the basis.
template <class T>
Form<T> interior(const VectorX<T>& x, const Form<T>& a) {
    if (a.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
    Form<T> out(a.dim(), a.degree() - 1);
    for (Mask m : detail::lex_masks(a.dim(), a.degree())) {
        const T& v = a.coeff(m);
        if (v == T(0)) continue;
        int r = 0;
        for (Mask rest = m; rest != 0; rest &= rest - 1, ++r) {
            const int i = std::countr_zero(rest);
            if (x(i) == T(0)) continue;
            T term = x(i) * v;
            if (r & 1) term = -term;
            out.coeff(m & ~(Mask{1} << i)) += term;
        }
    }
    return out;
}

/// <a, b> = (1/p!) sum over all index tuples = sum over sorted tuples.
template <class T>
T inner(const Form<T>& a, const Form<T>& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree()) {
        throw std::invalid_argument("form inner product: degree mismatch");
    }
    T acc(0);
    for (Mask m : detail::lex_masks(a.dim(), a.degree())) {
        const T& x = a.coeff(m);
        const T& y = b.coeff(m);
        if (x == T(0) || y == T(0)) continue;
        acc += x * y;
    }
    return acc;
}

/// Hodge star for the volume form vol * e^{1...dim}; vol must be +1 or -1.
template <class T>
Form<T> hodge_star(const Form<T>& a, const T& vol) {
    const int n = a.dim();
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    Form<T> out(n, n - a.degree());
    for (Mask m : detail::lex_masks(n, a.degree())) {
        const T& v = a.coeff(m);
        if (v == T(0)) continue;
        const Mask c = full & ~m;
        T term = vol * v;
        if (detail::merge_parity(m, c)) term = -term;
        out.coeff(c) = term;
    }
    return out;
}

/// Musical isomorphisms in the orthonormal frame.
template <class T>
Form<T> flat(const VectorX<T>& x) {
    Form<T> out(static_cast<int>(x.size()), 1);
    for (int i = 0; i < x.size(); ++i) out.coeff(Mask{1} << i) = x(i);
    return out;
}
template <class T>
VectorX<T> sharp(const Form<T>& a) {
    if (a.degree() != 1) throw std::invalid_argument("sharp needs a 1-form");
    VectorX<T> out(a.dim());
    for (int i = 0; i < a.dim(); ++i) out(i) = a.coeff(Mask{1} << i);
    return out;
}

/// 2-form <-> skew matrix of values a(e_i, e_j).
template <class T>
MatrixX<T> to_matrix(const Form<T>& a) {
    if (a.degree() != 2) throw std::invalid_argument("to_matrix needs a 2-form");
    const int n = a.dim();
    MatrixX<T> m = MatrixX<T>::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const T& v = a.coeff((Mask{1} << i) | (Mask{1} << j));
            m(i, j) = v;
            m(j, i) = -v;
        }
    }
    return m;
}
template <class T>
Form<T> from_matrix(const MatrixX<T>& m) {
    const int n = static_cast<int>(m.rows());
    Form<T> a(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) a.coeff((Mask{1} << i) | (Mask{1} << j)) = m(i, j);
    }
    return a;
}

/// Value of a form with an endomorphism A applied in the listed slots:
/// a(.., A e_{idx[s]}, ..) for s in slots, on the basis tuple idx.
template <class T>
T value_with(const Form<T>& a, const MatrixX<T>& A, std::span<const int> idx, std::span<const int> slots) {
    if (slots.empty()) return a(idx);
    std::vector<int> cur(idx.begin(), idx.end());
    T acc(0);
    const int s = slots.front();
    const int orig = idx[static_cast<std::size_t>(s)];
    for (int m = 0; m < A.rows(); ++m) {
        const T& f = A(m, orig);
        if (f == T(0)) continue;
        cur[static_cast<std::size_t>(s)] = m;
        acc += f * value_with(a, A, std::span<const int>(cur), slots.subspan(1));
    }
    return acc;
}

/// Evaluates a multilinear expression on sorted tuples and stores it as a form.
/// The caller guarantees the expression is alternating.
template <class T>
Form<T> tabulate(int dim, int degree, const std::function<T(std::span<const int>)>& fn) {
    Form<T> out(dim, degree);
    for (Mask m : detail::lex_masks(dim, degree)) {
        const auto idx = detail::indices_of(m);
        out.coeff(m) = fn(std::span<const int>(idx));
    }
    return out;
}

/// (J_(s) a)(X_1, .., X_p) = -a(.., J X_s, ..). Assumes the result is alternating.
template <class T>
Form<T> j_slot(const Form<T>& a, const MatrixX<T>& J, int slot) {
    const int s[1] = {slot};
    return tabulate<T>(a.dim(), a.degree(), [&](std::span<const int> idx) {
        return T(-value_with(a, J, idx, std::span<const int>(s)));
    });
}

/// Part of a 3-form in [lambda^{3,0}]: (a - J1J2 a - J2J3 a - J1J3 a) / 4.
template <class T>
Form<T> project_30(const Form<T>& a, const MatrixX<T>& J) {
    if (a.degree() != 3) throw std::invalid_argument("project_30 needs a 3-form");
    static constexpr int s12[2] = {0, 1};
    static constexpr int s23[2] = {1, 2};
    static constexpr int s13[2] = {0, 2};
    return tabulate<T>(a.dim(), 3, [&](std::span<const int> idx) {
        T v = a(idx);
        v -= value_with(a, J, idx, std::span<const int>(s12));
        v -= value_with(a, J, idx, std::span<const int>(s23));
        v -= value_with(a, J, idx, std::span<const int>(s13));
        return T(v / T(4));
    });
}

}  // namespace ahg
