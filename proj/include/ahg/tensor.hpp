// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tensor.hpp
 * @brief Dense invariant tensors of fixed rank over the fixed orthonormal basis.
 *
 * Tensor<T, R> stores dim^R coefficients in row-major order. Rank-3 tensors
 * hold connection-type data, t(a, b, c) = <t_{e_a} e_b, e_c>; rank-4 tensors
 * hold curvature, R(i, j, k, l) = <R_{e_i, e_j} e_k, e_l>.
 */

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ahg {

template <class T, int Rank>
class Tensor {
    static_assert(Rank >= 1 && Rank <= 6);

public:
    using value_type = T;
    static constexpr int rank = Rank;

    Tensor() = default;
    explicit Tensor(int dim) : dim_(dim), data_(volume(dim), T(0)) {}

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }

    template <class... I>
    T& operator()(I... idx) {
        static_assert(sizeof...(I) == Rank);
        return data_[offset({static_cast<int>(idx)...})];
    }
    template <class... I>
    const T& operator()(I... idx) const {
        static_assert(sizeof...(I) == Rank);
        return data_[offset({static_cast<int>(idx)...})];
    }

    T& at(const std::array<int, Rank>& idx) { return data_[offset(idx)]; }
    const T& at(const std::array<int, Rank>& idx) const { return data_[offset(idx)]; }

    [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : data_) {
            if (!(v == T(0))) return false;
        }
        return true;
    }

    Tensor& operator+=(const Tensor& o) {
        check(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (!(o.data_[i] == T(0))) data_[i] += o.data_[i];
        }
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (!(o.data_[i] == T(0))) data_[i] -= o.data_[i];
        }
        return *this;
    }
    Tensor& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator-(Tensor a) {
        for (auto& v : a.data_) v = -v;
        return a;
    }
    friend Tensor operator*(const T& s, Tensor a) { return a *= s; }
    friend Tensor operator*(Tensor a, const T& s) { return a *= s; }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    static std::size_t volume(int dim) {
        std::size_t v = 1;
        for (int r = 0; r < Rank; ++r) v *= static_cast<std::size_t>(dim);
        return v;
    }
    [[nodiscard]] std::size_t offset(const std::array<int, Rank>& idx) const {
        std::size_t o = 0;
        for (int r = 0; r < Rank; ++r) o = o * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[r]);
        return o;
    }
    void check(const Tensor& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("tensor dimension mismatch");
    }

    int dim_ = 0;
    std::vector<T> data_;
};

template <class T>
using Tensor3 = Tensor<T, 3>;
template <class T>
using Tensor4 = Tensor<T, 4>;

/// <t, u> = sum over all indices of t * u (orthonormal frame).
template <class T, int R>
T inner(const Tensor<T, R>& t, const Tensor<T, R>& u) {
    T acc(0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.data()[i] == T(0) || u.data()[i] == T(0)) continue;
        acc += t.data()[i] * u.data()[i];
    }
    return acc;
}

}  // namespace ahg
