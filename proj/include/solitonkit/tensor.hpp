// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <vector>

namespace sk {

/// Dense cubic table of rank R over a frame of size `dim`, row-major.
/// Indices are 0-based.
template <class T, std::size_t R>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(int dim, const T& fill = T{}) : dim_(dim), data_(volume(dim), fill) {}

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return data_.size(); }

    template <class... I>
    T& operator()(I... idx)
    {
        static_assert(sizeof...(I) == R);
        return data_[offset({static_cast<int>(idx)...})];
    }

    template <class... I>
    const T& operator()(I... idx) const
    {
        static_assert(sizeof...(I) == R);
        return data_[offset({static_cast<int>(idx)...})];
    }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }

    friend bool operator==(const Tensor& a, const Tensor& b) = default;

private:
    static std::size_t volume(int dim)
    {
        std::size_t v = 1;
        for (std::size_t r = 0; r < R; ++r)
            v *= static_cast<std::size_t>(dim);
        return v;
    }

    [[nodiscard]] std::size_t offset(const std::array<int, R>& idx) const
    {
        std::size_t off = 0;
        for (int i : idx) {
            assert(i >= 0 && i < dim_);
            off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
        }
        return off;
    }

    int dim_ = 0;
    std::vector<T> data_;
};

template <class T>
using Matrix = Tensor<T, 2>;

}  // namespace sk
