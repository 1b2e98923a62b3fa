#pragma once

#include "cvpt/errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cvpt {

/// Triangular table of wave-function exponent coefficients c_m^(k),
/// 1 <= k <= order and 1 <= m <= k+2. Entries outside that range read as zero.
template <class T>
class WaveTable {
public:
    WaveTable() = default;
    explicit WaveTable(int order) : order_(order) {
        if (order < 0) {
            throw argument_error("negative table order");
        }
        rows_.resize(static_cast<std::size_t>(order));
        for (int k = 1; k <= order; ++k) {
            rows_[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k + 2));
        }
    }

    int order() const { return order_; }

    const T& at(int k, int m) const {
        static const T zero{};
        if (k < 1 || k > order_ || m < 1 || m > k + 2) {
            return zero;
        }
        return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)];
    }

    void set(int k, int m, T value) {
        if (k < 1 || k > order_ || m < 1 || m > k + 2) {
            throw argument_error("wave coefficient index (" + std::to_string(k) + ", " + std::to_string(m) +
                                 ") outside the structural range");
        }
        rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)] = std::move(value);
    }

    friend bool operator==(const WaveTable&, const WaveTable&) = default;

private:
    int order_ = 0;
    std::vector<std::vector<T>> rows_; // rows_[k-1][m-1]
};

} // namespace cvpt
