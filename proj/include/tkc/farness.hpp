#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

#include "tkc/graph.hpp"

namespace tkc {

enum class Measure { Closeness, Harmonic };

std::string_view toString(Measure m);

/// Absolute tolerance for equality and pruning decisions on harmonic values.
inline constexpr double harmonicTolerance = 1e-9;

/**
 * Farness (n-1) * S / (r-1)^2 held as the exact pair (S, r).
 *
 * The factor n-1 is common to every value of one graph, so ordering compares
 * S_a * (r_b-1)^2 with S_b * (r_a-1)^2 in 128-bit arithmetic. Values with
 * r < 2 are infinite (closeness 0). The same type carries lower bounds, where
 * S is a lower bound on the sum of distances for an assumed reach r.
 */
class Farness {
public:
    constexpr Farness() = default; // zero
    constexpr Farness(count sum, count reach) : sum_(sum), reach_(reach) {
        if (reach_ < 2) {
            sum_ = 0;
            reach_ = 0;
        }
    }

    static constexpr Farness infinity() {
        Farness f;
        f.sum_ = 0;
        f.reach_ = 0;
        return f;
    }
    static constexpr Farness zero() { return Farness{}; }

    constexpr bool isInfinite() const noexcept { return reach_ < 2; }
    constexpr count sum() const noexcept { return sum_; }
    constexpr count reach() const noexcept { return reach_; }

    /// (n-1) * S / (r-1)^2, +inf when infinite.
    double value(std::size_t n) const;
    /// Lin's index (r-1)^2 / ((n-1) * S); 0 when infinite.
    double closeness(std::size_t n) const;

    friend std::strong_ordering operator<=>(const Farness &a, const Farness &b);
    friend bool operator==(const Farness &a, const Farness &b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    count sum_ = 0;
    count reach_ = 2;
};

/// Orders two farness values; the common factor n-1 cancels out.
std::strong_ordering compareFarness(const Farness &a, const Farness &b);

/// Lower bound (n-1) * S / (r-1)^2 from a possibly non-positive numerator.
inline Farness farnessBound(__int128 sum, count reach) {
    return Farness(sum > 0 ? static_cast<count>(sum) : 0, reach);
}

} // namespace tkc
