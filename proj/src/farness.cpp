#include "tkc/farness.hpp"

#include <limits>

namespace tkc {

std::string_view toString(Measure m) {
    return m == Measure::Closeness ? "closeness" : "harmonic";
}

double Farness::value(std::size_t n) const {
    if (isInfinite())
        return std::numeric_limits<double>::infinity();
    const double r1 = static_cast<double>(reach_ - 1);
    return static_cast<double>(n - 1) * static_cast<double>(sum_) / (r1 * r1);
}

double Farness::closeness(std::size_t n) const {
    if (isInfinite() || n < 2)
        return 0.0;
    const double r1 = static_cast<double>(reach_ - 1);
    if (sum_ == 0)
        return std::numeric_limits<double>::infinity();
    return r1 * r1 / (static_cast<double>(n - 1) * static_cast<double>(sum_));
}

std::strong_ordering operator<=>(const Farness &a, const Farness &b) {
    if (a.isInfinite() || b.isInfinite())
        return a.isInfinite() <=> b.isInfinite();
    using u128 = unsigned __int128;
    const u128 ra = a.reach_ - 1;
    const u128 rb = b.reach_ - 1;
    const u128 lhs = static_cast<u128>(a.sum_) * rb * rb;
    const u128 rhs = static_cast<u128>(b.sum_) * ra * ra;
    return lhs <=> rhs;
}

std::strong_ordering compareFarness(const Farness &a, const Farness &b) { return a <=> b; }

} // namespace tkc
