#pragma once

#include <compare>
#include <string>

namespace capbound {

/// Exact rational value used for degree parameters.
///
/// Degrees like (q-1)*n/3 must be floored bit-exactly; an off-by-one in the
/// floor changes the computed bound. All arithmetic and comparisons here are
/// integer-only. The denominator is kept positive and the fraction reduced.
class RationalDegree {
public:
    constexpr RationalDegree() = default;
    RationalDegree(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    /// Floor toward negative infinity, computed from the integers.
    long long floor_value() const;

    bool is_negative() const { return num_ < 0; }

    RationalDegree half() const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Renders as "num/den" (always with the denominator, so parsing round-trips).
    std::string str() const;

    /// Parses "num/den" or a bare integer "num".
    static RationalDegree parse(const std::string& text);

    friend RationalDegree operator+(const RationalDegree& a, const RationalDegree& b);
    friend RationalDegree operator-(const RationalDegree& a, const RationalDegree& b);
    friend bool operator==(const RationalDegree& a, const RationalDegree& b);
    friend std::strong_ordering operator<=>(const RationalDegree& a, const RationalDegree& b);

private:
    long long num_ = 0;
    long long den_ = 1;
};

} // namespace capbound
