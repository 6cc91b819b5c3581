#include "capbound/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace capbound {

RationalDegree::RationalDegree(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("RationalDegree: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

long long RationalDegree::floor_value() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

RationalDegree RationalDegree::half() const {
    return RationalDegree(num_, 2 * den_);
}

std::string RationalDegree::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalDegree RationalDegree::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("RationalDegree: empty string");
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long num = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return RationalDegree(num);
        }
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("trailing characters");
        std::string den_text = text.substr(slash + 1);
        long long den = std::stoll(den_text, &used);
        if (used != den_text.size()) throw std::invalid_argument("trailing characters");
        return RationalDegree(num, den);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("RationalDegree: value out of range in '" + text + "'");
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("RationalDegree: cannot parse '" + text + "'");
    }
}

RationalDegree operator+(const RationalDegree& a, const RationalDegree& b) {
    return RationalDegree(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalDegree operator-(const RationalDegree& a, const RationalDegree& b) {
    return RationalDegree(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

bool operator==(const RationalDegree& a, const RationalDegree& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const RationalDegree& a, const RationalDegree& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

} // namespace capbound
