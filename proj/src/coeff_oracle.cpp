#include "capbound/coeff_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace capbound {

namespace {

std::vector<std::complex<double>> zeta_powers(long long l) {
    std::vector<std::complex<double>> powers(static_cast<std::size_t>(l));
    for (long long j = 0; j < l; ++j)
        powers[static_cast<std::size_t>(j)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(l));
    return powers;
}

} // namespace

long long geometric_sum_filter(long long l, long long h) {
    if (l < 1) throw std::invalid_argument("geometric_sum_filter: l must be at least 1");
    auto powers = zeta_powers(l);
    long long step = ((h % l) + l) % l;
    std::complex<double> sum = 0.0;
    for (long long j = 0; j < l; ++j) sum += powers[static_cast<std::size_t>((step * j) % l)];

    long long expected = (h % l == 0) ? l : 0;
    double deviation = std::abs(sum - std::complex<double>(static_cast<double>(expected), 0.0));
    if (deviation > 1e-9 * static_cast<double>(l))
        throw std::runtime_error("geometric_sum_filter: summation disagrees with divisibility rule");
    return std::llround(sum.real());
}

double extract_coeff(const CoeffOracleQuery& query) {
    if (query.coefficients.empty())
        throw std::invalid_argument("extract_coeff: empty polynomial");
    if (query.index < 0) throw std::invalid_argument("extract_coeff: index must be nonnegative");
    if (!(query.radius > 0.0)) throw std::invalid_argument("extract_coeff: radius must be positive");
    long long degree = static_cast<long long>(query.coefficients.size()) - 1;
    long long l = query.order;
    if (l <= std::max(degree, static_cast<long long>(query.index)))
        throw std::invalid_argument("extract_coeff: order must exceed max(degree, index)");

    auto powers = zeta_powers(l);
    double r_to_i = std::pow(query.radius, query.index);
    std::complex<double> acc = 0.0;
    double max_abs = 0.0;
    for (long long j = 0; j < l; ++j) {
        std::complex<double> point = query.radius * powers[static_cast<std::size_t>(j)];
        std::complex<double> value = 0.0;
        for (auto it = query.coefficients.rbegin(); it != query.coefficients.rend(); ++it)
            value = value * point + *it;
        max_abs = std::max(max_abs, std::abs(value));
        // Dividing by zeta^(i*j) is multiplying by zeta^(-i*j).
        long long back = (l - (static_cast<long long>(query.index) * j) % l) % l;
        acc += value * powers[static_cast<std::size_t>(back)];
    }
    acc /= static_cast<double>(l) * r_to_i;

    double scale = std::max(1.0, static_cast<double>(l) * max_abs / r_to_i);
    if (std::abs(acc.imag()) > 1e-6 * scale)
        throw std::runtime_error("extract_coeff: imaginary residue above tolerance");
    return acc.real();
}

} // namespace capbound
