#pragma once

#include <vector>

namespace capbound {

// Root-of-unity coefficient extraction. This is a floating-point oracle used
// to cross-check the exact coefficient tables; nothing in the bound pipeline
// depends on it.

/// Sum of zeta^(h*j) for j = 0..l-1 with zeta = exp(2*pi*i/l): equals l when
/// l divides h and 0 otherwise. Computed by explicit complex summation,
/// rounded, and cross-checked against the divisibility rule.
/// Throws std::runtime_error if the two disagree.
long long geometric_sum_filter(long long l, long long h);

struct CoeffOracleQuery {
    std::vector<double> coefficients; // the polynomial f, degree = size - 1
    int index = 0;                    // i, the target coefficient
    int order = 1;                    // l, order of the root of unity
    double radius = 1.0;              // r > 0
};

/// Coefficient i of f via (1/l) * sum_j f(r*zeta^j) / (r^i * zeta^(i*j)).
///
/// Exact only when l > max(deg f, i); smaller l is rejected. The zeta powers
/// are computed once per query. The imaginary part of the average must stay
/// below a tolerance scaled by l * max|f(r*zeta^j)| / r^i; exceeding it is a
/// numerical failure (std::runtime_error).
double extract_coeff(const CoeffOracleQuery& query);

} // namespace capbound
