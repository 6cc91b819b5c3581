#pragma once

#include "capbound/coeffs.hpp"

namespace capbound {

/// Rate function C(r, q) = (1 + r + ... + r^(q-1)) / r^((q-1)/3) for r in (0,1).
///
/// Its minimum over r bounds the growth rate of m_{(q-1)n/3}: the minimum is
/// strictly below q, which is what makes the progression-free bound o(q^n).
double crq(double r, int q);

/// Result of minimizing crq over (0, 1).
struct RateReport {
    int q = 0;
    double r_star = 0;      // argmin, in (0, 1)
    double c_star = 0;      // crq(r_star, q), strictly below q
    double prefactor_b = 0; // c_star^2 / (1 - r_star), the constant B in |A| <= B * c^n
};

/// Golden-section minimization of crq over (eps, 1-eps), bracketed by a
/// 64-point grid pre-scan. tol is the final bracket width in r.
///
/// Throws std::runtime_error if no interior point with crq < q is found or
/// the stationarity residual exceeds its derived threshold; either indicates
/// an implementation bug, not a property of the function.
RateReport minimize_crq(int q, double tol = 1e-10);

/// Closed-form minimizer for q = 3:
/// r = (sqrt(33) - 1) / 8,  c = ((3/8)^3 * (207 + 33*sqrt(33)))^(1/3).
struct ClosedFormQ3 {
    double r = 0;
    double c = 0;
};
ClosedFormQ3 q3_closed_form();

/// One growth-inequality check: m_{(q-1)n/3} <= crq(r, q)^n.
/// The exact left side is compared against the float right side with a
/// 1e-9 relative guard band on the right side.
struct GrowthReport {
    BigInt lhs;
    double rhs = 0;
    bool holds = false;
};
GrowthReport check_growth(int q, int n, double r);

/// Prefactor-form growth bounds (the geometric-series route):
///   divisible case: m with 3N variables, degree (q-1)N, against (1/(1-r)) * crq^(3N)
///   general case:   m with N variables, degree (q-1)N/3, against B * crq^N
/// where B = crq^2 / (1-r).
struct PrefactorBoundReport {
    BigInt lhs_div3;
    double rhs_div3 = 0;
    bool holds_div3 = false;
    BigInt lhs_general;
    double rhs_general = 0;
    bool holds_general = false;
    double prefactor_b = 0;
    bool holds = false; // both cases
};
PrefactorBoundReport prefactor_bound_check(int q, int big_n, double r);

} // namespace capbound
