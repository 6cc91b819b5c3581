#include "capbound/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace capbound {

double crq(double r, int q) {
    if (q < 2) throw std::invalid_argument("crq: q must be at least 2");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("crq: r must lie in (0, 1)");
    double numer = 0.0;
    for (int k = q - 1; k >= 0; --k) numer = numer * r + 1.0;
    return numer / std::pow(r, (q - 1) / 3.0);
}

namespace {

// Guard band when an exact big integer is compared against a float upper
// bound: lhs <= rhs is accepted up to 1e-9 relative slack on rhs.
bool holds_with_guard(const BigInt& lhs, double rhs) {
    return lhs.convert_to<double>() <= rhs * (1.0 + 1e-9);
}

} // namespace

RateReport minimize_crq(int q, double tol) {
    if (q < 2) throw std::invalid_argument("minimize_crq: q must be at least 2");
    if (!(tol > 0.0)) throw std::invalid_argument("minimize_crq: tol must be positive");

    const double eps = 1e-6;
    const int grid = 64;

    // Pre-scan: the minimum of the grid picks the bracket, so a wrong initial
    // bracket cannot silently return a local wiggle near the endpoints.
    int best_i = 0;
    double best_f = crq(eps, q);
    for (int i = 1; i < grid; ++i) {
        double r = eps + (1.0 - 2 * eps) * i / (grid - 1);
        double f = crq(r, q);
        if (f < best_f) {
            best_f = f;
            best_i = i;
        }
    }
    auto grid_r = [&](int i) {
        if (i < 0) i = 0;
        if (i >= grid) i = grid - 1;
        return eps + (1.0 - 2 * eps) * i / (grid - 1);
    };
    double lo = grid_r(best_i - 1);
    double hi = grid_r(best_i + 1);

    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = crq(x1, q);
    double f2 = crq(x2, q);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = crq(x1, q);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = crq(x2, q);
        }
    }
    double r_star = 0.5 * (lo + hi);
    double c_star = crq(r_star, q);

    if (!(c_star < q))
        throw std::runtime_error("minimize_crq: no interior point with crq below q found");

    // Stationarity residual: |crq'| at r_star should vanish up to the bracket
    // width, finite-difference noise, and truncation of the central difference.
    const double h = 1e-6;
    double d1 = (crq(r_star + h, q) - crq(r_star - h, q)) / (2 * h);
    double d2 = (crq(r_star + h, q) - 2 * c_star + crq(r_star - h, q)) / (h * h);
    double noise_width =
        std::sqrt(2.0 * 2.2e-16 * std::fabs(c_star) / std::max(std::fabs(d2), 1e-12));
    double threshold = 8.0 * std::fabs(d2) * (tol + noise_width + h * h) + 1e-6;
    if (std::fabs(d1) > threshold)
        throw std::runtime_error("minimize_crq: stationarity residual above threshold");

    RateReport report;
    report.q = q;
    report.r_star = r_star;
    report.c_star = c_star;
    report.prefactor_b = c_star * c_star / (1.0 - r_star);
    return report;
}

ClosedFormQ3 q3_closed_form() {
    ClosedFormQ3 out;
    double s = std::sqrt(33.0);
    out.r = (s - 1.0) / 8.0;
    out.c = std::cbrt((3.0 / 8.0) * (3.0 / 8.0) * (3.0 / 8.0) * (207.0 + 33.0 * s));
    return out;
}

GrowthReport check_growth(int q, int n, double r) {
    if (n < 0) throw std::invalid_argument("check_growth: n must be nonnegative");
    GrowthReport report;
    report.lhs = m_value(q, n, RationalDegree(static_cast<long long>(q - 1) * n, 3));
    report.rhs = std::pow(crq(r, q), n);
    report.holds = holds_with_guard(report.lhs, report.rhs);
    return report;
}

PrefactorBoundReport prefactor_bound_check(int q, int big_n, double r) {
    if (big_n < 0) throw std::invalid_argument("prefactor_bound_check: N must be nonnegative");
    double c = crq(r, q);

    PrefactorBoundReport report;
    report.prefactor_b = c * c / (1.0 - r);

    report.lhs_div3 = m_value(q, 3 * big_n, RationalDegree(static_cast<long long>(q - 1) * big_n));
    report.rhs_div3 = std::pow(c, 3 * big_n) / (1.0 - r);
    report.holds_div3 = holds_with_guard(report.lhs_div3, report.rhs_div3);

    report.lhs_general =
        m_value(q, big_n, RationalDegree(static_cast<long long>(q - 1) * big_n, 3));
    report.rhs_general = report.prefactor_b * std::pow(c, big_n);
    report.holds_general = holds_with_guard(report.lhs_general, report.rhs_general);

    report.holds = report.holds_div3 && report.holds_general;
    return report;
}

} // namespace capbound
