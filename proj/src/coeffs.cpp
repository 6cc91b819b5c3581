#include "capbound/coeffs.hpp"

#include <stdexcept>

namespace capbound {

CoeffRow coeff_row(int q, int n) {
    if (q < 2) throw std::invalid_argument("coeff_row: q must be at least 2");
    if (n < 0) throw std::invalid_argument("coeff_row: n must be nonnegative");
    CoeffRow row{q, 0, {BigInt(1)}};
    for (int i = 0; i < n; ++i) row = cf_step(q, row);
    return row;
}

CoeffRow cf_step(int q, const CoeffRow& row) {
    if (q < 2) throw std::invalid_argument("cf_step: q must be at least 2");
    if (row.q != q) throw std::invalid_argument("cf_step: row built for a different q");
    std::size_t expected = static_cast<std::size_t>(q - 1) * row.n + 1;
    if (row.values.size() != expected) throw std::invalid_argument("cf_step: malformed row");

    // Convolution with the all-ones polynomial of length q.
    CoeffRow next{q, row.n + 1, std::vector<BigInt>(expected + q - 1)};
    for (std::size_t j = 0; j < row.values.size(); ++j)
        for (int k = 0; k < q; ++k) next.values[j + k] += row.values[j];
    return next;
}

BigInt m_value(int q, int n, const RationalDegree& d) {
    if (d.is_negative()) throw std::invalid_argument("m_value: degree must be nonnegative");
    CoeffRow row = coeff_row(q, n);
    long long top = d.floor_value();
    long long last = static_cast<long long>(row.values.size()) - 1;
    if (top > last) top = last;
    BigInt sum = 0;
    for (long long j = 0; j <= top; ++j) sum += row.values[static_cast<std::size_t>(j)];
    return sum;
}

BigInt eg_bound(int q, int n) {
    if (n < 1) throw std::invalid_argument("eg_bound: n must be at least 1");
    return 3 * m_value(q, n, RationalDegree(static_cast<long long>(q - 1) * n, 3));
}

} // namespace capbound
