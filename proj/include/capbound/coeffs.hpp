#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "capbound/rational.hpp"

namespace capbound {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficient row of (1 + x + ... + x^(q-1))^n, exact.
///
/// values[j] counts the n-tuples with entries in [0, q) and digit sum j, so
/// the row sums to q^n and is symmetric about its midpoint.
struct CoeffRow {
    int q = 0;
    int n = 0;
    std::vector<BigInt> values; // length (q-1)*n + 1
};

/// Exact coefficients of (1 + x + ... + x^(q-1))^n by iterated convolution.
/// n = 0 yields [1]. Throws std::invalid_argument for q < 2 or n < 0.
CoeffRow coeff_row(int q, int n);

/// One convolution step: the row for n+1 variables from the row for n.
/// Throws std::invalid_argument if row.q != q or the row length is wrong.
CoeffRow cf_step(int q, const CoeffRow& row);

/// Partial row sum m_d = sum_{j=0}^{floor(d)} c_j^(n).
///
/// d below 0 is rejected; d above (q-1)*n truncates silently (the extra terms
/// do not exist, so the sum is unchanged).
BigInt m_value(int q, int n, const RationalDegree& d);

/// Upper bound 3 * m_{(q-1)n/3} for progression-free subsets of F_q^n.
/// Requires n >= 1.
BigInt eg_bound(int q, int n);

} // namespace capbound
