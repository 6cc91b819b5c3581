#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "capbound/coeffs.hpp"
#include "capbound/ffld.hpp"

namespace capbound {

/// Monomial in n variables with every exponent at most q-1.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    std::uint32_t total_degree() const;
};

/// All monomials with exponents in [0, q-1] and total degree at most floor(d),
/// in graded lexicographic order: sorted by total degree, ties broken by
/// lexicographic comparison of the exponent tuples (first variable most
/// significant). The count equals m_value(q, n, d).
struct MonomialBasis {
    int q = 0;
    int n = 0;
    RationalDegree d;
    std::vector<Monomial> monomials;

    std::size_t size() const { return monomials.size(); }
};

MonomialBasis monomial_basis(int q, int n, const RationalDegree& d);

/// Dense matrix over F_p, row-major.
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// Evaluation matrix: entry (i, j) is monomial i of the basis evaluated at
/// point j, with 0^0 = 1. Requires basis.q prime and points over the same
/// (p, n).
FpMatrix eval_matrix(const MonomialBasis& basis, const std::vector<FieldVector>& points);

/// Rank by Gaussian elimination over F_p. Pivoting is deterministic: the
/// first nonzero entry in column order, so repeated runs give identical
/// reduced forms.
std::size_t rank(const FpMatrix& m);

/// Basis of the right null space {v : M v = 0}. Every returned vector is
/// verified against M before being returned. rank + nullity = cols.
std::vector<std::vector<std::uint32_t>> null_space(const FpMatrix& m);

/// Dimension report for the subspace V of polynomials spanned by the basis
/// that vanish on the complement of -gamma*A:
///   dim_S = m_d, dim_V = nullity of the constraint system,
///   lower = m_d - q^n + |A| (rank-nullity), upper = 2 * m_{d/2}.
/// The sandwich max(lower, 0) <= dim_V <= min(upper, dim_S) is the content of
/// the dimension inequalities; the upper half needs A progression-free.
struct SubspaceReport {
    int q = 0;
    int n = 0;
    RationalDegree d;
    long long dim_s = 0;
    long long dim_v = 0;
    long long lower = 0;
    long long upper = 0;
    bool holds = false; // the full sandwich

    std::string to_json() const;
};

/// Computes dim(V) by exact rank computation on the evaluation matrix of the
/// basis at the points of F_q^n \ (-gamma*A). Enumeration guard: q^n <= 2^20.
/// The rank-nullity lower bound is asserted on every call.
SubspaceReport dim_v(const PointSet& A, const RationalDegree& d, const ProgressionSpec& spec);

/// Matrix B over A x A with B(x, y) = P(alpha*x + beta*y), P given by its
/// coefficients in basis order. When P vanishes on all off-diagonal mixes, B
/// is diagonal and its rank is the number of a in A with P(-gamma*a) != 0.
FpMatrix mix_matrix(const PointSet& A, const std::vector<std::uint32_t>& poly_coeffs,
                    const MonomialBasis& basis, const ProgressionSpec& spec);

/// Checks the support-count bound: any P in the span with P(alpha*a + beta*b) = 0
/// for all a != b in A has |{a in A : P(-gamma*a) != 0}| <= 2 * m_{d/2}.
///
/// The solution space of the vanishing conditions is computed exactly and
/// every basis vector of it is checked; count is the worst case over them
/// (stronger than exhibiting one maximal-support witness). An empty solution
/// space reports count 0 (only P = 0 qualifies).
struct Proposition2Report {
    long long count = 0;
    long long bound = 0;
    long long solution_dim = 0;
    bool holds = false;
};
Proposition2Report proposition2_check(const PointSet& A, const RationalDegree& d,
                                      const ProgressionSpec& spec);

/// Exact check of q^n <= m_{(q-1)n - d} + m_d for 0 <= d <= (q-1)n.
/// A violation throws std::runtime_error: the inequality is a theorem, so a
/// failure can only be an implementation bug.
struct CombinatorialBoundReport {
    BigInt lhs;        // q^n
    BigInt m_upper;    // m_{(q-1)n - d}
    BigInt m_lower;    // m_d
    bool holds = false;
};
CombinatorialBoundReport combinatorial_bound_check(int q, int n, const RationalDegree& d);

/// Seeded random progression-free subset: points are tried in a shuffled
/// order and greedily added while the set stays progression-free. target_size
/// of 0 means grow until stuck; otherwise stop at a size drawn in
/// [1, target_size]. Deterministic for a fixed seed.
PointSet random_progression_free_set(const ProgressionSpec& spec, std::size_t n,
                                     std::uint64_t seed, std::size_t target_size = 0);

} // namespace capbound
