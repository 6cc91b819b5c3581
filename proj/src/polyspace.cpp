#include "capbound/polyspace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace capbound {

std::uint32_t Monomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

namespace {

void enumerate_monomials(int q, int n, long long degree_left, std::vector<std::uint32_t>& stack,
                         std::vector<Monomial>& out) {
    if (static_cast<int>(stack.size()) == n) {
        out.push_back(Monomial{stack});
        return;
    }
    long long top = std::min<long long>(q - 1, degree_left);
    for (long long e = 0; e <= top; ++e) {
        stack.push_back(static_cast<std::uint32_t>(e));
        enumerate_monomials(q, n, degree_left - e, stack, out);
        stack.pop_back();
    }
}

} // namespace

MonomialBasis monomial_basis(int q, int n, const RationalDegree& d) {
    if (n < 0) throw std::invalid_argument("monomial_basis: n must be nonnegative");
    if (!PrimeField::is_prime(static_cast<std::uint32_t>(q)))
        throw std::invalid_argument("monomial_basis: q must be prime");
    if (d.is_negative()) throw std::invalid_argument("monomial_basis: degree must be nonnegative");

    MonomialBasis basis;
    basis.q = q;
    basis.n = n;
    basis.d = d;
    std::vector<std::uint32_t> stack;
    enumerate_monomials(q, n, d.floor_value(), stack, basis.monomials);
    // DFS above emits lex order; a stable sort by degree turns it into
    // graded lex without disturbing the lex tie-break.
    std::stable_sort(basis.monomials.begin(), basis.monomials.end(),
                     [](const Monomial& a, const Monomial& b) {
                         return a.total_degree() < b.total_degree();
                     });

    if (BigInt(basis.monomials.size()) != m_value(q, n, d))
        throw std::runtime_error("monomial_basis: cardinality disagrees with m_value");
    return basis;
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    PrimeField field(p);
}

FpMatrix eval_matrix(const MonomialBasis& basis, const std::vector<FieldVector>& points) {
    PrimeField field(static_cast<std::uint32_t>(basis.q));
    FpMatrix m(field.modulus(), basis.monomials.size(), points.size());
    std::vector<std::vector<std::uint32_t>> powers(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        const auto& pt = points[j];
        if (pt.p() != field.modulus() || pt.dim() != static_cast<std::size_t>(basis.n))
            throw std::invalid_argument("eval_matrix: point has mismatched (p, n)");
        // powers[j] holds x_v^e for all v and e <= q-1, with 0^0 = 1.
        auto& table = powers[j];
        table.assign(static_cast<std::size_t>(basis.n) * basis.q, 1);
        for (int v = 0; v < basis.n; ++v)
            for (int e = 1; e < basis.q; ++e)
                table[v * basis.q + e] =
                    field.mul(table[v * basis.q + e - 1], pt.entries()[static_cast<std::size_t>(v)]);
    }
    for (std::size_t i = 0; i < basis.monomials.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            std::uint32_t value = 1;
            for (int v = 0; v < basis.n; ++v)
                value = field.mul(value,
                                  powers[j][v * basis.q + basis.monomials[i].exponents[static_cast<std::size_t>(v)]]);
            m.at(i, j) = value;
        }
    return m;
}

namespace {

struct Echelon {
    FpMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form with deterministic pivoting: for each column, the
// first row (in order) with a nonzero entry is the pivot.
Echelon rref(FpMatrix m) {
    PrimeField field(m.p());
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                found = r;
                break;
            }
        if (found == m.rows()) continue;
        if (found != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(found, c), m.at(pivot_row, c));
        std::uint32_t inv = field.inv(m.at(pivot_row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m.at(pivot_row, c) = field.mul(m.at(pivot_row, c), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col) == 0) continue;
            std::uint32_t factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(pivot_row, c)));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

} // namespace

std::size_t rank(const FpMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<std::uint32_t>> null_space(const FpMatrix& m) {
    Echelon ech = rref(m);
    PrimeField field(m.p());

    std::vector<std::size_t> pivot_of_col(m.cols(), m.rows());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) pivot_of_col[ech.pivot_cols[i]] = i;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (pivot_of_col[free_col] != m.rows()) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            v[ech.pivot_cols[i]] = field.neg(ech.reduced.at(i, free_col));
        basis.push_back(std::move(v));
    }

    for (const auto& v : basis)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                acc += static_cast<std::uint64_t>(m.at(r, c)) * v[c];
                acc %= m.p();
            }
            if (acc != 0) throw std::runtime_error("null_space: candidate fails M*v = 0");
        }
    return basis;
}

namespace {

constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 20;

std::uint64_t checked_space_size(std::uint32_t p, std::size_t n, std::uint64_t guard) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > guard / p) throw std::invalid_argument("space too large to enumerate");
        total *= p;
    }
    if (total > guard) throw std::invalid_argument("space too large to enumerate");
    return total;
}

// Keys of F_q^n \ (-gamma * A).
std::vector<std::uint64_t> complement_of_scaled(const PointSet& A, const ProgressionSpec& spec,
                                                std::uint64_t total) {
    PrimeField field(spec.p());
    std::uint32_t neg_gamma = field.neg(spec.gamma());
    std::vector<std::uint64_t> scaled;
    scaled.reserve(A.size());
    for (const auto& pt : A.points()) {
        std::vector<std::uint32_t> entries(pt.entries());
        for (auto& e : entries) e = field.mul(neg_gamma, e);
        scaled.push_back(FieldVector(spec.p(), std::move(entries)).packed_key());
    }
    std::sort(scaled.begin(), scaled.end());
    std::vector<std::uint64_t> complement;
    complement.reserve(total - scaled.size());
    for (std::uint64_t key = 0; key < total; ++key)
        if (!std::binary_search(scaled.begin(), scaled.end(), key)) complement.push_back(key);
    return complement;
}

std::vector<FieldVector> keys_to_points(std::uint32_t p, std::size_t n,
                                        const std::vector<std::uint64_t>& keys) {
    std::vector<FieldVector> out;
    out.reserve(keys.size());
    for (std::uint64_t key : keys) out.push_back(FieldVector::from_key(p, n, key));
    return out;
}

} // namespace

std::string SubspaceReport::to_json() const {
    std::ostringstream out;
    out << "{\"q\":" << q << ",\"n\":" << n << ",\"d\":\"" << d.str() << "\""
        << ",\"dim_S\":" << dim_s << ",\"dim_V\":" << dim_v << ",\"lower\":" << lower
        << ",\"upper\":" << upper << ",\"holds\":" << (holds ? "true" : "false") << "}";
    return out.str();
}

SubspaceReport dim_v(const PointSet& A, const RationalDegree& d, const ProgressionSpec& spec) {
    if (A.p() != spec.p()) throw std::invalid_argument("dim_v: modulus mismatch");
    std::uint64_t total = checked_space_size(A.p(), A.dim(), kEnumerationGuard);

    int q = static_cast<int>(A.p());
    int n = static_cast<int>(A.dim());
    MonomialBasis basis = monomial_basis(q, n, d);
    auto complement = complement_of_scaled(A, spec, total);
    FpMatrix constraints = eval_matrix(basis, keys_to_points(A.p(), A.dim(), complement));

    SubspaceReport report;
    report.q = q;
    report.n = n;
    report.d = d;
    report.dim_s = static_cast<long long>(basis.size());
    report.dim_v = report.dim_s - static_cast<long long>(rank(constraints));
    report.lower = report.dim_s - static_cast<long long>(total) + static_cast<long long>(A.size());
    report.upper = 2 * m_value(q, n, d.half()).convert_to<long long>();
    // rank <= number of constraint points, so dim_V >= m_d - (q^n - |A|)
    // unconditionally; a violation can only be an elimination bug.
    if (report.dim_v < report.lower)
        throw std::runtime_error("dim_v: rank-nullity lower bound violated");
    report.holds = std::max(report.lower, 0LL) <= report.dim_v &&
                   report.dim_v <= std::min(report.upper, report.dim_s);
    return report;
}

FpMatrix mix_matrix(const PointSet& A, const std::vector<std::uint32_t>& poly_coeffs,
                    const MonomialBasis& basis, const ProgressionSpec& spec) {
    if (A.p() != spec.p() || A.p() != static_cast<std::uint32_t>(basis.q))
        throw std::invalid_argument("mix_matrix: modulus mismatch");
    if (poly_coeffs.size() != basis.size())
        throw std::invalid_argument("mix_matrix: coefficient count differs from basis size");
    PrimeField field(A.p());
    auto points = A.points();
    FpMatrix b(A.p(), points.size(), points.size());
    std::vector<std::uint32_t> mix_entries(A.dim());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            for (std::size_t v = 0; v < A.dim(); ++v) {
                std::int64_t value =
                    static_cast<std::int64_t>(spec.alpha()) * points[i].entries()[v] +
                    static_cast<std::int64_t>(spec.beta()) * points[j].entries()[v];
                mix_entries[v] = field.reduce(value);
            }
            FpMatrix column = eval_matrix(basis, {FieldVector(A.p(), mix_entries)});
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                acc += static_cast<std::uint64_t>(poly_coeffs[k]) * column.at(k, 0);
                acc %= A.p();
            }
            b.at(i, j) = static_cast<std::uint32_t>(acc);
        }
    return b;
}

Proposition2Report proposition2_check(const PointSet& A, const RationalDegree& d,
                                      const ProgressionSpec& spec) {
    if (A.p() != spec.p()) throw std::invalid_argument("proposition2_check: modulus mismatch");
    checked_space_size(A.p(), A.dim(), kEnumerationGuard);

    int q = static_cast<int>(A.p());
    int n = static_cast<int>(A.dim());
    PrimeField field(A.p());
    MonomialBasis basis = monomial_basis(q, n, d);
    auto points = A.points();

    // Vanishing conditions P(alpha*a + beta*b) = 0 over ordered pairs a != b.
    std::vector<FieldVector> mixes;
    mixes.reserve(points.size() * points.size());
    std::vector<std::uint32_t> entries(A.dim());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            for (std::size_t v = 0; v < A.dim(); ++v) {
                std::int64_t value =
                    static_cast<std::int64_t>(spec.alpha()) * points[i].entries()[v] +
                    static_cast<std::int64_t>(spec.beta()) * points[j].entries()[v];
                entries[v] = field.reduce(value);
            }
            mixes.emplace_back(A.p(), entries);
        }

    FpMatrix eval = eval_matrix(basis, mixes);
    // Constraints are rows (one per mix point), unknowns the coefficients.
    FpMatrix constraints(A.p(), mixes.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < mixes.size(); ++j) constraints.at(j, i) = eval.at(i, j);
    auto solutions = null_space(constraints);

    Proposition2Report report;
    report.solution_dim = static_cast<long long>(solutions.size());
    report.bound = 2 * m_value(q, n, d.half()).convert_to<long long>();

    // Worst support count over the whole solution basis; P = 0 contributes 0.
    std::uint32_t neg_gamma = field.neg(spec.gamma());
    std::vector<FieldVector> scaled_points;
    scaled_points.reserve(points.size());
    for (const auto& pt : points) {
        std::vector<std::uint32_t> scaled(pt.entries());
        for (auto& e : scaled) e = field.mul(neg_gamma, e);
        scaled_points.emplace_back(A.p(), std::move(scaled));
    }
    FpMatrix scaled_eval = eval_matrix(basis, scaled_points);
    for (const auto& coeffs : solutions) {
        long long count = 0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                acc += static_cast<std::uint64_t>(coeffs[k]) * scaled_eval.at(k, j);
                acc %= A.p();
            }
            if (acc != 0) ++count;
        }
        report.count = std::max(report.count, count);
    }
    report.holds = report.count <= report.bound;
    return report;
}

CombinatorialBoundReport combinatorial_bound_check(int q, int n, const RationalDegree& d) {
    RationalDegree top(static_cast<long long>(q - 1) * n);
    if (d.is_negative() || top < d)
        throw std::invalid_argument("combinatorial_bound_check: d out of [0, (q-1)n]");
    CombinatorialBoundReport report;
    report.lhs = BigInt(1);
    for (int i = 0; i < n; ++i) report.lhs *= q;
    report.m_upper = m_value(q, n, top - d);
    report.m_lower = m_value(q, n, d);
    report.holds = report.lhs <= report.m_upper + report.m_lower;
    if (!report.holds)
        throw std::runtime_error("combinatorial_bound_check: inequality violated (bug)");
    return report;
}

PointSet random_progression_free_set(const ProgressionSpec& spec, std::size_t n,
                                     std::uint64_t seed, std::size_t target_size) {
    std::uint64_t total = checked_space_size(spec.p(), n, kEnumerationGuard);
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::size_t stop = total;
    if (target_size > 0)
        stop = std::uniform_int_distribution<std::size_t>(1, target_size)(rng);

    std::vector<std::uint64_t> chosen;
    for (std::uint64_t key : order) {
        if (chosen.size() >= stop) break;
        std::vector<std::uint64_t> trial = chosen;
        trial.push_back(key);
        PointSet candidate = PointSet::from_keys(spec.p(), n, trial);
        if (is_progression_free(candidate, spec)) chosen = std::move(trial);
    }
    return PointSet::from_keys(spec.p(), n, chosen);
}

} // namespace capbound
