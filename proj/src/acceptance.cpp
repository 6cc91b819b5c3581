#include "capbound/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "capbound/asymptotics.hpp"
#include "capbound/coeff_oracle.hpp"
#include "capbound/coeffs.hpp"
#include "capbound/polyspace.hpp"
#include "capbound/search.hpp"

namespace capbound {

namespace {

struct Criterion {
    const char* name;
    double time_limit_s;
    std::function<bool(std::ostringstream&)> run;
};

const std::vector<SetCard> kValidTripleCards = {
    SetCard{{1, 0, 0, 1}},
    SetCard{{1, 1, 1, 1}},
    SetCard{{1, 2, 2, 1}},
};

const std::vector<SetCard> kTripleFreeDozen = {
    SetCard{{0, 2, 1, 1}}, SetCard{{0, 1, 2, 1}}, SetCard{{2, 0, 1, 0}},
    SetCard{{2, 2, 0, 2}}, SetCard{{0, 1, 2, 2}}, SetCard{{2, 1, 2, 0}},
    SetCard{{2, 1, 0, 0}}, SetCard{{2, 2, 1, 2}}, SetCard{{0, 1, 1, 0}},
    SetCard{{1, 2, 1, 1}}, SetCard{{2, 0, 2, 2}}, SetCard{{0, 2, 0, 2}},
};

bool criterion_rate_constant(std::ostringstream& detail) {
    RateReport report = minimize_crq(3);
    ClosedFormQ3 closed = q3_closed_form();
    bool ok = std::fabs(report.c_star - closed.c) <= 1e-7 && report.c_star < 2.755105 &&
              std::fabs(report.r_star - closed.r) <= 1e-6;
    detail << "r*=" << report.r_star << " c*=" << report.c_star << " closed c=" << closed.c;
    return ok;
}

bool criterion_rate_existence(std::ostringstream& detail) {
    bool ok = true;
    for (int q : {2, 3, 4, 5, 7, 8}) {
        RateReport report = minimize_crq(q);
        bool row = report.r_star > 0.0 && report.r_star < 1.0 && report.c_star < q;
        if (!row) detail << " q=" << q << " FAILED;";
        ok = ok && row;
    }
    if (ok) detail << "q in {2,3,4,5,7,8}: 0<r*<1 and c*<q";
    return ok;
}

bool criterion_growth(std::ostringstream& detail) {
    bool ok = true;
    int checked = 0;
    for (int q : {2, 3, 5}) {
        double r = minimize_crq(q).r_star;
        for (int n = 0; n <= 30; ++n) {
            GrowthReport report = check_growth(q, n, r);
            if (!report.holds) {
                detail << " violated at q=" << q << " n=" << n << ";";
                ok = false;
            }
            ++checked;
        }
    }
    if (ok) detail << checked << " (q,n) pairs hold";
    return ok;
}

bool criterion_coefficients(std::ostringstream& detail) {
    bool ok = true;
    int checked = 0;
    for (int q = 2; q <= 5; ++q) {
        CoeffRow chain = coeff_row(q, 0);
        for (int n = 0; n <= 12; ++n) {
            CoeffRow row = coeff_row(q, n);
            BigInt sum = 0;
            for (const auto& v : row.values) sum += v;
            BigInt power = 1;
            for (int i = 0; i < n; ++i) power *= q;
            bool symmetric = true;
            for (std::size_t j = 0; j < row.values.size(); ++j)
                symmetric = symmetric && row.values[j] == row.values[row.values.size() - 1 - j];
            bool chained = chain.values == row.values;
            if (!(sum == power && symmetric && chained)) {
                detail << " failed at q=" << q << " n=" << n << ";";
                ok = false;
            }
            ++checked;
            chain = cf_step(q, chain);
        }
    }
    if (ok) detail << checked << " rows: sum=q^n, symmetric, chain agrees";
    return ok;
}

bool criterion_combinatorial_bound(std::ostringstream& detail) {
    bool ok = true;
    int checked = 0;
    for (int q : {2, 3, 5})
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 12; ++k) {
                RationalDegree d(static_cast<long long>(q - 1) * n * k, 12);
                CombinatorialBoundReport report = combinatorial_bound_check(q, n, d);
                if (!report.holds) {
                    detail << " violated at q=" << q << " n=" << n << " d=" << d.str() << ";";
                    ok = false;
                }
                ++checked;
            }
    if (ok) detail << checked << " grid points, zero violations";
    return ok;
}

bool criterion_lab(std::ostringstream& detail) {
    ProgressionSpec spec(3, 1, 1, 1);
    const RationalDegree degrees[] = {RationalDegree(1), RationalDegree(4, 3), RationalDegree(2),
                                      RationalDegree(8, 3)};
    bool ok = true;
    int trials = 0;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}})
        for (std::uint64_t t = 0; t < 50; ++t) {
            PointSet a = random_progression_free_set(spec, n, 1000 * n + t);
            for (const auto& d : degrees) {
                SubspaceReport sub = dim_v(a, d, spec);
                Proposition2Report prop = proposition2_check(a, d, spec);
                if (!(sub.holds && prop.holds)) {
                    detail << " failed n=" << n << " seed=" << 1000 * n + t << " d=" << d.str()
                           << ";";
                    ok = false;
                }
                ++trials;
            }
        }
    if (ok) detail << trials << " trials: sandwich and support bound hold";
    return ok;
}

bool criterion_basis_rank(std::ostringstream& detail) {
    bool ok = true;
    for (int q : {2, 3, 5})
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 12; ++k) {
                RationalDegree d(static_cast<long long>(q - 1) * n * k, 12);
                MonomialBasis basis = monomial_basis(q, n, d);
                if (BigInt(basis.size()) != m_value(q, n, d)) {
                    detail << " size mismatch q=" << q << " n=" << n << ";";
                    ok = false;
                }
            }
    struct FullRankCase {
        int q, n;
    };
    for (FullRankCase c : {FullRankCase{3, 1}, FullRankCase{3, 2}, FullRankCase{5, 1}}) {
        RationalDegree full(static_cast<long long>(c.q - 1) * c.n);
        MonomialBasis basis = monomial_basis(c.q, c.n, full);
        std::uint64_t total = 1;
        for (int i = 0; i < c.n; ++i) total *= static_cast<std::uint64_t>(c.q);
        std::vector<FieldVector> points;
        for (std::uint64_t key = 0; key < total; ++key)
            points.push_back(FieldVector::from_key(static_cast<std::uint32_t>(c.q),
                                                   static_cast<std::size_t>(c.n), key));
        std::size_t r = rank(eval_matrix(basis, points));
        if (r != total) {
            detail << " rank " << r << " != " << total << " at q=" << c.q << " n=" << c.n << ";";
            ok = false;
        }
    }
    if (ok) detail << "basis sizes match m; full-basis matrices have full rank";
    return ok;
}

bool criterion_exhaustive_maxima(std::ostringstream& detail) {
    ProgressionSpec spec(3, 1, 1, 1);
    const std::size_t expected[] = {2, 4, 9};
    bool ok = true;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto start = std::chrono::steady_clock::now();
        SearchResult result = max_progression_free(spec, n);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        BigInt bound = eg_bound(3, static_cast<int>(n));
        // For n = 3 the degree cap is 2 and m_2 = 1 + 3 + 6 = 10, so the
        // bound is 30.
        BigInt expected_bound = (n == 1) ? 3 : (n == 2) ? 9 : 30;
        bool in_time = n <= 2 ? seconds < 1.0 : seconds < 600.0;
        bool row = result.exhaustive && result.max_size == expected[n - 1] &&
                   BigInt(result.max_size) <= bound && bound == expected_bound && in_time;
        detail << " n=" << n << ": max=" << result.max_size << " bound=" << bound
               << (row ? "" : " FAILED") << ";";
        ok = ok && row;
    }
    return ok;
}

bool criterion_extraction_oracle(std::ostringstream& detail) {
    bool ok = true;
    int checked = 0;
    for (int n = 0; n <= 8; ++n) {
        CoeffRow row = coeff_row(3, n);
        CoeffOracleQuery query;
        for (const auto& v : row.values) query.coefficients.push_back(v.convert_to<double>());
        query.order = 2 * n + 1;
        query.radius = 0.6;
        for (int i = 0; i <= 2 * n; ++i) {
            query.index = i;
            double exact = row.values[static_cast<std::size_t>(i)].convert_to<double>();
            double got = extract_coeff(query);
            if (std::fabs(got - exact) > 1e-5 * std::max(1.0, std::fabs(exact))) {
                detail << " extraction off at n=" << n << " i=" << i << ";";
                ok = false;
            }
            ++checked;
        }
    }
    for (long long l = 1; l <= 64; ++l)
        for (long long h = -512; h <= 512; ++h) {
            long long expected = (h % l == 0) ? l : 0;
            if (geometric_sum_filter(l, h) != expected) {
                detail << " filter off at l=" << l << " h=" << h << ";";
                ok = false;
            }
        }
    if (ok) detail << checked << " coefficients and the full filter grid match";
    return ok;
}

bool criterion_prefactor_bounds(std::ostringstream& detail) {
    double r = minimize_crq(3).r_star;
    bool ok = true;
    for (int big_n = 0; big_n <= 8; ++big_n) {
        PrefactorBoundReport report = prefactor_bound_check(3, big_n, r);
        if (!report.holds_div3) {
            detail << " divisible case violated at N=" << big_n << ";";
            ok = false;
        }
    }
    double b = prefactor_bound_check(3, 0, r).prefactor_b;
    if (!(b <= 198.0)) {
        detail << " prefactor " << b << " above 198;";
        ok = false;
    }
    if (ok) detail << "N=0..8 hold; B=" << b << " <= 198";
    return ok;
}

bool criterion_set_game(std::ostringstream& detail) {
    auto one = find_valid_triples(kValidTripleCards);
    auto none = find_valid_triples(kTripleFreeDozen);
    detail << "3-card collection: " << one.size() << " triple(s); 12-card collection: "
           << none.size();
    return one.size() == 1 && none.empty();
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(std::ostream* progress) {
    const Criterion criteria[] = {
        {"rate constant q=3", 1.0, criterion_rate_constant},
        {"rate existence all q", 1.0, criterion_rate_existence},
        {"growth inequality", 5.0, criterion_growth},
        {"coefficient identities", 5.0, criterion_coefficients},
        {"two-sided count bound", 5.0, criterion_combinatorial_bound},
        {"polynomial-method lab", 120.0, criterion_lab},
        {"basis and rank facts", 30.0, criterion_basis_rank},
        {"exhaustive maxima", 600.0, criterion_exhaustive_maxima},
        {"extraction oracle", 5.0, criterion_extraction_oracle},
        {"prefactor bounds", 1.0, criterion_prefactor_bounds},
        {"set game examples", 1.0, criterion_set_game},
    };

    std::vector<CriterionResult> results;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        CriterionResult result;
        result.index = index;
        result.name = criterion.name;
        std::ostringstream detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& err) {
            detail << " exception: " << err.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.seconds >= criterion.time_limit_s) {
            detail << " [over the " << criterion.time_limit_s << " s limit]";
            ok = false;
        }
        result.passed = ok;
        result.detail = detail.str();
        if (progress) {
            char timing[32];
            std::snprintf(timing, sizeof(timing), "%7.2f s", result.seconds);
            *progress << (result.passed ? "PASS" : "FAIL") << "  [" << result.index << "/11] "
                      << result.name << "  (" << timing << ")  " << result.detail << "\n";
            progress->flush();
        }
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace capbound
