#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "capbound/acceptance.hpp"
#include "capbound/asymptotics.hpp"
#include "capbound/coeff_oracle.hpp"
#include "capbound/coeffs.hpp"
#include "capbound/polyspace.hpp"
#include "capbound/rational.hpp"
#include "capbound/search.hpp"

namespace {

using capbound::BigInt;
using capbound::RationalDegree;
using Json = nlohmann::ordered_json;

// Exit codes: 0 fine, 1 a mathematical assertion failed to hold,
// 2 bad usage or malformed input.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
    int q = 3;
    int n = 1;
    std::string d;
    double r = 0.0;
    bool r_set = false;
    std::uint64_t seed = 1;
    int trials = 10;
    std::uint64_t budget = 1'000'000'000;
    bool json = false;
    bool csv = false;
    bool one_based = false;
    std::string cards;
    std::string points;
};

std::string big_str(const BigInt& v) { return v.str(); }

void require_readable(const std::string& path) {
    if (!std::filesystem::exists(path))
        throw CLI::ValidationError("--cards/--points", "file not found: " + path);
}

int run_bound(const Options& opt) {
    RationalDegree d(static_cast<long long>(opt.q - 1) * opt.n, 3);
    BigInt m = capbound::m_value(opt.q, opt.n, d);
    BigInt bound = capbound::eg_bound(opt.q, opt.n);
    if (opt.json) {
        Json out;
        out["q"] = opt.q;
        out["n"] = opt.n;
        out["m"] = big_str(m);
        out["bound"] = big_str(bound);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "q=" << opt.q << " n=" << opt.n << " d=" << d.str() << "\n";
        std::cout << "m_d   = " << m << "\n";
        std::cout << "bound = " << bound << " (3 * m_d; progression-free sets cannot be larger)\n";
    }
    return kOk;
}

int run_coeffs(const Options& opt) {
    capbound::CoeffRow row = capbound::coeff_row(opt.q, opt.n);
    if (opt.json) {
        Json out;
        out["q"] = opt.q;
        out["n"] = opt.n;
        Json values = Json::array();
        for (const auto& v : row.values) values.push_back(big_str(v));
        out["coefficients"] = values;
        std::cout << out.dump() << "\n";
    } else if (opt.csv) {
        for (std::size_t j = 0; j < row.values.size(); ++j)
            std::cout << (j ? "," : "") << row.values[j];
        std::cout << "\n";
    } else {
        std::cout << "coefficients of (1 + x + ... + x^" << opt.q - 1 << ")^" << opt.n << ":\n";
        for (std::size_t j = 0; j < row.values.size(); ++j)
            std::cout << "  c_" << j << " = " << row.values[j] << "\n";
    }
    return kOk;
}

int run_rate(const Options& opt) {
    capbound::RateReport report = capbound::minimize_crq(opt.q);
    if (opt.json) {
        Json out;
        out["q"] = report.q;
        out["r_star"] = report.r_star;
        out["c_star"] = report.c_star;
        out["prefactor_b"] = report.prefactor_b;
        if (opt.q == 3) {
            capbound::ClosedFormQ3 closed = capbound::q3_closed_form();
            out["closed_form_r"] = closed.r;
            out["closed_form_c"] = closed.c;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "q = " << report.q << "\n";
        std::cout << "r* = " << report.r_star << "\n";
        std::cout << "c* = " << report.c_star << "  (growth rate; c* < q)\n";
        std::cout << "B  = " << report.prefactor_b << "  (c*^2 / (1 - r*))\n";
        if (opt.q == 3) {
            capbound::ClosedFormQ3 closed = capbound::q3_closed_form();
            std::cout << "closed form: r = " << closed.r << ", c = " << closed.c << "\n";
        }
    }
    return kOk;
}

int run_growth(const Options& opt) {
    double r = opt.r_set ? opt.r : capbound::minimize_crq(opt.q).r_star;
    bool all_hold = true;
    Json rows = Json::array();
    for (int n = 0; n <= opt.n; ++n) {
        capbound::GrowthReport report = capbound::check_growth(opt.q, n, r);
        all_hold = all_hold && report.holds;
        if (opt.json) {
            Json row;
            row["n"] = n;
            row["lhs"] = big_str(report.lhs);
            row["rhs"] = report.rhs;
            row["holds"] = report.holds;
            rows.push_back(row);
        } else {
            std::cout << "n=" << n << "  m=" << report.lhs << "  c^n=" << report.rhs << "  "
                      << (report.holds ? "holds" : "VIOLATED") << "\n";
        }
    }
    if (opt.json) {
        Json out;
        out["q"] = opt.q;
        out["r"] = r;
        out["rows"] = rows;
        out["holds"] = all_hold;
        std::cout << out.dump() << "\n";
    }
    return all_hold ? kOk : kViolation;
}

int run_lab(const Options& opt) {
    RationalDegree d = opt.d.empty()
                           ? RationalDegree(static_cast<long long>(opt.q - 1) * opt.n, 3)
                           : RationalDegree::parse(opt.d);
    capbound::ProgressionSpec spec =
        capbound::ProgressionSpec::arithmetic_progression(static_cast<std::uint32_t>(opt.q));

    capbound::CombinatorialBoundReport counts =
        capbound::combinatorial_bound_check(opt.q, opt.n, d);
    if (!opt.json)
        std::cout << "count bound: " << counts.lhs << " <= " << counts.m_upper << " + "
                  << counts.m_lower << (counts.holds ? "  holds" : "  VIOLATED") << "\n";

    std::vector<capbound::PointSet> instances;
    if (!opt.points.empty()) {
        instances.push_back(capbound::read_point_set_csv(opt.points));
    } else {
        for (int t = 0; t < opt.trials; ++t)
            instances.push_back(capbound::random_progression_free_set(
                spec, static_cast<std::size_t>(opt.n), opt.seed + static_cast<std::uint64_t>(t)));
    }

    bool all_hold = counts.holds;
    for (const auto& a : instances) {
        capbound::SubspaceReport sub = capbound::dim_v(a, d, spec);
        capbound::Proposition2Report prop = capbound::proposition2_check(a, d, spec);
        all_hold = all_hold && sub.holds && prop.holds;
        if (opt.json) {
            std::cout << sub.to_json() << "\n";
        } else {
            std::cout << "|A|=" << a.size() << "  dim_S=" << sub.dim_s << "  dim_V=" << sub.dim_v
                      << "  sandwich [" << sub.lower << ", " << sub.upper << "]  "
                      << (sub.holds ? "holds" : "VIOLATED") << "; support " << prop.count
                      << " <= " << prop.bound << "  " << (prop.holds ? "holds" : "VIOLATED")
                      << "\n";
        }
    }
    return all_hold ? kOk : kViolation;
}

int run_oracle(const Options& opt) {
    capbound::CoeffRow row = capbound::coeff_row(opt.q, opt.n);
    capbound::CoeffOracleQuery query;
    for (const auto& v : row.values) query.coefficients.push_back(v.convert_to<double>());
    query.order = static_cast<int>(row.values.size());
    query.radius = opt.r_set ? opt.r : 0.6;

    double worst = 0.0;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
        query.index = static_cast<int>(i);
        double exact = row.values[i].convert_to<double>();
        double got = capbound::extract_coeff(query);
        worst = std::max(worst, std::fabs(got - exact) / std::max(1.0, std::fabs(exact)));
    }
    bool ok = worst <= 1e-5;
    if (opt.json) {
        Json out;
        out["q"] = opt.q;
        out["n"] = opt.n;
        out["radius"] = query.radius;
        out["coefficients"] = row.values.size();
        out["worst_relative_error"] = worst;
        out["holds"] = ok;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "extraction vs exact row, q=" << opt.q << " n=" << opt.n
                  << ": worst relative error " << worst << (ok ? "  ok" : "  TOO LARGE") << "\n";
    }
    return ok ? kOk : kViolation;
}

int run_search(const Options& opt) {
    capbound::ProgressionSpec spec =
        capbound::ProgressionSpec::arithmetic_progression(static_cast<std::uint32_t>(opt.q));
    capbound::SearchResult result =
        capbound::max_progression_free(spec, static_cast<std::size_t>(opt.n), opt.budget);
    BigInt bound = capbound::eg_bound(opt.q, opt.n);
    bool within = BigInt(result.max_size) <= bound;
    if (opt.json) {
        Json out;
        out["q"] = opt.q;
        out["n"] = opt.n;
        out["max_size"] = result.max_size;
        out["exhaustive"] = result.exhaustive;
        out["nodes_explored"] = result.nodes_explored;
        out["bound"] = big_str(bound);
        Json witness = Json::array();
        for (const auto& pt : result.witness.points()) witness.push_back(pt.entries());
        out["witness"] = witness;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "max progression-free size: " << result.max_size
                  << (result.exhaustive ? " (exhaustive)" : " (budget hit, best found)")
                  << ", nodes " << result.nodes_explored << ", bound " << bound << "\n";
        capbound::write_point_set_csv(result.witness, std::cout);
    }
    // An exhaustive maximum above the bound would disprove a theorem.
    return within ? kOk : kViolation;
}

int run_setgame(const Options& opt) {
    auto cards = capbound::read_cards_csv(opt.cards, opt.one_based);
    auto triples = capbound::find_valid_triples(cards);
    if (opt.json) {
        Json out;
        out["cards"] = cards.size();
        Json list = Json::array();
        for (const auto& t : triples) list.push_back(t);
        out["triples"] = list;
        std::cout << out.dump() << "\n";
    } else if (triples.empty()) {
        std::cout << "no valid triples\n";
    } else {
        std::cout << triples.size() << " valid triple(s):\n";
        for (const auto& t : triples)
            std::cout << "  cards " << t[0] << ", " << t[1] << ", " << t[2] << "\n";
    }
    return kOk;
}

int run_repro() {
    auto results = capbound::run_acceptance_suite(&std::cout);
    for (const auto& r : results)
        if (!r.passed) return kViolation;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ellenberg-Gijswijt bounds and desk-scale experiments"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_qn = true) {
        if (with_qn) {
            cmd->add_option("--q", opt.q, "field size q");
            cmd->add_option("--n", opt.n, "dimension n");
        }
        cmd->add_flag("--json", opt.json, "machine-readable JSON output");
        return cmd;
    };

    auto* bound = add_common(app.add_subcommand("bound", "upper bound 3*m_{(q-1)n/3}"));
    auto* coeffs = add_common(app.add_subcommand("coeffs", "coefficient row of the counting polynomial"));
    coeffs->add_flag("--csv", opt.csv, "one comma-separated row");
    auto* rate = app.add_subcommand("rate", "minimize the rate function C_{r,q}");
    add_common(rate);
    auto* growth = add_common(app.add_subcommand("growth", "check m <= c^n for n = 0..N"));
    growth->add_option("--r", opt.r, "evaluation point r in (0,1); default r*")
        ->check(CLI::Range(0.0, 1.0))
        ->each([&](const std::string&) { opt.r_set = true; });
    auto* lab = add_common(app.add_subcommand("lab", "dimension sandwich and support bound on instances"));
    lab->add_option("--d", opt.d, "degree as num/den; default (q-1)n/3");
    lab->add_option("--seed", opt.seed, "base seed for random instances");
    lab->add_option("--trials", opt.trials, "number of random instances")->check(CLI::PositiveNumber);
    lab->add_option("--points", opt.points, "point set CSV instead of random instances");
    auto* oracle = add_common(app.add_subcommand("oracle", "root-of-unity extraction cross-check"));
    oracle->add_option("--r", opt.r, "extraction radius; default 0.6")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { opt.r_set = true; });
    auto* search = add_common(app.add_subcommand("search", "exhaustive maximum progression-free set"));
    search->add_option("--budget", opt.budget, "node budget for the branch-and-bound");
    auto* setgame = app.add_subcommand("setgame", "find all valid triples in a card file");
    add_common(setgame, false);
    setgame->add_option("--cards", opt.cards, "cards CSV, 4 columns per row")->required();
    setgame->add_flag("--one-based", opt.one_based, "card values are in {1,2,3}");
    auto* repro = app.add_subcommand("repro", "run the acceptance table and report pass/fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsage;
    }

    try {
        if (bound->parsed()) return run_bound(opt);
        if (coeffs->parsed()) return run_coeffs(opt);
        if (rate->parsed()) return run_rate(opt);
        if (growth->parsed()) return run_growth(opt);
        if (lab->parsed()) {
            if (!opt.points.empty()) require_readable(opt.points);
            return run_lab(opt);
        }
        if (oracle->parsed()) return run_oracle(opt);
        if (search->parsed()) return run_search(opt);
        if (setgame->parsed()) {
            require_readable(opt.cards);
            return run_setgame(opt);
        }
        if (repro->parsed()) return run_repro();
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kViolation;
    }
    return kUsage;
}
