#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capbound/asymptotics.hpp"
#include "capbound/coeff_oracle.hpp"
#include "capbound/coeffs.hpp"
#include "capbound/polyspace.hpp"
#include "capbound/rational.hpp"
#include "capbound/search.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Big integers cross into Python as exact ints, never floats.
template <>
struct type_caster<capbound::BigInt> {
    PYBIND11_TYPE_CASTER(capbound::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!text) return false;
        value = capbound::BigInt(std::string(str(text)));
        return true;
    }

    static handle cast(const capbound::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

capbound::PointSet make_point_set(std::uint32_t p, std::size_t n,
                                  const std::vector<std::vector<std::uint32_t>>& rows) {
    std::vector<capbound::FieldVector> points;
    points.reserve(rows.size());
    for (const auto& row : rows) points.emplace_back(p, row);
    return capbound::PointSet(p, n, points);
}

std::vector<std::vector<std::uint32_t>> point_rows(const capbound::PointSet& set) {
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(set.size());
    for (const auto& pt : set.points()) rows.push_back(pt.entries());
    return rows;
}

std::vector<capbound::SetCard> make_cards(const std::vector<std::array<std::uint8_t, 4>>& rows) {
    std::vector<capbound::SetCard> cards;
    cards.reserve(rows.size());
    for (const auto& row : rows) cards.push_back(capbound::SetCard{row});
    return cards;
}

} // namespace

PYBIND11_MODULE(_capbound, m) {
    m.doc() = "Exact progression-free bounds over F_q^n and the experiments around them";

    py::class_<capbound::RationalDegree>(m, "RationalDegree")
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den") = 1)
        .def(py::init(&capbound::RationalDegree::parse))
        .def_property_readonly("num", &capbound::RationalDegree::num)
        .def_property_readonly("den", &capbound::RationalDegree::den)
        .def("floor", &capbound::RationalDegree::floor_value)
        .def("__str__", &capbound::RationalDegree::str)
        .def("__repr__", [](const capbound::RationalDegree& d) {
            return "RationalDegree(" + d.str() + ")";
        });
    py::implicitly_convertible<py::int_, capbound::RationalDegree>();
    py::implicitly_convertible<py::str, capbound::RationalDegree>();

    m.def(
        "coeff_row",
        [](int q, int n) { return capbound::coeff_row(q, n).values; },
        py::arg("q"), py::arg("n"),
        "Coefficients of (1 + x + ... + x^(q-1))^n as exact ints");
    m.def("m_value", &capbound::m_value, py::arg("q"), py::arg("n"), py::arg("d"),
          "Partial coefficient sum m_d");
    m.def("eg_bound", &capbound::eg_bound, py::arg("q"), py::arg("n"),
          "Upper bound 3 * m_{(q-1)n/3} on progression-free subsets of F_q^n");

    m.def("crq", &capbound::crq, py::arg("r"), py::arg("q"));
    py::class_<capbound::RateReport>(m, "RateReport")
        .def_readonly("q", &capbound::RateReport::q)
        .def_readonly("r_star", &capbound::RateReport::r_star)
        .def_readonly("c_star", &capbound::RateReport::c_star)
        .def_readonly("prefactor_b", &capbound::RateReport::prefactor_b);
    m.def("minimize_crq", &capbound::minimize_crq, py::arg("q"), py::arg("tol") = 1e-10);
    m.def("q3_closed_form", [] {
        capbound::ClosedFormQ3 closed = capbound::q3_closed_form();
        return py::make_tuple(closed.r, closed.c);
    });
    py::class_<capbound::GrowthReport>(m, "GrowthReport")
        .def_readonly("lhs", &capbound::GrowthReport::lhs)
        .def_readonly("rhs", &capbound::GrowthReport::rhs)
        .def_readonly("holds", &capbound::GrowthReport::holds);
    m.def("check_growth", &capbound::check_growth, py::arg("q"), py::arg("n"), py::arg("r"));

    m.def("geometric_sum_filter", &capbound::geometric_sum_filter, py::arg("l"), py::arg("h"));
    m.def(
        "extract_coeff",
        [](const std::vector<double>& f, int i, int l, double r) {
            return capbound::extract_coeff(capbound::CoeffOracleQuery{f, i, l, r});
        },
        py::arg("coefficients"), py::arg("index"), py::arg("order"), py::arg("radius"),
        "Root-of-unity extraction of one coefficient (floating-point oracle)");

    py::class_<capbound::ProgressionSpec>(m, "ProgressionSpec")
        .def(py::init<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>(),
             py::arg("p"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
        .def_static("arithmetic_progression", &capbound::ProgressionSpec::arithmetic_progression,
                    py::arg("p"))
        .def_property_readonly("p", &capbound::ProgressionSpec::p)
        .def_property_readonly("alpha", &capbound::ProgressionSpec::alpha)
        .def_property_readonly("beta", &capbound::ProgressionSpec::beta)
        .def_property_readonly("gamma", &capbound::ProgressionSpec::gamma);

    py::class_<capbound::PointSet>(m, "PointSet")
        .def(py::init(&make_point_set), py::arg("p"), py::arg("n"), py::arg("points"))
        .def_property_readonly("p", &capbound::PointSet::p)
        .def_property_readonly("n", &capbound::PointSet::dim)
        .def("__len__", &capbound::PointSet::size)
        .def("points", &point_rows);

    m.def("is_progression_free", &capbound::is_progression_free, py::arg("points"),
          py::arg("spec"));
    m.def("random_progression_free_set", &capbound::random_progression_free_set, py::arg("spec"),
          py::arg("n"), py::arg("seed"), py::arg("target_size") = 0);

    m.def(
        "monomial_basis",
        [](int q, int n, const capbound::RationalDegree& d) {
            std::vector<std::vector<std::uint32_t>> out;
            for (const auto& mono : capbound::monomial_basis(q, n, d).monomials)
                out.push_back(mono.exponents);
            return out;
        },
        py::arg("q"), py::arg("n"), py::arg("d"),
        "Exponent tuples with entries <= q-1 and total degree <= d, graded lex");

    py::class_<capbound::SubspaceReport>(m, "SubspaceReport")
        .def_readonly("dim_S", &capbound::SubspaceReport::dim_s)
        .def_readonly("dim_V", &capbound::SubspaceReport::dim_v)
        .def_readonly("lower", &capbound::SubspaceReport::lower)
        .def_readonly("upper", &capbound::SubspaceReport::upper)
        .def_readonly("holds", &capbound::SubspaceReport::holds)
        .def("to_json", &capbound::SubspaceReport::to_json);
    m.def("dim_v", &capbound::dim_v, py::arg("points"), py::arg("d"), py::arg("spec"));

    py::class_<capbound::Proposition2Report>(m, "SupportBoundReport")
        .def_readonly("count", &capbound::Proposition2Report::count)
        .def_readonly("bound", &capbound::Proposition2Report::bound)
        .def_readonly("solution_dim", &capbound::Proposition2Report::solution_dim)
        .def_readonly("holds", &capbound::Proposition2Report::holds);
    m.def("proposition2_check", &capbound::proposition2_check, py::arg("points"), py::arg("d"),
          py::arg("spec"));

    py::class_<capbound::CombinatorialBoundReport>(m, "CombinatorialBoundReport")
        .def_readonly("lhs", &capbound::CombinatorialBoundReport::lhs)
        .def_readonly("m_upper", &capbound::CombinatorialBoundReport::m_upper)
        .def_readonly("m_lower", &capbound::CombinatorialBoundReport::m_lower)
        .def_readonly("holds", &capbound::CombinatorialBoundReport::holds);
    m.def("combinatorial_bound_check", &capbound::combinatorial_bound_check, py::arg("q"),
          py::arg("n"), py::arg("d"));

    py::class_<capbound::SearchResult>(m, "SearchResult")
        .def_readonly("q", &capbound::SearchResult::q)
        .def_readonly("n", &capbound::SearchResult::n)
        .def_readonly("max_size", &capbound::SearchResult::max_size)
        .def_readonly("exhaustive", &capbound::SearchResult::exhaustive)
        .def_readonly("nodes_explored", &capbound::SearchResult::nodes_explored)
        .def_property_readonly("witness", [](const capbound::SearchResult& result) {
            return point_rows(result.witness);
        });
    m.def("max_progression_free", &capbound::max_progression_free, py::arg("spec"), py::arg("n"),
          py::arg("node_budget") = std::uint64_t{1'000'000'000});
    m.def("verify_cap", &capbound::verify_cap, py::arg("points"));

    m.def(
        "find_valid_triples",
        [](const std::vector<std::array<std::uint8_t, 4>>& rows) {
            return capbound::find_valid_triples(make_cards(rows));
        },
        py::arg("cards"), "All unordered valid triples among distinct 4-feature cards");
}
