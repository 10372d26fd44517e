#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knoedel/binomial.hpp"
#include "knoedel/closed_forms.hpp"
#include "knoedel/monte_carlo.hpp"
#include "knoedel/verify.hpp"
#include "knoedel/walk.hpp"

namespace py = pybind11;
using namespace knoedel;

namespace {

py::object to_fraction(const ExactRational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    static py::object as_int = py::module_::import("builtins").attr("int");
    return fraction(as_int(r.numerator().get_str()), as_int(r.denominator().get_str()));
}

py::list series_to_list(const TruncatedSeries& s) {
    py::list out;
    for (const auto& c : s.coefficients()) out.append(to_fraction(c));
    return out;
}

py::object state_key(State s) {
    if (s.is_beta()) return py::str("beta");
    return py::int_(s.index());
}

State state_from(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return State::parse(obj.cast<std::string>());
    return State::numbered(obj.cast<std::uint32_t>());
}

WalkModel model_from(const std::string& token, const std::string& p) {
    const ModelKind kind = parse_model_token(token);
    return p.empty() ? WalkModel::balanced(kind) : WalkModel(kind, ExactRational::parse(p));
}

py::dict distribution_to_dict(const StateDistribution& d) {
    py::dict out;
    for (const auto& [s, m] : d.support()) out[state_key(s)] = to_fraction(m);
    return out;
}

}  // namespace

PYBIND11_MODULE(_knoedel, m) {
    m.doc() = "Exact enumeration of the ternary Knoedel bin-packing walks";

    m.def("binom_general", [](std::int64_t a, std::int64_t b) { return to_fraction(binom_general(a, b)); },
          py::arg("upper"), py::arg("lower"));

    m.def(
        "dp_distribution",
        [](const std::string& model, std::uint64_t max_steps, const std::string& p) {
            py::list rows;
            for (const auto& row : dp_distribution(model_from(model, p), max_steps)) rows.append(distribution_to_dict(row));
            return rows;
        },
        py::arg("model"), py::arg("max_steps"), py::arg("p") = "");
    m.def(
        "brute_force_distribution",
        [](const std::string& model, std::uint64_t steps, const std::string& p) {
            return distribution_to_dict(brute_force_distribution(model_from(model, p), steps));
        },
        py::arg("model"), py::arg("steps"), py::arg("p") = "");
    m.def(
        "residue_class",
        [](const std::string& model, const py::object& state) {
            return residue_class(parse_model_token(model), state_from(state));
        },
        py::arg("model"), py::arg("state"));
    m.def(
        "closed_form_probability",
        [](const std::string& model, const py::object& state, std::uint64_t steps) {
            return to_fraction(closed_form_probability(WalkModel::balanced(parse_model_token(model)), state_from(state), steps));
        },
        py::arg("model"), py::arg("state"), py::arg("steps"));

    m.def("theorem1_coeff", [](std::uint64_t n, std::uint64_t j) { return to_fraction(theorem1_coeff(n, j)); },
          py::arg("n"), py::arg("j"));
    m.def("theorem2_coeff", [](std::uint64_t n, std::uint64_t j) { return to_fraction(theorem2_coeff(n, j)); },
          py::arg("n"), py::arg("j"));
    m.def("fbeta_coeff", [](std::uint64_t n) { return to_fraction(fbeta_coeff(n)); }, py::arg("n"));
    m.def("g0_coeff", [](std::uint64_t n) { return to_fraction(g0_coeff(n)); }, py::arg("N"));
    m.def("gbeta_coeff", [](std::uint64_t n) { return to_fraction(gbeta_coeff(n)); }, py::arg("N"));

    m.def("t_series", [](std::size_t order) { return series_to_list(t_series(order)); }, py::arg("order") = kDefaultSeriesOrder);
    m.def("inv_one_minus_t_series", [](std::size_t order) { return series_to_list(inv_one_minus_t_series(order)); },
          py::arg("order") = kDefaultSeriesOrder);
    m.def("u1_series", [](std::size_t order) { return series_to_list(u1_series(order)); }, py::arg("order") = kDefaultSeriesOrder);
    m.def("f0_series", [](std::size_t order) { return series_to_list(f0_series(order)); }, py::arg("order") = kDefaultSeriesOrder);
    m.def("g0_series", [](std::size_t order) { return series_to_list(g0_series(order)); }, py::arg("order") = kDefaultSeriesOrder);

    m.def("kernel_identities_check", [] {
        py::list out;
        for (const auto& r : kernel_identities_check()) out.append(py::make_tuple(r.name, r.passed));
        return out;
    });

    m.def(
        "verify",
        [](std::size_t order, std::uint64_t max_steps, bool inject_fault) {
            py::list out;
            VerifyOptions opts{order, max_steps, inject_fault};
            std::vector<SuiteResult> results;
            {
                py::gil_scoped_release release;
                results = run_verification(opts);
            }
            for (const auto& r : results) out.append(py::make_tuple(r.name, r.passed, r.checks, r.first_failure));
            return out;
        },
        py::arg("order") = 32, py::arg("max_steps") = 30, py::arg("inject_fault") = false);

    m.def(
        "simulate",
        [](const std::string& model, std::uint64_t steps, std::uint64_t trials, std::uint64_t seed, const std::string& p,
           unsigned threads) {
            SimConfig cfg{model_from(model, p), steps, trials, seed, threads};
            EmpiricalDistribution emp;
            {
                py::gil_scoped_release release;
                emp = simulate(cfg);
            }
            py::dict counts;
            for (const auto& [s, c] : emp.counts) counts[state_key(s)] = c;
            return counts;
        },
        py::arg("model"), py::arg("steps"), py::arg("trials"), py::arg("seed") = kDefaultSeed, py::arg("p") = "",
        py::arg("threads") = 0);

    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
