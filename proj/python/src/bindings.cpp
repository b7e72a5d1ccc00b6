#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <dimercount/asymptotics.hpp>
#include <dimercount/errors.hpp>
#include <dimercount/graphs.hpp>
#include <dimercount/oracle.hpp>
#include <dimercount/recursion.hpp>
#include <dimercount/verify.hpp>

namespace py = pybind11;
namespace dc = dimercount;

namespace {

py::object big_to_py(const dc::BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::dict counts_to_dict(const dc::BoundaryCountVector& v) {
    py::dict d;
    d["x"] = big_to_py(v.x);
    d["y"] = big_to_py(v.y);
    d["z"] = big_to_py(v.z);
    d["w"] = big_to_py(v.w);
    d["m"] = big_to_py(v.total());
    return d;
}

dc::OracleBudget budget_from(std::uint64_t max_steps, double max_seconds) {
    return {max_steps, max_seconds};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dimer-monomer (matching) counts and entropy constants on the hanoi and "
              "sierpx self-similar graph families.";

    py::register_exception<dc::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<dc::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<dc::PrecisionError>(m, "PrecisionError", PyExc_RuntimeError);
    py::register_exception<dc::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<dc::BudgetExhaustedError>(m, "BudgetExhaustedError", PyExc_RuntimeError);

    m.def(
        "build",
        [](const std::string& family, int n, int build_cap) {
            const dc::GraphInstance g = dc::build(dc::parse_family(family), n, build_cap);
            py::dict d;
            d["family"] = dc::family_name(g.family);
            d["stage"] = g.stage;
            d["vertices"] = g.vertices;
            py::list edges;
            for (const auto& [u, v] : g.edges) edges.append(py::make_tuple(g.label(u), g.label(v)));
            d["edges"] = edges;
            py::list outmost;
            for (int v : g.outmost) outmost.append(g.label(v));
            d["outmost"] = outmost;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("build_cap") = dc::kDefaultBuildCap,
        "Explicit graph instance as a dict of canonical labels.");

    m.def(
        "edge_list",
        [](const std::string& family, int n, int build_cap) {
            return dc::build(dc::parse_family(family), n, build_cap).to_edge_list();
        },
        py::arg("family"), py::arg("n"), py::arg("build_cap") = dc::kDefaultBuildCap,
        "Edge-list text form ('family n |V| |E|' header plus one edge per line).");

    m.def(
        "count_matchings",
        [](const std::string& family, int n, std::uint64_t max_steps, double max_seconds) {
            const auto g = dc::build(dc::parse_family(family), n);
            return big_to_py(dc::count_matchings(g, budget_from(max_steps, max_seconds)).value);
        },
        py::arg("family"), py::arg("n"), py::arg("max_steps") = dc::OracleBudget{}.max_steps,
        py::arg("max_seconds") = dc::OracleBudget{}.max_seconds,
        "Brute-force total matching count of the explicit stage-n instance.");

    m.def(
        "count_by_boundary",
        [](const std::string& family, int n, bool parallel, std::uint64_t max_steps,
           double max_seconds) {
            const auto g = dc::build(dc::parse_family(family), n);
            const auto r = dc::count_by_boundary(g, budget_from(max_steps, max_seconds), parallel);
            py::dict d = counts_to_dict(r.counts);
            d["steps"] = r.steps;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("parallel") = false,
        py::arg("max_steps") = dc::OracleBudget{}.max_steps,
        py::arg("max_seconds") = dc::OracleBudget{}.max_seconds,
        "Brute-force corner-classified counts (x, y, z, w) of the stage-n instance.");

    m.def(
        "iterate",
        [](const std::string& family, int n, int exact_cap) {
            py::list rows;
            for (const auto& r : dc::iterate(dc::parse_family(family), n, exact_cap)) {
                py::dict d = counts_to_dict(r.counts);
                d["n"] = r.n;
                d["S"] = big_to_py(r.aggregates.S);
                d["R"] = big_to_py(r.aggregates.R);
                d["T"] = big_to_py(r.aggregates.T);
                d["P"] = big_to_py(r.aggregates.P);
                rows.append(d);
            }
            return rows;
        },
        py::arg("family"), py::arg("n"), py::arg("exact_cap") = dc::kDefaultExactCap,
        "Exact stage ledger 0..n via the boundary-class recursions.");

    m.def(
        "ratios",
        [](const std::string& family, int n, unsigned precision_bits) {
            const auto fam = dc::parse_family(family);
            const auto ledger = dc::iterate(fam, n);
            const auto s = dc::ratios_from_counts(ledger.at(static_cast<size_t>(n)), precision_bits);
            dc::ScopedPrecision guard(precision_bits);
            const unsigned digits = dc::bits_to_digits10(precision_bits);
            py::dict d;
            d["n"] = n;
            d["alpha"] = s.alpha.str(digits);
            d["beta"] = s.beta.str(digits);
            d["gamma"] = s.gamma.str(digits);
            d["epsilon"] = s.epsilon.str(digits);
            d["precision_bits"] = precision_bits;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("precision_bits") = dc::kDefaultPrecisionBits,
        "Stage-n ratios (alpha, beta, gamma) from the exact ledger, as decimal strings.");

    m.def(
        "ratio_fixed_point",
        [](const std::string& family, int digits) {
            const auto r = dc::ratio_fixed_point(dc::parse_family(family), digits);
            dc::ScopedPrecision guard(r.precisionBits);
            py::dict d;
            d["value"] = dc::truncated_decimals(r.value, digits);
            d["radius"] = r.radius.str(3);
            d["stage"] = r.stage;
            d["precision_bits"] = r.precisionBits;
            return d;
        },
        py::arg("family"), py::arg("digits"),
        "Common limit of the ratios, enclosed to 10^-digits.");

    m.def(
        "entropy_bounds",
        [](const std::string& family, int k, unsigned precision_bits) {
            const auto fam = dc::parse_family(family);
            const auto ledger = dc::iterate(fam, std::min(k, dc::kDefaultExactCap));
            const auto b = dc::entropy_bounds(fam, k, ledger, precision_bits);
            dc::ScopedPrecision guard(precision_bits);
            const int digits = std::max(8, b.agreedDigits + 8);
            py::dict d;
            d["k"] = k;
            d["lower"] = dc::truncated_decimals(b.lower, digits);
            d["upper"] = dc::truncated_decimals(b.upper, digits);
            d["agreed_digits"] = b.agreedDigits;
            d["precision_bits"] = b.precisionBits;
            return d;
        },
        py::arg("family"), py::arg("k"), py::arg("precision_bits") = dc::kDefaultPrecisionBits,
        "Rigorous two-sided entropy-per-site bounds anchored at stage k.");

    m.def(
        "entropy",
        [](const std::string& family, int digits) {
            const auto e = dc::entropy(dc::parse_family(family), digits);
            dc::ScopedPrecision guard(e.precisionBits);
            py::dict d;
            d["mu_v"] = e.digitsString;
            d["mu_e"] = dc::truncated_decimals(e.muPerEdge, digits);
            d["digits"] = e.digits;
            d["k"] = e.k;
            d["agreed_digits"] = e.bounds.agreedDigits;
            d["precision_bits"] = e.precisionBits;
            return d;
        },
        py::arg("family"), py::arg("digits"),
        "Entropy per site certified to `digits` decimal digits (truncated expansion).");

    m.def(
        "verify",
        [](py::object family) {
            dc::VerifyOptions opt;
            if (!family.is_none()) opt.family = dc::parse_family(family.cast<std::string>());
            const auto report = dc::run_verify(opt);
            py::list rows;
            for (const auto& c : report.checks) {
                py::dict d;
                d["check"] = c.name;
                d["expected"] = c.expected;
                d["actual"] = c.actual;
                d["pass"] = c.pass;
                d["source"] = c.source;
                rows.append(d);
            }
            py::dict d;
            d["pass"] = report.pass();
            d["checks"] = rows;
            return d;
        },
        py::arg("family") = py::none(),
        "Golden-value and invariant suite; returns the full report.");
}
