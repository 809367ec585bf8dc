#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cobweb/chains.hpp"
#include "cobweb/cli.hpp"
#include "cobweb/connection.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/poset.hpp"

namespace py = pybind11;
using namespace cobweb;

namespace {

py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_py(const Rational& v)
{
    return py::module_::import("fractions").attr("Fraction")(v.get_str());
}

template <class T>
py::list to_py(const std::vector<T>& values)
{
    py::list out;
    for (const T& v : values) out.append(to_py(v));
    return out;
}

template <class T>
py::list to_py(const Matrix<T>& m)
{
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<T, Integer>)
                row.append(to_py(m(i, j)));
            else
                row.append(static_cast<long>(m(i, j)));
        }
        rows.append(row);
    }
    return rows;
}

py::list to_py(const ConnectionTable& t)
{
    py::list rows;
    for (const auto& row : t.rows()) rows.append(to_py(row));
    return rows;
}

/// Accepts an int, a Fraction or a "p/q" string.
Rational rational_from(const py::handle& h)
{
    return cli::parse_rational_list(py::str(h).cast<std::string>()).at(0);
}

RootSequence roots_from(const py::object& obj, int length)
{
    if (py::isinstance<py::str>(obj)) return cli::parse_roots(obj.cast<std::string>(), length);
    std::vector<Rational> terms;
    for (const py::handle& h : obj) terms.push_back(rational_from(h));
    return RootSequence(std::move(terms));
}

BoolMatrix zeta_by(const FSequence& seq, std::size_t size, const std::string& formula)
{
    if (formula == "oracle") return zeta_definitional(seq, size);
    if (formula == "dziemianczuk") return zeta_dziemianczuk(seq, size);
    if (formula == "kwasniewski-fib") return zeta_kwasniewski_fib(size, 0);
    const CobwebPoset poset = CobwebPoset::covering(seq, size);
    if (formula == "blocks") return zeta_blocks(seq, poset.n_levels()).principal(size);
    if (formula == "krot-grid") return zeta_krot_grid_matrix(poset).principal(size);
    throw InvalidParameter("unknown zeta formula '" + formula + "'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact F-nomials, connection constants and cobweb poset incidence matrices";

    py::register_exception<Error>(m, "CobwebError", PyExc_ValueError);

    py::class_<FSequence>(m, "Sequence")
        .def(py::init([](const std::string& descriptor) { return make_sequence(descriptor); }),
             py::arg("descriptor"))
        .def_static("naturals", &FSequence::naturals)
        .def_static("fibonacci", &FSequence::fibonacci)
        .def_static("gaussian", &FSequence::gaussian, py::arg("q"))
        .def_static("constant", &FSequence::constant, py::arg("c"))
        .def("term", [](const FSequence& s, int k) { return to_py(s.term(k)); }, py::arg("k"))
        .def("terms", [](const FSequence& s, int n) { return to_py(s.terms(n)); }, py::arg("n"))
        .def_property_readonly("descriptor", &FSequence::descriptor)
        .def("__eq__", [](const FSequence& a, const FSequence& b) { return a == b; })
        .def("__repr__", [](const FSequence& s) { return "Sequence('" + s.descriptor() + "')"; });
    py::implicitly_convertible<py::str, FSequence>();

    m.def("f_term", [](const FSequence& s, int k) { return to_py(f_term(s, k)); }, py::arg("seq"),
          py::arg("k"));
    m.def("cumulative_sum", [](const FSequence& s, int n) { return to_py(cumulative_sum(s, n)); },
          py::arg("seq"), py::arg("n"));
    m.def("f_factorial", [](const FSequence& s, int n) { return to_py(f_factorial(s, n)); },
          py::arg("seq"), py::arg("n"));
    m.def("fnomial", [](const FSequence& s, int n, int k) { return to_py(fnomial(s, n, k)); },
          py::arg("seq"), py::arg("n"), py::arg("k"));
    m.def(
        "triangle",
        [](const FSequence& s, int n_max, const std::string& form) {
            if (form == "factorial") {
                py::list rows;
                const FNomialTable t = fnomial_table(s, n_max);
                for (int n = 0; n <= n_max; ++n) rows.append(to_py(t.row(n)));
                return rows;
            }
            const auto parsed = parse_recurrence_form(form);
            if (!parsed) throw InvalidParameter("unknown recurrence form '" + form + "'");
            const FNomialTable t = fnomial_recurrence(s, n_max, *parsed);
            py::list rows;
            for (int n = 0; n <= n_max; ++n) rows.append(to_py(t.row(n)));
            return rows;
        },
        py::arg("seq"), py::arg("n_max"), py::arg("form") = "factorial");
    m.def("ccc_rowsum", [](const FSequence& s, int n) { return to_py(ccc_rowsum(s, n)); },
          py::arg("seq"), py::arg("n"));
    m.def(
        "is_admissible",
        [](const FSequence& s, int n_max) {
            const AdmissibilityResult r = is_admissible(s, n_max);
            return py::make_tuple(r.admissible, r.first_failure ? py::cast(*r.first_failure) : py::none());
        },
        py::arg("seq"), py::arg("n_max"));
    m.def(
        "shift_power",
        [](const FSequence& s, const py::object& a, int n) {
            return to_py(f_shift_power(s, rational_from(a), n).coeffs());
        },
        py::arg("seq"), py::arg("a"), py::arg("n"),
        "Coefficients of (x +_F a)^n, lowest degree first.");

    m.def(
        "lah",
        [](const py::object& r, int n_max, const py::object& s) {
            return to_py(lah_table(roots_from(r, n_max), roots_from(s, n_max), n_max));
        },
        py::arg("r"), py::arg("n_max"), py::arg("s") = "zeros");
    m.def(
        "lah_row_sums",
        [](const py::object& r, int n_max, const py::object& s) {
            const ConnectionTable t = lah_table(roots_from(r, n_max), roots_from(s, n_max), n_max);
            std::vector<Rational> sums;
            for (int n = 0; n <= n_max; ++n) sums.push_back(ccc(t, n));
            return to_py(sums);
        },
        py::arg("r"), py::arg("n_max"), py::arg("s") = "zeros");
    m.def(
        "solve_roots",
        [](const py::list& target, const py::object& s) {
            std::vector<Rational> c;
            for (const py::handle& h : target) c.push_back(rational_from(h));
            const int n = static_cast<int>(c.size()) - 1;
            return to_py(solve_root_sequence(c, roots_from(s, std::max(n, 0))).terms());
        },
        py::arg("target"), py::arg("s") = "zeros");
    m.def(
        "stirling2", [](int n, int k) { return to_py(stirling2(n, k)); }, py::arg("n"), py::arg("k"));
    m.def(
        "stirling1_unsigned", [](int n, int k) { return to_py(stirling1_unsigned(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def("bell", [](int n) { return to_py(bell(n)); }, py::arg("n"));
    m.def("bell_identity_check", &bell_identity_check, py::arg("n"));

    m.def(
        "zeta",
        [](const FSequence& s, std::size_t size, const std::string& formula) {
            return to_py(zeta_by(s, size, formula));
        },
        py::arg("seq"), py::arg("size"), py::arg("formula") = "oracle");
    m.def(
        "mobius",
        [](const FSequence& s, std::size_t size, const std::string& formula) {
            if (formula == "inverse") return to_py(mobius_from_zeta(zeta_definitional(s, size)));
            const auto parse = parse_krot(formula.rfind("krot:", 0) == 0 ? formula.substr(5) : formula);
            if (!parse) throw InvalidParameter("unknown Moebius formula '" + formula + "'");
            return to_py(mobius_krot_matrix(CobwebPoset::covering(s, size), *parse).principal(size));
        },
        py::arg("seq"), py::arg("size"), py::arg("formula") = "inverse");
    m.def(
        "render_la_scala",
        [](const FSequence& s, std::size_t size, const std::string& style) {
            const auto parsed = parse_render_style(style);
            if (!parsed) throw InvalidParameter("unknown style '" + style + "'");
            return render_la_scala(zeta_definitional(s, size), *parsed);
        },
        py::arg("seq"), py::arg("size"), py::arg("style") = "ascii");

    m.def(
        "count_max_chains",
        [](const FSequence& s, int first, int last, std::uint64_t cap) {
            const CobwebPoset p(s, last);
            return count_max_chains_enumerated(Layer(p, first, last), cap);
        },
        py::arg("seq"), py::arg("first"), py::arg("last"), py::arg("cap") = default_chain_cap);
    m.def(
        "count_max_chains_closed",
        [](const FSequence& s, int first, int last) { return to_py(count_max_chains_closed(s, first, last)); },
        py::arg("seq"), py::arg("first"), py::arg("last"));
    m.def(
        "partition_theorem",
        [](const FSequence& s, int n, int k, std::uint64_t cap) {
            const PartitionReport r = verify_partition_theorem(s, n, k, cap);
            py::dict out;
            out["n"] = r.n;
            out["k"] = r.k;
            out["fnomial"] = to_py(r.fnomial);
            out["block_size"] = to_py(r.block_size);
            out["layer_count"] = to_py(r.layer_count);
            out["holds"] = r.holds;
            return out;
        },
        py::arg("seq"), py::arg("n"), py::arg("k"), py::arg("cap") = default_chain_cap);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
