#include "pbrigid/classify.hpp"
#include "pbrigid/geometry.hpp"
#include "pbrigid/json_io.hpp"
#include "pbrigid/verify.hpp"
#include "pbrigid/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pbrigid;
using nlohmann::json;

namespace {

// Python ints are arbitrary precision, so the bridge goes through decimal
// strings in both directions.
Int to_int(const py::handle& obj)
{
    return parse_int(py::str(obj).cast<std::string>());
}

py::int_ to_pyint(const Int& v)
{
    return py::int_(py::str(v.str()));
}

ExponentTuple to_tuple(const py::sequence& seq)
{
    std::vector<Int> entries;
    entries.reserve(py::len(seq));
    for (const py::handle& item : seq)
        entries.push_back(to_int(item));
    return ExponentTuple(std::move(entries));
}

py::list to_pylist(const ExponentTuple& s)
{
    py::list out;
    for (const Int& a : s.entries())
        out.append(to_pyint(a));
    return out;
}

py::list to_pylist(const std::vector<ExponentTuple>& tuples)
{
    py::list out;
    for (const ExponentTuple& t : tuples)
        out.append(to_pylist(t));
    return out;
}

std::string classify_json(const py::sequence& seq)
{
    Verdict v = classify(to_tuple(seq));
    json out{{"verdict", to_json(v)}};
    if (v.witness)
        out["witness"] = to_json(*v.witness);
    return out.dump();
}

std::string witness_certificate_json(const py::sequence& seq)
{
    Verdict v = classify(to_tuple(seq));
    if (!v.witness)
        throw std::invalid_argument("tuple is not classified as not-rigid; no witness");
    const Witness& w = *v.witness;
    bool defined = is_well_defined(w.derivation, w.ring);
    Int bound = 2;
    for (const Int& a : v.tuple.entries())
        if (a > bound)
            bound = a;
    NilpotencyCertificate cert =
        check_locally_nilpotent(w.derivation, w.ring, static_cast<unsigned>(to_int64(2 * bound + 2)));
    return json{{"kind", w.kind},
                {"well_defined", defined},
                {"certified", cert.certified},
                {"max_steps", cert.max_steps}}
        .dump();
}

std::string surface_report_json(const py::sequence& seq)
{
    return to_json(surface_report(to_tuple(seq))).dump();
}

std::string resolution_graph_json(const py::sequence& seq)
{
    return to_json(resolution_graph(to_tuple(seq))).dump();
}

std::string resolution_graph_dot(const py::sequence& seq)
{
    return to_dot(resolution_graph(to_tuple(seq)));
}

std::string discrepancy_json(const py::handle& order)
{
    return to_json(discrepancy(to_int(order))).dump();
}

std::string contract_json(const std::string& graph_json, const std::string& name)
{
    auto [g, record] = contract(graph_from_json(json::parse(graph_json)), name);
    return json{{"graph", to_json(g)}, {"record", to_json(record)}}.dump();
}

std::string contract_all_json(const std::string& graph_json)
{
    auto [g, records] = contract_all(graph_from_json(json::parse(graph_json)));
    json trace = json::array();
    for (const ContractionRecord& r : records)
        trace.push_back(to_json(r));
    return json{{"final", to_json(g)}, {"trace", trace}}.dump();
}

std::string graph_dot(const std::string& graph_json)
{
    return to_dot(graph_from_json(json::parse(graph_json)));
}

std::string verify_paper_json()
{
    json checks = json::array();
    bool all = true;
    for (const CheckResult& r : run_paper_checks()) {
        checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all &= r.pass;
    }
    return json{{"checks", checks}, {"all_pass", all}}.dump();
}

bool diagonal_curve_singular(const py::handle& a, const py::handle& b, const std::string& c_re,
                             const std::string& c_im)
{
    GaussianRational c{parse_rat(c_re), parse_rat(c_im)};
    return diagonal_curve_singularity(to_int(a), to_int(b), c) == CurvePointQuery::SingularAtOrigin;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Pham-Brieskorn rigidity classifier and exact surface geometry";
    m.attr("__version__") = kVersion;

    m.def("lcm", [](const py::sequence& s) { return to_pyint(lcm_tuple(to_tuple(s))); });
    m.def("cotype", [](const py::sequence& s) { return cotype(to_tuple(s)); });
    m.def("normalize", [](const py::sequence& s) { return to_pylist(normalize(to_tuple(s))); });
    m.def("weights", [](const py::sequence& s) {
        WeightVector wv = weights(to_tuple(s));
        py::list ws;
        for (const Int& w : wv.weights)
            ws.append(to_pyint(w));
        return py::make_tuple(ws, to_pyint(wv.total_degree));
    });
    m.def("amplitude", [](const py::sequence& s) { return to_pyint(amplitude(to_tuple(s))); });
    m.def("g_i", [](const py::sequence& s, std::size_t i) { return to_pyint(g_i(to_tuple(s), i)); });
    m.def("leq_order", [](const py::sequence& s, const py::sequence& t, std::size_t i) {
        return leq_order(to_tuple(s), to_tuple(t), i);
    });
    m.def("gamma_class", [](const py::sequence& s) { return to_string(gamma_class(to_tuple(s))); });
    m.def("enumerate_gamma_minus", [](unsigned n, const py::object& max_entry) {
        std::optional<Int> bound;
        if (!max_entry.is_none())
            bound = to_int(max_entry);
        return to_pylist(enumerate_gamma_minus(n, bound));
    }, py::arg("n") = 3, py::arg("max_entry") = py::none());
    m.def("enumerate_gamma_plus", [](unsigned n, const py::handle& max_entry) {
        return to_pylist(enumerate_gamma_plus(n, to_int(max_entry)));
    });
    m.def("propagate_rigidity", [](const py::sequence& known, const py::sequence& target, std::size_t i) {
        return propagate_rigidity(to_tuple(known), to_tuple(target), i);
    });
    m.def("well_formed", [](const py::sequence& s) { return well_formed(to_tuple(s)); });
    m.def("classify_json", &classify_json);
    m.def("witness_certificate_json", &witness_certificate_json);
    m.def("surface_report_json", &surface_report_json);
    m.def("resolution_graph_json", &resolution_graph_json);
    m.def("resolution_graph_dot", &resolution_graph_dot);
    m.def("discrepancy_json", &discrepancy_json);
    m.def("contract_json", &contract_json);
    m.def("contract_all_json", &contract_all_json);
    m.def("graph_dot", &graph_dot);
    m.def("verify_paper_json", &verify_paper_json);
    m.def("diagonal_curve_singular", &diagonal_curve_singular, py::arg("a"), py::arg("b"),
          py::arg("c_re"), py::arg("c_im") = "0");
}
