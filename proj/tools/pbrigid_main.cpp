#include "pbrigid/classify.hpp"
#include "pbrigid/geometry.hpp"
#include "pbrigid/json_io.hpp"
#include "pbrigid/verify.hpp"
#include "pbrigid/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pbrigid;
using nlohmann::json;

// exit codes: 0 rigid / success, 1 not-rigid, 2 conjecturally-rigid,
// 64 usage or parse failure, 65 precondition violated, 70 verification failure
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitVerifyFailed = 70;

ExponentTuple parse_tuple(const std::vector<std::string>& words)
{
    std::vector<Int> entries;
    entries.reserve(words.size());
    for (const std::string& w : words) {
        Int v = parse_int(w);
        if (v < 1)
            throw std::invalid_argument("exponents must be positive: " + w);
        entries.push_back(std::move(v));
    }
    return ExponentTuple(std::move(entries));
}

void print_json(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::string describe(const ProofStep& step)
{
    std::ostringstream out;
    out << to_string(step.kind);
    switch (step.kind) {
    case StepKind::UnitExponent:
        out << " at index " << step.index_a;
        break;
    case StepKind::DoubleTwo:
        out << " at indices " << step.index_a << ", " << step.index_b;
        break;
    case StepKind::FanoThreefoldCase:
        out << ' ' << step.tuple->str() << " [" << step.citation << ']';
        break;
    case StepKind::CotypeAtLeastTwoDrop:
        out << " at index " << step.index_a << " -> " << step.tuple->str();
        break;
    case StepKind::CotypeOneLcmSubstitution:
        out << " at index " << step.index_a << " -> " << step.tuple->str();
        break;
    case StepKind::OrderPropagation:
        out << " from " << step.tuple->str() << " at index " << step.index_a;
        break;
    default:
        break;
    }
    return out.str();
}

void print_trace(const ProofStep& step, unsigned depth)
{
    std::cout << std::string(2 * depth + 2, ' ') << describe(step) << '\n';
    for (const ProofStep& child : step.children)
        print_trace(child, depth + 1);
}

int cmd_classify(const std::vector<std::string>& words, bool trace, bool as_json)
{
    ExponentTuple s = parse_tuple(words);
    Verdict v = classify(s);
    if (as_json) {
        json result{{"verdict", to_json(v)}};
        if (v.witness)
            result["witness"] = to_json(*v.witness);
        print_json(report_envelope("classify", to_json(s), result));
    } else {
        std::cout << "tuple: " << s.str() << '\n';
        std::cout << "status: " << to_string(v.status) << '\n';
        if (trace) {
            std::cout << "trace:\n";
            print_trace(v.trace, 0);
        }
        if (v.witness)
            std::cout << "witness: " << witness_id(*v.witness) << '\n';
    }
    switch (v.status) {
    case Status::Rigid: return 0;
    case Status::NotRigid: return 1;
    case Status::ConjecturallyRigid: return 2;
    }
    return kExitDomain;
}

int cmd_enumerate(unsigned n, const std::string& cls, const std::string& max_text, bool as_json)
{
    std::optional<Int> max_entry;
    if (!max_text.empty()) {
        Int v = parse_int(max_text);
        if (v < 2)
            throw std::invalid_argument("--max must be at least 2");
        max_entry = v;
    }

    std::vector<ExponentTuple> tuples;
    if (cls == "gamma-minus") {
        tuples = enumerate_gamma_minus(n, max_entry);
    } else if (cls == "gamma-plus") {
        if (!max_entry)
            throw CLI::ValidationError("--max is required for gamma-plus (the class is infinite)");
        tuples = enumerate_gamma_plus(n, *max_entry);
    } else {
        throw CLI::ValidationError("unknown class: " + cls + " (use gamma-minus or gamma-plus)");
    }

    if (as_json) {
        json arr = json::array();
        for (const ExponentTuple& t : tuples)
            arr.push_back(to_json(t));
        json input{{"n", n}, {"class", cls}};
        if (max_entry)
            input["max"] = max_entry->str();
        print_json(report_envelope("enumerate", input, json{{"tuples", arr}, {"count", tuples.size()}}));
    } else {
        for (const ExponentTuple& t : tuples)
            std::cout << t.str() << '\n';
    }
    return 0;
}

int cmd_geometry(const std::vector<std::string>& words, bool as_json, bool dot, const std::string& graph_path)
{
    ExponentTuple s = parse_tuple(words);
    if (s.size() != 4 || cotype(s) != 0) {
        std::cerr << "geometry needs a length-4 cotype-0 tuple; got " << s.str() << " of cotype "
                  << cotype(s) << '\n';
        return kExitDomain;
    }
    SurfaceReport report = surface_report(s);

    std::optional<IntersectionGraph> graph;
    std::string graph_error;
    try {
        graph = resolution_graph(s);
    } catch (const std::exception& e) {
        graph_error = e.what();
    }

    if (dot) {
        if (!graph) {
            std::cerr << "no resolution graph: " << graph_error << '\n';
            return kExitDomain;
        }
        std::cout << to_dot(*graph);
        return 0;
    }

    if (!graph_path.empty()) {
        if (!graph) {
            std::cerr << "no resolution graph: " << graph_error << '\n';
            return kExitDomain;
        }
        std::ofstream out(graph_path);
        if (!out)
            throw std::invalid_argument("cannot write " + graph_path);
        out << to_json(*graph).dump(2) << '\n';
    }

    if (as_json) {
        json result{{"report", to_json(report)}};
        if (graph)
            result["resolution_graph"] = to_json(*graph);
        print_json(report_envelope("geometry", to_json(s), result));
    } else {
        std::cout << "tuple: " << s.str() << '\n';
        std::cout << "weights: (";
        for (std::size_t i = 0; i < report.wv.weights.size(); ++i)
            std::cout << (i ? "," : "") << report.wv.weights[i];
        std::cout << "), degree " << report.wv.total_degree << '\n';
        std::cout << "amplitude: " << report.amplitude << '\n';
        std::cout << "K^2: " << rat_str(report.k_squared) << '\n';
        std::cout << "Delta^2: " << rat_str(report.delta_squared) << '\n';
        if (report.points.empty()) {
            std::cout << "singular points: none\n";
        } else {
            std::cout << "singular points:\n";
            for (const SingularPoint& p : report.points)
                std::cout << "  edge {" << p.edge[0] << "," << p.edge[1] << "}: " << p.count
                          << " point(s) of type 1/" << p.order << "(" << p.type_weights[0] << ","
                          << p.type_weights[1] << "), mult_Delta " << p.mult_delta << '\n';
        }
        if (graph)
            std::cout << "resolved K^2: " << graph->ambient_k_squared() << '\n';
    }
    return 0;
}

void print_record(const ContractionRecord& r)
{
    std::cout << "contract " << r.curve;
    if (!r.neighbor_multiplicities.empty()) {
        std::cout << " (meets";
        for (const auto& [name, mult] : r.neighbor_multiplicities)
            std::cout << ' ' << name << 'x' << mult;
        std::cout << ')';
    }
    std::cout << "; K^2 -> " << r.ambient_k_squared_after << '\n';
}

void print_graph_summary(const IntersectionGraph& g)
{
    std::cout << "curves:";
    if (g.curve_count() == 0)
        std::cout << " none";
    for (const std::string& name : g.curve_names()) {
        const Curve& c = g.curve(name);
        std::cout << ' ' << name << '(' << c.self_int << ", p_a " << arithmetic_genus(c) << ')';
        // the graph cannot distinguish a cusp from a node
        if (c.self_int == 1 && arithmetic_genus(c) == 1)
            std::cout << " [rational with one cusp or node]";
    }
    std::cout << "\nambient K^2: " << g.ambient_k_squared() << '\n';
}

int cmd_contract(const std::string& input_path, bool auto_mode, const std::string& order, bool as_json,
                 bool dot)
{
    std::ifstream in(input_path);
    if (!in)
        throw std::invalid_argument("cannot read " + input_path);
    json parsed = json::parse(in);
    IntersectionGraph g = graph_from_json(parsed);

    std::vector<ContractionRecord> trace;
    IntersectionGraph final_graph = g;
    if (auto_mode) {
        auto [reduced, records] = contract_all(g);
        final_graph = std::move(reduced);
        trace = std::move(records);
    } else {
        std::stringstream names(order);
        std::string name;
        while (std::getline(names, name, ',')) {
            if (name.empty())
                continue;
            auto [reduced, record] = contract(final_graph, name);
            final_graph = std::move(reduced);
            trace.push_back(std::move(record));
        }
    }

    if (dot) {
        std::cout << to_dot(final_graph);
        return 0;
    }
    if (as_json) {
        json records = json::array();
        for (const ContractionRecord& r : trace)
            records.push_back(to_json(r));
        json input{{"input", input_path}, {"mode", auto_mode ? "auto" : "order"}};
        print_json(report_envelope("contract", input,
                                   json{{"trace", records}, {"final", to_json(final_graph)}}));
    } else {
        for (const ContractionRecord& r : trace)
            print_record(r);
        print_graph_summary(final_graph);
    }
    return 0;
}

int cmd_verify_paper(bool as_json)
{
    std::vector<CheckResult> results = run_paper_checks();
    std::size_t failed = 0;
    for (const CheckResult& r : results)
        if (!r.pass)
            ++failed;

    if (as_json) {
        json arr = json::array();
        for (const CheckResult& r : results)
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        print_json(report_envelope("verify-paper", json::object(),
                                   json{{"checks", arr},
                                        {"passed", results.size() - failed},
                                        {"failed", failed}}));
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.pass && !r.detail.empty())
                std::cout << "  (" << r.detail << ')';
            std::cout << '\n';
        }
        std::cout << results.size() - failed << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rigidity classifier and exact surface geometry for Pham-Brieskorn rings"};
    app.set_version_flag("--version", pbrigid::kVersion);
    app.require_subcommand(1);

    std::vector<std::string> tuple_words;
    bool trace = false, as_json = false, dot = false, auto_mode = false;
    unsigned n = 3;
    std::string cls = "gamma-minus", max_text, graph_path, input_path, order;

    CLI::App* classify_cmd = app.add_subcommand("classify", "Decide rigidity of B_{a_0,...,a_n}");
    classify_cmd->add_option("exponents", tuple_words, "tuple entries (>= 3 positive integers)")->required();
    classify_cmd->add_flag("--trace", trace, "print the proof trace");
    classify_cmd->add_flag("--json", as_json, "machine-readable output");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate Gamma-class representatives");
    enumerate_cmd->add_option("--n", n, "dimension (tuple length - 1)")->required();
    enumerate_cmd->add_option("--class", cls, "gamma-minus or gamma-plus")->required();
    enumerate_cmd->add_option("--max", max_text, "entry bound (required for gamma-plus and n >= 4)");
    enumerate_cmd->add_flag("--json", as_json, "machine-readable output");

    CLI::App* geometry_cmd = app.add_subcommand("geometry", "Surface report for Proj B (n = 3, cotype 0)");
    geometry_cmd->add_option("exponents", tuple_words, "tuple entries (4 positive integers)")->required();
    geometry_cmd->add_flag("--json", as_json, "machine-readable output");
    geometry_cmd->add_flag("--dot", dot, "print the resolution dual graph as DOT");
    geometry_cmd->add_option("--graph", graph_path, "write the resolution graph JSON to a file");

    CLI::App* contract_cmd = app.add_subcommand("contract", "Blow down (-1)-curves in a graph");
    contract_cmd->add_option("--input", input_path, "graph JSON file")->required();
    contract_cmd->add_flag("--auto", auto_mode, "contract automatically until no unambiguous (-1)-curve remains");
    contract_cmd->add_option("--order", order, "comma-separated curve names to contract in order");
    contract_cmd->add_flag("--json", as_json, "machine-readable output");
    contract_cmd->add_flag("--dot", dot, "print the final graph as DOT");

    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "Run the published-value battery");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(tuple_words, trace, as_json);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(n, cls, max_text, as_json);
        if (geometry_cmd->parsed())
            return cmd_geometry(tuple_words, as_json, dot, graph_path);
        if (contract_cmd->parsed()) {
            if (auto_mode == !order.empty()) {
                std::cerr << "contract: pass exactly one of --auto or --order\n";
                return kExitUsage;
            }
            return cmd_contract(input_path, auto_mode, order, as_json, dot);
        }
        if (verify_cmd->parsed())
            return cmd_verify_paper(as_json);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
