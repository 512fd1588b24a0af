#include "pbrigid/json_io.hpp"

#include "pbrigid/version.hpp"

#include <sstream>

namespace pbrigid {

using nlohmann::json;

nlohmann::json to_json(const ExponentTuple& s)
{
    json out = json::array();
    for (const Int& a : s.entries())
        out.push_back(a.str());
    return out;
}

ExponentTuple tuple_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("tuple must be a JSON array");
    std::vector<Int> entries;
    for (const auto& item : j) {
        if (item.is_number_integer())
            entries.push_back(Int(item.get<long long>()));
        else if (item.is_string())
            entries.push_back(parse_int(item.get<std::string>()));
        else
            throw std::invalid_argument("tuple entries must be integers or decimal strings");
    }
    return ExponentTuple(std::move(entries));
}

nlohmann::json to_json(const WeightVector& wv)
{
    json ws = json::array();
    for (const Int& w : wv.weights)
        ws.push_back(w.str());
    return json{{"weights", ws}, {"total_degree", wv.total_degree.str()}};
}

nlohmann::json to_json(const ProofStep& step)
{
    json out{{"step", to_string(step.kind)}};
    switch (step.kind) {
    case StepKind::UnitExponent:
        out["index"] = step.index_a;
        break;
    case StepKind::DoubleTwo:
        out["index"] = step.index_a;
        out["second_index"] = step.index_b;
        break;
    case StepKind::FanoThreefoldCase:
        out["tuple"] = to_json(*step.tuple);
        out["citation"] = step.citation;
        break;
    case StepKind::CotypeAtLeastTwoDrop:
        out["index"] = step.index_a;
        out["tuple"] = to_json(*step.tuple);
        break;
    case StepKind::CotypeOneLcmSubstitution:
        out["index"] = step.index_a;
        out["substituted"] = to_json(*step.tuple);
        break;
    case StepKind::OrderPropagation:
        out["index"] = step.index_a;
        out["comparison"] = to_json(*step.tuple);
        break;
    default:
        break;
    }
    if (!step.children.empty()) {
        json children = json::array();
        for (const ProofStep& child : step.children)
            children.push_back(to_json(child));
        out["children"] = children;
    }
    return out;
}

std::string witness_id(const Witness& w)
{
    std::ostringstream id;
    id << w.kind;
    for (const auto& var : w.ring.variables)
        id << '-' << var;
    return id.str();
}

nlohmann::json to_json(const Verdict& v)
{
    json out{{"tuple", to_json(v.tuple)}, {"status", to_string(v.status)}, {"trace", to_json(v.trace)}};
    if (v.witness)
        out["witness_id"] = witness_id(*v.witness);
    return out;
}

nlohmann::json to_json(const SingularPoint& p)
{
    return json{
        {"edge", {p.edge[0], p.edge[1]}},
        {"count", p.count.str()},
        {"order", p.order.str()},
        {"type_weights", {p.type_weights[0].str(), p.type_weights[1].str()}},
        {"mult_delta", p.mult_delta.str()},
    };
}

nlohmann::json to_json(const SurfaceReport& r)
{
    json points = json::array();
    for (const SingularPoint& p : r.points)
        points.push_back(to_json(p));
    return json{
        {"tuple", to_json(r.tuple)},
        {"weights", to_json(r.wv)},
        {"well_formed", r.well_formed},
        {"singular_points", points},
        {"k_squared", rat_str(r.k_squared)},
        {"delta_squared", rat_str(r.delta_squared)},
        {"amplitude", r.amplitude.str()},
    };
}

nlohmann::json to_json(const DiscrepancyData& d)
{
    return json{
        {"order", d.order.str()},
        {"discrepancy", rat_str(d.discrepancy)},
        {"exceptional_self_int", d.exceptional_self_int.str()},
    };
}

nlohmann::json to_json(const IntersectionGraph& g)
{
    json curves = json::array();
    for (const std::string& name : g.curve_names()) {
        const Curve& c = g.curve(name);
        curves.push_back(json{{"name", c.name}, {"self_int", c.self_int}, {"k_degree", c.k_degree}});
    }
    json edges = json::array();
    for (const auto& [key, mult] : g.edges())
        edges.push_back(json{{"a", key.first}, {"b", key.second}, {"mult", mult}});
    return json{{"curves", curves}, {"edges", edges}, {"ambient_k_squared", g.ambient_k_squared()}};
}

IntersectionGraph graph_from_json(const json& j)
{
    IntersectionGraph g;
    for (const auto& c : j.at("curves"))
        g.add_curve({c.at("name").get<std::string>(), c.at("self_int").get<std::int64_t>(),
                     c.at("k_degree").get<std::int64_t>()});
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.at("mult").get<std::int64_t>());
    g.set_ambient_k_squared(j.value("ambient_k_squared", std::int64_t{0}));
    return g;
}

nlohmann::json to_json(const ContractionRecord& r)
{
    json neighbors = json::array();
    for (const auto& [name, mult] : r.neighbor_multiplicities)
        neighbors.push_back(json{{"curve", name}, {"mult", mult}});
    json deltas = json::array();
    for (const auto& [name, delta] : r.curve_deltas)
        deltas.push_back(json{{"curve", name}, {"self_int", delta[0]}, {"k_degree", delta[1]}});
    return json{
        {"contracted", r.curve},
        {"neighbors", neighbors},
        {"curve_deltas", deltas},
        {"ambient_k_squared_after", r.ambient_k_squared_after},
    };
}

nlohmann::json to_json(const Polynomial& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (std::uint32_t e : m)
            exps.push_back(e);
        terms.push_back(json{{"exponents", exps}, {"re", rat_str(c.re)}, {"im", rat_str(c.im)}});
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

nlohmann::json to_json(const Derivation& d)
{
    json images = json::array();
    for (const Polynomial& p : d.images)
        images.push_back(to_json(p));
    return json{{"images", images}};
}

nlohmann::json to_json(const PresentedRing& ring)
{
    json ws = json::array();
    for (const Int& w : ring.weights)
        ws.push_back(w.str());
    json metadata = json::object();
    for (const auto& [key, value] : ring.metadata)
        metadata[key] = value;
    return json{
        {"variables", ring.variables},
        {"weights", ws},
        {"relation", to_json(ring.relation)},
        {"metadata", metadata},
    };
}

nlohmann::json to_json(const Witness& w)
{
    return json{
        {"id", witness_id(w)},
        {"kind", w.kind},
        {"ring", to_json(w.ring)},
        {"derivation", to_json(w.derivation)},
    };
}

std::string to_dot(const IntersectionGraph& g)
{
    std::ostringstream out;
    out << "graph intersection {\n";
    out << "  label=\"K^2 = " << g.ambient_k_squared() << "\";\n";
    out << "  node [shape=circle];\n";
    for (const std::string& name : g.curve_names()) {
        const Curve& c = g.curve(name);
        out << "  \"" << name << "\" [label=\"" << name << " (" << c.self_int << ")\"];\n";
    }
    for (const auto& [key, mult] : g.edges()) {
        out << "  \"" << key.first << "\" -- \"" << key.second << "\"";
        if (mult != 1)
            out << " [label=\"" << mult << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json report_envelope(const std::string& command, json input, json result)
{
    return json{
        {"command", command},
        {"input", std::move(input)},
        {"result", std::move(result)},
        {"version", kVersion},
    };
}

} // namespace pbrigid
