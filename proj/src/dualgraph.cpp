#include "pbrigid/dualgraph.hpp"

#include <stdexcept>

namespace pbrigid {

std::int64_t arithmetic_genus(const Curve& c)
{
    return (c.self_int + c.k_degree) / 2 + 1;
}

namespace {

std::pair<std::string, std::string> edge_key(const std::string& a, const std::string& b)
{
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool contractible(const Curve& c)
{
    return c.self_int == -1 && arithmetic_genus(c) == 0;
}

} // namespace

void IntersectionGraph::add_curve(Curve c)
{
    if (c.name.empty())
        throw std::invalid_argument("curve name must be non-empty");
    if ((c.self_int + c.k_degree) % 2 != 0)
        throw std::invalid_argument("curve " + c.name + ": self_int + k_degree must be even");
    if (arithmetic_genus(c) < 0)
        throw std::invalid_argument("curve " + c.name + ": negative arithmetic genus");
    if (!curves_.emplace(c.name, c).second)
        throw std::invalid_argument("duplicate curve name: " + c.name);
}

void IntersectionGraph::add_edge(const std::string& a, const std::string& b, std::int64_t mult)
{
    if (a == b)
        throw std::invalid_argument("self-loops are not allowed: " + a);
    if (mult < 1)
        throw std::invalid_argument("edge multiplicity must be positive");
    if (!has_curve(a) || !has_curve(b))
        throw std::invalid_argument("edge endpoint not in graph: " + a + "-" + b);
    edges_[edge_key(a, b)] += mult;
}

bool IntersectionGraph::has_curve(const std::string& name) const
{
    return curves_.count(name) != 0;
}

const Curve& IntersectionGraph::curve(const std::string& name) const
{
    auto it = curves_.find(name);
    if (it == curves_.end())
        throw std::out_of_range("no such curve: " + name);
    return it->second;
}

std::vector<std::string> IntersectionGraph::curve_names() const
{
    std::vector<std::string> names;
    names.reserve(curves_.size());
    for (const auto& [name, c] : curves_)
        names.push_back(name);
    return names;
}

std::int64_t IntersectionGraph::multiplicity(const std::string& a, const std::string& b) const
{
    auto it = edges_.find(edge_key(a, b));
    return it == edges_.end() ? 0 : it->second;
}

std::pair<IntersectionGraph, ContractionRecord> contract(const IntersectionGraph& g, const std::string& name)
{
    const Curve& v = g.curve(name);
    if (v.self_int != -1)
        throw std::invalid_argument("contract: " + name + " is not a (-1)-curve");
    if (arithmetic_genus(v) != 0)
        throw std::invalid_argument("contract: " + name + " has positive arithmetic genus");

    ContractionRecord record;
    record.curve = name;
    for (const std::string& other : g.curve_names()) {
        if (other == name)
            continue;
        std::int64_t m = g.multiplicity(name, other);
        if (m > 0)
            record.neighbor_multiplicities[other] = m;
    }

    IntersectionGraph out;
    for (const std::string& other : g.curve_names()) {
        if (other == name)
            continue;
        Curve c = g.curve(other);
        std::int64_t m = g.multiplicity(name, other);
        record.curve_deltas[other] = {m * m, -m};
        c.self_int += m * m;
        c.k_degree -= m;
        out.add_curve(c);
    }
    for (const auto& [key, mult] : g.edges())
        if (key.first != name && key.second != name)
            out.add_edge(key.first, key.second, mult);
    for (auto a = record.neighbor_multiplicities.begin(); a != record.neighbor_multiplicities.end(); ++a)
        for (auto b = std::next(a); b != record.neighbor_multiplicities.end(); ++b)
            out.add_edge(a->first, b->first, a->second * b->second);

    out.set_ambient_k_squared(g.ambient_k_squared() + 1);
    record.ambient_k_squared_after = out.ambient_k_squared();
    return {std::move(out), std::move(record)};
}

std::pair<IntersectionGraph, std::vector<ContractionRecord>> contract_all(const IntersectionGraph& g)
{
    IntersectionGraph current = g;
    std::vector<ContractionRecord> trace;
    for (;;) {
        std::string next;
        for (const std::string& name : current.curve_names()) {
            if (!contractible(current.curve(name)))
                continue;
            bool blocked = false;
            for (const std::string& other : current.curve_names())
                if (other != name && current.multiplicity(name, other) > 0
                    && contractible(current.curve(other))) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                next = name;
                break;
            }
        }
        if (next.empty())
            return {std::move(current), std::move(trace)};
        auto [reduced, record] = contract(current, next);
        current = std::move(reduced);
        trace.push_back(std::move(record));
    }
}

std::int64_t del_pezzo_degree(const IntersectionGraph& g)
{
    return g.ambient_k_squared();
}

} // namespace pbrigid
