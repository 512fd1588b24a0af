#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pbrigid {

// A curve on a smooth surface, tracked through blow-downs. The arithmetic
// genus is derived, never stored: p_a = (C^2 + K.C)/2 + 1.
struct Curve {
    std::string name;
    std::int64_t self_int = 0;
    std::int64_t k_degree = 0;
};

std::int64_t arithmetic_genus(const Curve& c);

struct ContractionRecord {
    std::string curve;
    std::map<std::string, std::int64_t> neighbor_multiplicities;
    // per surviving curve: {self-intersection delta, K-degree delta}
    std::map<std::string, std::array<std::int64_t, 2>> curve_deltas;
    std::int64_t ambient_k_squared_after = 0;
};

// Weighted intersection graph: vertices are curves, edges carry intersection
// multiplicities (tangency is multiplicity >= 2, nothing finer is recorded).
class IntersectionGraph {
public:
    IntersectionGraph() = default;

    void add_curve(Curve c);
    void add_edge(const std::string& a, const std::string& b, std::int64_t mult);
    void set_ambient_k_squared(std::int64_t k2) { ambient_k2_ = k2; }

    bool has_curve(const std::string& name) const;
    const Curve& curve(const std::string& name) const;
    std::vector<std::string> curve_names() const; // sorted
    std::size_t curve_count() const { return curves_.size(); }
    std::int64_t multiplicity(const std::string& a, const std::string& b) const;
    std::int64_t ambient_k_squared() const { return ambient_k2_; }
    const std::map<std::pair<std::string, std::string>, std::int64_t>& edges() const { return edges_; }

    friend bool operator==(const IntersectionGraph& a, const IntersectionGraph& b)
    {
        if (a.ambient_k2_ != b.ambient_k2_ || a.edges_ != b.edges_ || a.curves_.size() != b.curves_.size())
            return false;
        for (auto ia = a.curves_.begin(), ib = b.curves_.begin(); ia != a.curves_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second.self_int != ib->second.self_int
                || ia->second.k_degree != ib->second.k_degree)
                return false;
        return true;
    }

private:
    std::map<std::string, Curve> curves_;
    std::map<std::pair<std::string, std::string>, std::int64_t> edges_; // keys with first < second
    std::int64_t ambient_k2_ = 0;
};

// Blows down the named (-1)-curve (p_a = 0 required). Every other curve C
// with m = mult(C, v) picks up C^2 += m^2, K.C -= m; former neighbors A, B
// gain mult(A,B) += m_A * m_B; ambient K^2 increases by 1.
std::pair<IntersectionGraph, ContractionRecord> contract(const IntersectionGraph& g, const std::string& name);

// Deterministic driver: repeatedly contracts the lexicographically smallest
// contractible (-1)-curve that meets no other contractible (-1)-curve. When
// two contractible (-1)-curves intersect, the orders do not commute, so the
// driver stops there and reports the configuration instead of choosing.
std::pair<IntersectionGraph, std::vector<ContractionRecord>> contract_all(const IntersectionGraph& g);

// Ambient K^2 of a fully contracted graph.
std::int64_t del_pezzo_degree(const IntersectionGraph& g);

} // namespace pbrigid
