#include "pbrigid/geometry.hpp"

#include <set>
#include <stdexcept>

namespace pbrigid {

bool well_formed(const ExponentTuple& s)
{
    return cotype(s) == 0;
}

namespace {

void require_surface(const ExponentTuple& s)
{
    if (s.size() != 4)
        throw std::invalid_argument("surface geometry needs a length-4 tuple");
    if (cotype(s) != 0)
        throw std::invalid_argument("surface geometry needs a cotype-0 tuple");
}

// Number of orbits of { t : t^a = -1 } under multiplication by the image of
// the residual stabilizer mu_{w_k}, which shifts the angle by w_i/w_k turns.
// Angles are handled as exact numerators over the common denominator
// lcm(2a, w_k); each orbit is walked once, so the total work is O(a).
Int count_edge_orbits(const Int& a, const Int& w_i, const Int& w_k)
{
    if (a > Int(1) << 20)
        throw std::overflow_error("edge orbit enumeration limit exceeded for exponent " + a.str());
    Int den = int_lcm(2 * a, w_k);
    Int root_step = den / (2 * a);
    Int shift = (w_i * (den / w_k)) % den;

    std::set<Int> angles;
    for (Int m = 0; m < a; ++m)
        angles.insert(((2 * m + 1) * root_step) % den);

    std::set<Int> seen;
    Int orbits = 0;
    for (const Int& start : angles) {
        if (seen.count(start))
            continue;
        ++orbits;
        Int at = start;
        do {
            if (!angles.count(at))
                throw std::logic_error("scaling action does not preserve the solution set");
            seen.insert(at);
            at = (at + shift) % den;
        } while (at != start);
    }
    return orbits;
}

Rat product_of_weights(const WeightVector& wv)
{
    Rat p = 1;
    for (const Int& w : wv.weights)
        p *= Rat(w);
    return p;
}

} // namespace

std::vector<SingularPoint> singular_points(const ExponentTuple& s)
{
    require_surface(s);
    WeightVector wv = weights(s);
    const std::size_t last = s.size() - 1;

    std::vector<SingularPoint> points;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t k = i + 1; k < s.size(); ++k) {
            Int g = int_gcd(wv.weights[i], wv.weights[k]);
            if (g <= 1)
                continue;
            // the diagonal equation misses every coordinate vertex, so only
            // edge points occur
            std::array<std::size_t, 2> comp{};
            std::size_t c = 0;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i && j != k)
                    comp[c++] = j;
            SingularPoint p;
            p.edge = {i, k};
            p.count = count_edge_orbits(s[i], wv.weights[i], wv.weights[k]);
            p.order = g;
            // quasismoothness makes the surface an equivariant graph over the
            // complementary coordinates near the point, so the stabilizer
            // acts with the complementary weights mod g
            p.type_weights = {wv.weights[comp[0]] % g, wv.weights[comp[1]] % g};
            p.mult_delta = (i != last && k != last) ? 1 : 0;
            points.push_back(std::move(p));
        }
    }
    return points;
}

Rat canonical_square(const ExponentTuple& s)
{
    require_surface(s);
    WeightVector wv = weights(s);
    Int alpha = amplitude(s);
    return Rat(alpha * alpha) * Rat(wv.total_degree) / product_of_weights(wv);
}

std::pair<Rat, Rat> delta_intersections(const ExponentTuple& s)
{
    require_surface(s);
    Int alpha = amplitude(s);
    if (alpha >= 0)
        throw std::invalid_argument("delta intersections need alpha < 0");
    WeightVector wv = weights(s);
    Rat delta_sq = Rat(wv.total_degree) / product_of_weights(wv);
    return {delta_sq, Rat(-alpha) * delta_sq};
}

DiscrepancyData discrepancy(const Int& order)
{
    if (order < 2)
        throw std::invalid_argument("discrepancy needs order >= 2");
    return {order, Rat(-1) + Rat(2, order), -order};
}

IntersectionGraph star_resolution_graph(const Rat& delta_squared, const Rat& k_squared,
                                        const std::vector<Int>& orders,
                                        const std::vector<std::string>& branch_names)
{
    if (orders.size() != branch_names.size())
        throw std::invalid_argument("one branch name per point order required");

    Rat delta_tilde_sq = delta_squared;
    Rat k_tilde_sq = k_squared;
    for (const Int& k : orders) {
        DiscrepancyData d = discrepancy(k);
        delta_tilde_sq -= Rat(1, k);
        k_tilde_sq -= Rat(k) * d.discrepancy * d.discrepancy;
    }
    if (!is_integer(delta_tilde_sq))
        throw std::domain_error("transformed Delta self-intersection is not an integer: " + rat_str(delta_tilde_sq));
    if (!is_integer(k_tilde_sq))
        throw std::domain_error("resolved canonical square is not an integer: " + rat_str(k_tilde_sq));

    IntersectionGraph g;
    std::int64_t d2 = to_int64(rat_num(delta_tilde_sq));
    g.add_curve({"Delta", d2, -2 - d2}); // genus-0 adjunction
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::int64_t k = to_int64(orders[i]);
        g.add_curve({branch_names[i], -k, k - 2});
        g.add_edge("Delta", branch_names[i], 1);
    }
    g.set_ambient_k_squared(to_int64(rat_num(k_tilde_sq)));
    return g;
}

namespace {

std::string branch_suffix(std::size_t index)
{
    std::string out;
    do {
        out.insert(out.begin(), static_cast<char>('a' + index % 26));
        index /= 26;
    } while (index > 0);
    return out;
}

} // namespace

IntersectionGraph resolution_graph(const ExponentTuple& s)
{
    require_surface(s);
    if (amplitude(s) >= 0)
        throw std::invalid_argument("resolution graph needs alpha < 0");

    std::vector<Int> orders;
    for (const SingularPoint& p : singular_points(s)) {
        if (p.mult_delta != 1)
            throw std::domain_error("singular point off Delta: non-star configuration out of scope");
        if (p.type_weights[0] != p.type_weights[1] || int_gcd(p.type_weights[0], p.order) != 1)
            throw std::domain_error("singularity type not equivalent to 1/k(1,1): out of scope");
        for (Int c = 0; c < p.count; ++c)
            orders.push_back(p.order);
    }

    std::map<Int, std::size_t> per_order, running;
    for (const Int& k : orders)
        ++per_order[k];
    std::vector<std::string> names;
    for (const Int& k : orders) {
        std::string name = "E" + k.str();
        if (per_order[k] > 1)
            name += branch_suffix(running[k]++);
        names.push_back(std::move(name));
    }

    auto [delta_sq, delta_antik] = delta_intersections(s);
    (void)delta_antik;
    return star_resolution_graph(delta_sq, canonical_square(s), orders, names);
}

SurfaceReport surface_report(const ExponentTuple& s)
{
    require_surface(s);
    SurfaceReport r{s, weights(s), true, singular_points(s), canonical_square(s), Rat(0), amplitude(s)};
    r.delta_squared = Rat(r.wv.total_degree) / product_of_weights(r.wv);
    return r;
}

} // namespace pbrigid
