#pragma once

#include "pbrigid/arith.hpp"
#include "pbrigid/dualgraph.hpp"
#include "pbrigid/numeric.hpp"

#include <array>
#include <utility>
#include <vector>

namespace pbrigid {

// A cyclic quotient point of X = Proj B on a coordinate edge {i,k} (the two
// nonvanishing coordinates). count is the number of such points on the edge;
// the singularity type is 1/order(q1, q2). mult_delta is the multiplicity of
// the hyperplane section Delta = V_+(x_n) at the point: 1 when the point lies
// on Delta (n not in {i,k}), 0 otherwise.
struct SingularPoint {
    std::array<std::size_t, 2> edge;
    Int count;
    Int order;
    std::array<Int, 2> type_weights;
    Int mult_delta;
};

struct SurfaceReport {
    ExponentTuple tuple;
    WeightVector wv;
    bool well_formed = false;
    std::vector<SingularPoint> points;
    Rat k_squared;
    Rat delta_squared;
    Int amplitude;
};

struct DiscrepancyData {
    Int order;                 // k
    Rat discrepancy;           // -1 + 2/k
    Int exceptional_self_int;  // -k
};

// Well-formed and quasismooth <=> cotype 0.
bool well_formed(const ExponentTuple& s);

// Cyclic quotient points of the surface X = Proj B for a length-4, cotype-0
// tuple. Points are counted by explicit orbit enumeration of the roots of
// t^{a_i} = -1 under the residual weighted scaling, with exact rational
// angles.
std::vector<SingularPoint> singular_points(const ExponentTuple& s);

// K_X^2 = alpha^2 * L / (w_0 w_1 w_2 w_3).
Rat canonical_square(const ExponentTuple& s);

// (Delta^2, Delta.(-K)) for the degree-1 divisor class; requires alpha < 0.
std::pair<Rat, Rat> delta_intersections(const ExponentTuple& s);

// Minimal-resolution data of a 1/k(1,1) point: discrepancy -1 + 2/k and a
// (-k)-exceptional curve.
DiscrepancyData discrepancy(const Int& order);

// Star-shaped resolution graph: central Delta-transform with one exceptional
// branch per point order. Exposed separately so the bookkeeping is testable
// on synthetic inputs.
IntersectionGraph star_resolution_graph(const Rat& delta_squared, const Rat& k_squared,
                                        const std::vector<Int>& orders,
                                        const std::vector<std::string>& branch_names);

// Minimal-resolution dual graph of X for a length-4, cotype-0, alpha < 0
// tuple whose singular points all lie on Delta with multiplicity 1 and have
// type 1/k(q,q) with q invertible (equivalent to 1/k(1,1) after a generator
// change). Anything else errors rather than guessing resolution
// combinatorics.
IntersectionGraph resolution_graph(const ExponentTuple& s);

SurfaceReport surface_report(const ExponentTuple& s);

} // namespace pbrigid
