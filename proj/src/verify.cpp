#include "pbrigid/verify.hpp"

#include "pbrigid/classify.hpp"
#include "pbrigid/dualgraph.hpp"
#include "pbrigid/geometry.hpp"
#include "pbrigid/json_io.hpp"

#include <functional>
#include <sstream>

namespace pbrigid {

namespace {

struct Check {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool expect(std::string& detail, bool ok, const std::string& what)
{
    if (!ok)
        detail += (detail.empty() ? "" : "; ") + what;
    return ok;
}

bool check_point(std::string& detail, const SingularPoint& p, std::size_t e0, std::size_t e1,
                 long long count, long long order)
{
    bool ok = p.edge[0] == e0 && p.edge[1] == e1 && p.count == count && p.order == order
        && p.type_weights[0] == 1 && p.type_weights[1] == 1 && p.mult_delta == 1;
    std::ostringstream what;
    what << "edge {" << e0 << "," << e1 << "} expected count " << count << " order " << order
         << " type (1,1) mult 1";
    return expect(detail, ok, what.str());
}

const std::vector<Check>& checks()
{
    static const std::vector<Check> table = {
        {"gamma-minus-enumeration-n3", [](std::string& detail) {
             const std::vector<ExponentTuple> expected = {
                 {2, 3, 3, 6}, {2, 3, 4, 12}, {2, 3, 5, 30}, {2, 3, 6, 6},
                 {2, 4, 4, 4}, {3, 3, 3, 3},  {3, 3, 4, 4},  {3, 3, 5, 5},
             };
             std::vector<ExponentTuple> got = enumerate_gamma_minus(3);
             std::ostringstream list;
             for (const auto& t : got)
                 list << t.str() << ' ';
             detail = "found " + std::to_string(got.size()) + ": " + list.str();
             return got == expected;
         }},
        {"weights-2-3-5-30", [](std::string& detail) {
             WeightVector wv = weights(ExponentTuple{2, 3, 5, 30});
             detail = "expected (15,10,6,1) of degree 30";
             return wv.weights == std::vector<Int>{15, 10, 6, 1} && wv.total_degree == 30;
         }},
        {"weights-2-3-4-12", [](std::string& detail) {
             WeightVector wv = weights(ExponentTuple{2, 3, 4, 12});
             detail = "expected (6,4,3,1) of degree 12";
             return wv.weights == std::vector<Int>{6, 4, 3, 1} && wv.total_degree == 12;
         }},
        {"amplitude-hard-cases", [](std::string& detail) {
             detail = "expected -2 and -2";
             return amplitude(ExponentTuple{2, 3, 5, 30}) == -2 && amplitude(ExponentTuple{2, 3, 4, 12}) == -2;
         }},
        {"gamma-class-2-3-5-30", [](std::string& detail) {
             detail = "expected gamma-minus";
             return gamma_class(ExponentTuple{2, 3, 5, 30}) == GammaClass::GammaMinus;
         }},
        {"canonical-square-2-3-5-30", [](std::string& detail) {
             detail = "expected 2/15";
             return canonical_square(ExponentTuple{2, 3, 5, 30}) == Rat(2, 15);
         }},
        {"canonical-square-2-3-4-12", [](std::string& detail) {
             detail = "expected 2/3";
             return canonical_square(ExponentTuple{2, 3, 4, 12}) == Rat(2, 3);
         }},
        {"delta-intersections-2-3-5-30", [](std::string& detail) {
             auto [d2, dk] = delta_intersections(ExponentTuple{2, 3, 5, 30});
             detail = "expected (1/30, 1/15), got (" + rat_str(d2) + ", " + rat_str(dk) + ")";
             return d2 == Rat(1, 30) && dk == Rat(1, 15);
         }},
        {"delta-intersections-2-3-4-12", [](std::string& detail) {
             auto [d2, dk] = delta_intersections(ExponentTuple{2, 3, 4, 12});
             detail = "expected (1/6, 1/3), got (" + rat_str(d2) + ", " + rat_str(dk) + ")";
             return d2 == Rat(1, 6) && dk == Rat(1, 3);
         }},
        {"singular-points-2-3-5-30", [](std::string& detail) {
             auto points = singular_points(ExponentTuple{2, 3, 5, 30});
             if (!expect(detail, points.size() == 3, "expected 3 points"))
                 return false;
             bool ok = check_point(detail, points[0], 0, 1, 1, 5);
             ok &= check_point(detail, points[1], 0, 2, 1, 3);
             ok &= check_point(detail, points[2], 1, 2, 1, 2);
             return ok;
         }},
        {"singular-points-2-3-4-12", [](std::string& detail) {
             auto points = singular_points(ExponentTuple{2, 3, 4, 12});
             if (!expect(detail, points.size() == 2, "expected 2 edge records"))
                 return false;
             bool ok = check_point(detail, points[0], 0, 1, 1, 2);
             ok &= check_point(detail, points[1], 0, 2, 2, 3);
             return ok;
         }},
        {"discrepancy-values", [](std::string& detail) {
             bool ok = true;
             ok &= expect(detail, discrepancy(2).discrepancy == 0 && discrepancy(2).exceptional_self_int == -2,
                          "order 2: expected 0 and -2");
             ok &= expect(detail, discrepancy(3).discrepancy == Rat(-1, 3) && discrepancy(3).exceptional_self_int == -3,
                          "order 3: expected -1/3 and -3");
             ok &= expect(detail, discrepancy(5).discrepancy == Rat(-3, 5) && discrepancy(5).exceptional_self_int == -5,
                          "order 5: expected -3/5 and -5");
             return ok;
         }},
        {"resolution-graph-2-3-5-30", [](std::string& detail) {
             IntersectionGraph g = resolution_graph(ExponentTuple{2, 3, 5, 30});
             bool ok = true;
             ok &= expect(detail, g.curve("Delta").self_int == -1, "Delta transform should be a (-1)-curve");
             ok &= expect(detail, g.curve("E2").self_int == -2 && g.curve("E3").self_int == -3
                              && g.curve("E5").self_int == -5,
                          "branches should be (-2), (-3), (-5)");
             ok &= expect(detail, g.ambient_k_squared() == -2, "resolved K^2 should be -2");
             return ok;
         }},
        {"resolution-graph-2-3-4-12", [](std::string& detail) {
             IntersectionGraph g = resolution_graph(ExponentTuple{2, 3, 4, 12});
             bool ok = true;
             ok &= expect(detail, g.curve("Delta").self_int == -1, "Delta transform should be a (-1)-curve");
             ok &= expect(detail, g.curve("E2").self_int == -2 && g.curve("E3a").self_int == -3
                              && g.curve("E3b").self_int == -3,
                          "branches should be (-2), (-3), (-3)");
             ok &= expect(detail, g.ambient_k_squared() == 0, "resolved K^2 should be 0");
             return ok;
         }},
        {"contraction-replay-2-3-5-30", [](std::string& detail) {
             IntersectionGraph g = resolution_graph(ExponentTuple{2, 3, 5, 30});
             IntersectionGraph g1 = contract(g, "Delta").first;
             bool ok = expect(detail,
                              g1.curve("E2").self_int == -1 && g1.curve("E3").self_int == -2
                                  && g1.curve("E5").self_int == -4 && g1.multiplicity("E2", "E3") == 1
                                  && g1.multiplicity("E2", "E5") == 1 && g1.multiplicity("E3", "E5") == 1
                                  && g1.ambient_k_squared() == -1,
                              "after step 1: expected (-1),(-2),(-4) pairwise simple, K^2 = -1");
             IntersectionGraph g2 = contract(g1, "E2").first;
             ok &= expect(detail,
                          g2.curve("E3").self_int == -1 && g2.curve("E5").self_int == -3
                              && g2.multiplicity("E3", "E5") == 2 && g2.ambient_k_squared() == 0,
                          "after step 2: expected (-1)/(-3) tangent pair, K^2 = 0");
             IntersectionGraph g3 = contract(g2, "E3").first;
             ok &= expect(detail,
                          g3.curve_count() == 1 && g3.curve("E5").self_int == 1
                              && arithmetic_genus(g3.curve("E5")) == 1 && g3.ambient_k_squared() == 1,
                          "after step 3: expected one curve of self-intersection 1 and genus 1, K^2 = 1");
             auto [final, trace] = contract_all(g);
             ok &= expect(detail, trace.size() == 3 && del_pezzo_degree(final) == 1,
                          "automatic run should reach degree 1 in 3 steps");
             return ok;
         }},
        {"contraction-replay-2-3-4-12", [](std::string& detail) {
             IntersectionGraph g = resolution_graph(ExponentTuple{2, 3, 4, 12});
             IntersectionGraph g1 = contract(g, "Delta").first;
             bool ok = expect(detail,
                              g1.curve("E2").self_int == -1 && g1.curve("E3a").self_int == -2
                                  && g1.curve("E3b").self_int == -2 && g1.ambient_k_squared() == 1,
                              "after step 1: expected (-1),(-2),(-2) through one point, K^2 = 1");
             IntersectionGraph g2 = contract(g1, "E2").first;
             ok &= expect(detail,
                          g2.curve("E3a").self_int == -1 && g2.curve("E3b").self_int == -1
                              && g2.multiplicity("E3a", "E3b") == 2 && g2.ambient_k_squared() == 2,
                          "after step 2: expected two tangent (-1)-curves, K^2 = 2");
             auto [final, trace] = contract_all(g);
             ok &= expect(detail, trace.size() == 2 && del_pezzo_degree(final) == 2,
                          "automatic run should stop at degree 2 after 2 steps");
             return ok;
         }},
        {"classify-unit-exponent", [](std::string& detail) {
             Verdict v = classify(ExponentTuple{1, 5, 7, 9});
             detail = "expected not-rigid via unit-exponent with witness";
             return v.status == Status::NotRigid && v.trace.kind == StepKind::UnitExponent && v.witness.has_value();
         }},
        {"classify-double-two", [](std::string& detail) {
             Verdict v = classify(ExponentTuple{2, 2, 3, 4});
             detail = "expected not-rigid via double-two with witness";
             return v.status == Status::NotRigid && v.trace.kind == StepKind::DoubleTwo && v.witness.has_value();
         }},
        {"classify-hard-cases", [](std::string& detail) {
             Verdict a = classify(ExponentTuple{2, 3, 5, 30});
             Verdict b = classify(ExponentTuple{2, 3, 4, 12});
             detail = "expected rigid via the settled Fano threefold case";
             return a.status == Status::Rigid && a.trace.kind == StepKind::FanoThreefoldCase
                 && b.status == Status::Rigid && b.trace.kind == StepKind::FanoThreefoldCase;
         }},
        {"classify-gamma-minus-all-rigid", [](std::string& detail) {
             detail = "every gamma-minus representative should be rigid";
             for (const ExponentTuple& s : enumerate_gamma_minus(3))
                 if (classify(s).status != Status::Rigid)
                     return false;
             return true;
         }},
        {"witness-slice-steps", [](std::string& detail) {
             Witness w = witness_double_two(ExponentTuple{2, 2, 3, 4});
             if (!is_well_defined(w.derivation, w.ring)) {
                 detail = "witness derivation not well-defined";
                 return false;
             }
             NilpotencyCertificate cert = check_locally_nilpotent(w.derivation, w.ring, 10);
             detail = "expected certification in 4 applications, got "
                 + std::to_string(cert.max_steps);
             return cert.certified && cert.max_steps == 4;
         }},
        {"diagonal-curve-singularity", [](std::string& detail) {
             detail = "singular exactly when the constant vanishes";
             GaussianRational zero(Rat(0));
             GaussianRational two(Rat(2));
             return diagonal_curve_singularity(2, 3, zero) == CurvePointQuery::SingularAtOrigin
                 && diagonal_curve_singularity(2, 3, two) == CurvePointQuery::Smooth
                 && diagonal_curve_singularity(4, 5, zero) == CurvePointQuery::SingularAtOrigin;
         }},
    };
    return table;
}

} // namespace

std::vector<CheckResult> run_paper_checks()
{
    std::vector<CheckResult> results;
    for (const Check& check : checks()) {
        CheckResult r;
        r.name = check.name;
        try {
            r.pass = check.run(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace pbrigid
