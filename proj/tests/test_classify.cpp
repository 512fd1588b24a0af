#include "pbrigid/classify.hpp"

#include "pbrigid/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pbrigid;

namespace {

// walks the single-child chain to the leaf
const ProofStep& leaf(const ProofStep& step)
{
    return step.children.empty() ? step : leaf(step.children.front());
}

std::size_t depth(const ProofStep& step)
{
    return step.children.empty() ? 1 : 1 + depth(step.children.front());
}

} // namespace

TEST_CASE("unit exponents are never rigid")
{
    Verdict v = classify(ExponentTuple{1, 5, 7, 9});
    CHECK(v.status == Status::NotRigid);
    CHECK(v.trace.kind == StepKind::UnitExponent);
    CHECK(v.trace.index_a == 0);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == "unit-exponent");
}

TEST_CASE("two exponents equal to 2 are never rigid")
{
    Verdict v = classify(ExponentTuple{2, 2, 3, 4});
    CHECK(v.status == Status::NotRigid);
    CHECK(v.trace.kind == StepKind::DoubleTwo);
    CHECK(v.trace.index_a == 0);
    CHECK(v.trace.index_b == 1);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == "double-two");
}

TEST_CASE("surface base case")
{
    Verdict v = classify(ExponentTuple{2, 3, 7});
    CHECK(v.status == Status::Rigid);
    CHECK(v.trace.kind == StepKind::BaseSurfaceKZ);
}

TEST_CASE("settled Fano threefold cases")
{
    Verdict v = classify(ExponentTuple{2, 3, 5, 30});
    CHECK(v.status == Status::Rigid);
    CHECK(v.trace.kind == StepKind::FanoThreefoldCase);
    CHECK(v.trace.citation == "del-pezzo-degree-1-contraction");
    CHECK_FALSE(v.witness.has_value());

    v = classify(ExponentTuple{2, 3, 4, 12});
    CHECK(v.trace.citation == "del-pezzo-degree-2-contraction");
    v = classify(ExponentTuple{3, 3, 3, 3});
    CHECK(v.trace.citation == "cpw-du-val-classification");
    v = classify(ExponentTuple{3, 3, 5, 5});
    CHECK(v.trace.citation == "cheltsov-log-canonical-lemma");
}

TEST_CASE("amplitude >= 0 leaf")
{
    Verdict v = classify(ExponentTuple{2, 3, 7, 42});
    CHECK(v.status == Status::Rigid);
    CHECK(v.trace.kind == StepKind::AmplitudeNonNegative);
    v = classify(ExponentTuple{4, 4, 4, 4});
    CHECK(v.trace.kind == StepKind::AmplitudeNonNegative);
}

TEST_CASE("cotype >= 2 drops a coordinate")
{
    // (2,3,4,5): indices 1, 2 and 3 all fail divisibility (cotype 3), the
    // largest offending index is dropped, and (2,3,4) is a surface case
    ExponentTuple s{2, 3, 4, 5};
    CHECK(cotype(s) == 3);
    Verdict v = classify(s);
    CHECK(v.status == Status::Rigid);
    CHECK(v.trace.kind == StepKind::CotypeAtLeastTwoDrop);
    CHECK(v.trace.index_a == 3);
    CHECK(*v.trace.tuple == ExponentTuple{2, 3, 4});
    REQUIRE(v.trace.children.size() == 1);
    CHECK(v.trace.children[0].kind == StepKind::BaseSurfaceKZ);
}

TEST_CASE("cotype 1 substitutes the offending exponent")
{
    ExponentTuple s{2, 3, 3, 4};
    CHECK(cotype(s) == 1);
    Verdict v = classify(s);
    CHECK(v.status == Status::Rigid);
    CHECK(v.trace.kind == StepKind::CotypeOneLcmSubstitution);
    CHECK(v.trace.index_a == 3);
    CHECK(*v.trace.tuple == ExponentTuple{2, 3, 3, 24});
    REQUIRE(v.trace.children.size() == 1);
    const ProofStep& prop = v.trace.children[0];
    CHECK(prop.kind == StepKind::OrderPropagation);
    CHECK(*prop.tuple == ExponentTuple{2, 3, 3, 6});
    REQUIRE(prop.children.size() == 1);
    CHECK(prop.children[0].kind == StepKind::FanoThreefoldCase);
    CHECK(prop.children[0].citation == "cpw-du-val-classification");
}

TEST_CASE("open Fano cases in higher dimension")
{
    Verdict v = classify(ExponentTuple{3, 3, 3, 3, 3});
    CHECK(v.status == Status::ConjecturallyRigid);
    CHECK(v.trace.kind == StepKind::FanoOpenCase);

    // a cotype-1 five-tuple whose substitution lands on an open Fano case
    // stays conjectural
    ExponentTuple s{3, 3, 3, 3, 4};
    CHECK(cotype(s) == 1);
    v = classify(s);
    CHECK(v.status == Status::ConjecturallyRigid);
    CHECK(leaf(v.trace).kind == StepKind::FanoOpenCase);

    // dropping from dimension 4 lands in the settled dimension 3
    ExponentTuple t{3, 3, 3, 4, 5};
    CHECK(cotype(t) >= 2);
    v = classify(t);
    CHECK(v.status == Status::Rigid);
    CHECK(v.trace.kind == StepKind::CotypeAtLeastTwoDrop);
}

TEST_CASE("propagate_rigidity")
{
    CHECK(propagate_rigidity(ExponentTuple{2, 3, 3, 6}, ExponentTuple{2, 3, 3, 12}, 3));
    CHECK(propagate_rigidity(ExponentTuple{2, 3, 3, 6}, ExponentTuple{2, 3, 3, 6}, 3));
    CHECK_FALSE(propagate_rigidity(ExponentTuple{2, 3, 3, 6}, ExponentTuple{2, 3, 4, 6}, 3));
}

TEST_CASE("cotype_one_substitute")
{
    auto [substituted, comparison] = cotype_one_substitute(ExponentTuple{2, 3, 3, 4}, 3);
    CHECK(substituted == ExponentTuple{2, 3, 3, 24});
    CHECK(comparison == ExponentTuple{2, 3, 3, 6});
    CHECK(leq_order(comparison, substituted, 3));
    CHECK(cotype(comparison) == 0);

    std::tie(substituted, comparison) = cotype_one_substitute(ExponentTuple{2, 3, 3, 5}, 3);
    CHECK(substituted == ExponentTuple{2, 3, 3, 30});
    CHECK(comparison == ExponentTuple{2, 3, 3, 6});

    CHECK_THROWS_AS(cotype_one_substitute(ExponentTuple{2, 3, 5, 30}, 0), std::invalid_argument);
    CHECK_THROWS_AS(cotype_one_substitute(ExponentTuple{2, 3, 3, 4}, 0), std::invalid_argument);
}

TEST_CASE("classification is deterministic")
{
    ExponentTuple s{2, 3, 3, 4};
    nlohmann::json a = to_json(classify(s));
    nlohmann::json b = to_json(classify(s));
    CHECK(a == b);
}

TEST_CASE("status is invariant under permutation")
{
    std::mt19937_64 rng(614);
    std::uniform_int_distribution<int> entry(1, 14);
    std::uniform_int_distribution<std::size_t> len(3, 5);
    for (int iter = 0; iter < 400; ++iter) {
        std::vector<Int> e;
        std::size_t k = len(rng);
        for (std::size_t i = 0; i < k; ++i)
            e.emplace_back(entry(rng));
        ExponentTuple s{std::vector<Int>(e)};
        std::shuffle(e.begin(), e.end(), rng);
        ExponentTuple t{std::move(e)};
        CHECK(classify(s).status == classify(t).status);
    }
}

TEST_CASE("traces are finite and their drops stay in Gamma")
{
    // deep-ish chain: cotype-1 substitutions always terminate in one more step
    for (int a = 2; a <= 9; ++a)
        for (int b = a; b <= 9; ++b)
            for (int c = b; c <= 9; ++c)
                for (int d = c; d <= 9; ++d) {
                    ExponentTuple s{a, b, c, d};
                    Verdict v = classify(s);
                    CHECK(depth(v.trace) <= 4);
                    if (v.status == Status::NotRigid)
                        CHECK(v.witness.has_value());
                    else
                        CHECK_FALSE(v.witness.has_value());
                }
}

TEST_CASE("not-rigid exactly off the Gamma class, entries <= 20")
{
    // permutation classes suffice: both sides only depend on the multiset
    for (int a = 1; a <= 20; ++a)
        for (int b = a; b <= 20; ++b)
            for (int c = b; c <= 20; ++c)
                for (int d = c; d <= 20; ++d) {
                    ExponentTuple t{a, b, c, d};
                    bool not_rigid = classify(t).status == Status::NotRigid;
                    bool outside = gamma_class(t) == GammaClass::NotInGamma;
                    if (not_rigid != outside)
                        CHECK_MESSAGE(not_rigid == outside, "mismatch at ", t.str());
                }
}

TEST_CASE("verdict JSON shape")
{
    Verdict v = classify(ExponentTuple{2, 2, 3, 4});
    nlohmann::json j = to_json(v);
    CHECK(j.at("status") == "not-rigid");
    CHECK(j.at("tuple") == nlohmann::json({"2", "2", "3", "4"}));
    CHECK(j.at("trace").at("step") == "double-two");
    CHECK(j.contains("witness_id"));

    v = classify(ExponentTuple{2, 3, 3, 4});
    j = to_json(v);
    CHECK_FALSE(j.contains("witness_id"));
    CHECK(j.at("trace").at("children").size() == 1);

    CHECK(tuple_from_json(to_json(v.tuple)) == v.tuple);
    CHECK(tuple_from_json(nlohmann::json::parse("[2, 3, \"700000000000000000000007\"]"))
          == ExponentTuple(std::vector<Int>{2, 3, parse_int("700000000000000000000007")}));
}
