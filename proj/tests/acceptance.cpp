// Acceptance suite: every published value the library must reproduce, plus
// the exhaustive classifier sweep and the randomized law suites. One summary
// line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbrigid/classify.hpp"
#include "pbrigid/dualgraph.hpp"
#include "pbrigid/geometry.hpp"
#include "pbrigid/json_io.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

using namespace pbrigid;

namespace {

struct Summary {
    int number;
    const char* label;
    bool all = true;

    bool check(bool cond)
    {
        all &= cond;
        return cond;
    }
    ~Summary() { std::printf("[%s] criterion %02d: %s\n", all ? "PASS" : "FAIL", number, label); }
};

ExponentTuple hard1()
{
    return ExponentTuple{2, 3, 5, 30};
}
ExponentTuple hard2()
{
    return ExponentTuple{2, 3, 4, 12};
}

bool point_is(const SingularPoint& p, std::size_t e0, std::size_t e1, long long count, long long order)
{
    return p.edge[0] == e0 && p.edge[1] == e1 && p.count == count && p.order == order
        && p.type_weights[0] == 1 && p.type_weights[1] == 1 && p.mult_delta == 1;
}

IntersectionGraph random_graph(std::mt19937_64& rng)
{
    static const int self_choices[] = {-5, -3, -2, -1, -1, -1, 0, 1, 2};
    static const int genus_choices[] = {0, 0, 0, 1, 2};
    static const int mult_choices[] = {0, 0, 1, 1, 2};
    std::uniform_int_distribution<int> n_curves(2, 6);
    std::uniform_int_distribution<std::size_t> self(0, 8);
    std::uniform_int_distribution<std::size_t> genus(0, 4);
    std::uniform_int_distribution<std::size_t> mult(0, 4);
    IntersectionGraph g;
    int n = n_curves(rng);
    for (int i = 0; i < n; ++i) {
        std::int64_t s = self_choices[self(rng)];
        std::int64_t pa = genus_choices[genus(rng)];
        g.add_curve({"C" + std::to_string(i), s, -2 - s + 2 * pa});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int m = mult_choices[mult(rng)];
            if (m > 0)
                g.add_edge("C" + std::to_string(i), "C" + std::to_string(j), m);
        }
    return g;
}

} // namespace

TEST_CASE("criterion 1: complete Gamma_3^- enumeration")
{
    Summary s{1, "Gamma_3^- is exactly the eight known tuples"};
    const std::vector<ExponentTuple> expected = {
        {2, 3, 3, 6}, {2, 3, 4, 12}, {2, 3, 5, 30}, {2, 3, 6, 6},
        {2, 4, 4, 4}, {3, 3, 3, 3},  {3, 3, 4, 4},  {3, 3, 5, 5},
    };
    std::vector<ExponentTuple> got = enumerate_gamma_minus(3);
    CHECK(s.check(got == expected));
}

TEST_CASE("criterion 2: invariants of the (2,3,5,30) surface")
{
    Summary s{2, "(2,3,5,30): weights, amplitude, K^2, Delta data, singular points"};
    ExponentTuple t = hard1();
    WeightVector wv = weights(t);
    CHECK(s.check(wv.weights == std::vector<Int>{15, 10, 6, 1}));
    CHECK(s.check(wv.total_degree == 30));
    CHECK(s.check(amplitude(t) == -2));
    CHECK(s.check(canonical_square(t) == Rat(2, 15)));
    auto [d2, dk] = delta_intersections(t);
    CHECK(s.check(d2 == Rat(1, 30)));
    CHECK(s.check(dk == Rat(1, 15)));
    auto points = singular_points(t);
    REQUIRE(s.check(points.size() == 3));
    CHECK(s.check(point_is(points[0], 0, 1, 1, 5)));
    CHECK(s.check(point_is(points[1], 0, 2, 1, 3)));
    CHECK(s.check(point_is(points[2], 1, 2, 1, 2)));
}

TEST_CASE("criterion 3: invariants of the (2,3,4,12) surface")
{
    Summary s{3, "(2,3,4,12): weights, amplitude, K^2, Delta data, singular points"};
    ExponentTuple t = hard2();
    WeightVector wv = weights(t);
    CHECK(s.check(wv.weights == std::vector<Int>{6, 4, 3, 1}));
    CHECK(s.check(wv.total_degree == 12));
    CHECK(s.check(amplitude(t) == -2));
    CHECK(s.check(canonical_square(t) == Rat(2, 3)));
    auto [d2, dk] = delta_intersections(t);
    CHECK(s.check(dk == Rat(1, 3)));
    auto points = singular_points(t);
    REQUIRE(s.check(points.size() == 2));
    CHECK(s.check(point_is(points[0], 0, 1, 1, 2)));
    CHECK(s.check(point_is(points[1], 0, 2, 2, 3)));
}

TEST_CASE("criterion 4: resolution graphs")
{
    Summary s{4, "Delta transform is a (-1)-curve; resolved K^2 is -2 and 0"};
    IntersectionGraph a = resolution_graph(hard1());
    CHECK(s.check(a.curve("Delta").self_int == -1));
    CHECK(s.check(a.curve("E2").self_int == -2));
    CHECK(s.check(a.curve("E3").self_int == -3));
    CHECK(s.check(a.curve("E5").self_int == -5));
    CHECK(s.check(a.ambient_k_squared() == -2));

    IntersectionGraph b = resolution_graph(hard2());
    CHECK(s.check(b.curve("Delta").self_int == -1));
    CHECK(s.check(b.curve("E2").self_int == -2));
    CHECK(s.check(b.curve("E3a").self_int == -3));
    CHECK(s.check(b.curve("E3b").self_int == -3));
    CHECK(s.check(b.ambient_k_squared() == 0));
}

TEST_CASE("criterion 5: contraction replay for (2,3,5,30)")
{
    Summary s{5, "(2,3,5,30) contracts through (-1,-2,-4) to a degree-1 del Pezzo"};
    IntersectionGraph g = resolution_graph(hard1());

    auto [g1, r1] = contract(g, "Delta");
    CHECK(s.check(g1.curve("E2").self_int == -1));
    CHECK(s.check(g1.curve("E3").self_int == -2));
    CHECK(s.check(g1.curve("E5").self_int == -4));
    CHECK(s.check(g1.multiplicity("E2", "E3") == 1));
    CHECK(s.check(g1.multiplicity("E2", "E5") == 1));
    CHECK(s.check(g1.multiplicity("E3", "E5") == 1));
    CHECK(s.check(g1.ambient_k_squared() == -1));

    auto [g2, r2] = contract(g1, "E2");
    CHECK(s.check(g2.curve("E3").self_int == -1));
    CHECK(s.check(g2.curve("E5").self_int == -3));
    CHECK(s.check(g2.multiplicity("E3", "E5") == 2));
    CHECK(s.check(g2.ambient_k_squared() == 0));

    auto [g3, r3] = contract(g2, "E3");
    CHECK(s.check(g3.curve_count() == 1));
    CHECK(s.check(g3.curve("E5").self_int == 1));
    CHECK(s.check(arithmetic_genus(g3.curve("E5")) == 1));
    CHECK(s.check(g3.ambient_k_squared() == 1));

    auto [final, trace] = contract_all(g);
    CHECK(s.check(trace.size() == 3));
    CHECK(s.check(del_pezzo_degree(final) == 1));
}

TEST_CASE("criterion 6: contraction replay for (2,3,4,12)")
{
    Summary s{6, "(2,3,4,12) stops at two tangent (-1)-curves on a degree-2 del Pezzo"};
    IntersectionGraph g = resolution_graph(hard2());
    auto [final, trace] = contract_all(g);
    CHECK(s.check(trace.size() == 2));
    CHECK(s.check(trace[0].curve == "Delta"));
    CHECK(s.check(trace[1].curve == "E2"));
    CHECK(s.check(final.curve_count() == 2));
    CHECK(s.check(final.curve("E3a").self_int == -1));
    CHECK(s.check(final.curve("E3b").self_int == -1));
    CHECK(s.check(final.multiplicity("E3a", "E3b") == 2));
    CHECK(s.check(del_pezzo_degree(final) == 2));
}

TEST_CASE("criterion 7: exhaustive sweep matches the rigidity criterion")
{
    Summary s{7, "entries <= 12: not-rigid iff a unit exponent or two 2s; all Gamma_3^- rigid"};
    auto start = std::chrono::steady_clock::now();

    for (const ExponentTuple& t : enumerate_gamma_minus(3))
        CHECK(s.check(classify(t).status == Status::Rigid));

    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b)
            for (int c = 1; c <= 12; ++c)
                for (int d = 1; d <= 12; ++d) {
                    ExponentTuple t{a, b, c, d};
                    int twos = (a == 2) + (b == 2) + (c == 2) + (d == 2);
                    bool expect_not_rigid = (a == 1 || b == 1 || c == 1 || d == 1) || twos >= 2;
                    Status got = classify(t).status;
                    bool ok = expect_not_rigid ? (got == Status::NotRigid)
                                               : (got == Status::Rigid);
                    if (!s.check(ok))
                        CHECK_MESSAGE(ok, "mismatch at ", t.str());
                }

    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(s.check(seconds < 10.0));
}

TEST_CASE("criterion 8: every not-rigid verdict carries a certified witness")
{
    Summary s{8, "sweep witnesses pass well-definedness and nilpotency at bound 2*max+2"};
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b)
            for (int c = 1; c <= 12; ++c)
                for (int d = 1; d <= 12; ++d) {
                    ExponentTuple t{a, b, c, d};
                    Verdict v = classify(t);
                    if (v.status != Status::NotRigid) {
                        if (!s.check(!v.witness.has_value()))
                            CHECK_MESSAGE(false, "unexpected witness at ", t.str());
                        continue;
                    }
                    if (!s.check(v.witness.has_value())) {
                        CHECK_MESSAGE(false, "missing witness at ", t.str());
                        continue;
                    }
                    const Witness& w = *v.witness;
                    bool defined = is_well_defined(w.derivation, w.ring);
                    unsigned bound = static_cast<unsigned>(2 * std::max({a, b, c, d}) + 2);
                    bool certified = defined && check_locally_nilpotent(w.derivation, w.ring, bound).certified;
                    if (!s.check(defined && certified))
                        CHECK_MESSAGE(false, "witness failed at ", t.str());
                }
}

TEST_CASE("criterion 9: discrepancies")
{
    Summary s{9, "discrepancy(k) = -1 + 2/k for k in {2,3,5}"};
    CHECK(s.check(discrepancy(2).discrepancy == Rat(0)));
    CHECK(s.check(discrepancy(3).discrepancy == Rat(-1, 3)));
    CHECK(s.check(discrepancy(5).discrepancy == Rat(-3, 5)));
    CHECK(s.check(discrepancy(2).exceptional_self_int == -2));
    CHECK(s.check(discrepancy(3).exceptional_self_int == -3));
    CHECK(s.check(discrepancy(5).exceptional_self_int == -5));
}

TEST_CASE("criterion 10: diagonal curve singularity")
{
    Summary s{10, "x^a + y^b + c singular iff c = 0; the lambda^4 = -1 member is singular"};
    // lambda^4 = -1 gives constant term lambda^4 + 1 = 0
    CHECK(s.check(diagonal_curve_singularity(2, 3, GaussianRational(Rat(0)))
                  == CurvePointQuery::SingularAtOrigin));
    // lambda = 1 + i: lambda^4 + 1 = -3
    GaussianRational lambda{Rat(1), Rat(1)};
    GaussianRational c = lambda * lambda * lambda * lambda + GaussianRational(Rat(1));
    CHECK(s.check(c == GaussianRational(Rat(-3))));
    CHECK(s.check(diagonal_curve_singularity(2, 3, c) == CurvePointQuery::Smooth));
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> pick(-6, 6);
    for (int iter = 0; iter < 200; ++iter) {
        GaussianRational value{Rat(pick(rng)), Rat(pick(rng))};
        auto got = diagonal_curve_singularity(2 + iter % 3, 3 + iter % 4, value);
        CHECK(s.check((got == CurvePointQuery::SingularAtOrigin) == value.is_zero()));
    }
}

TEST_CASE("criterion 11: randomized law suites")
{
    Summary s{11, "order laws, cotype invariance, contraction laws, reduce and Leibniz"};
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260811);

    // <=^i partial-order laws
    {
        std::uniform_int_distribution<int> entry(1, 12);
        std::uniform_int_distribution<int> factor(1, 4);
        std::uniform_int_distribution<std::size_t> pick(0, 3);
        for (int iter = 0; iter < 1200; ++iter) {
            std::vector<Int> base;
            for (int i = 0; i < 4; ++i)
                base.emplace_back(entry(rng));
            std::size_t i = pick(rng);
            std::vector<Int> mid = base;
            mid[i] *= factor(rng);
            std::vector<Int> top = mid;
            top[i] *= factor(rng);
            ExponentTuple x(std::move(base)), y(std::move(mid)), z(std::move(top));
            CHECK(s.check(leq_order(x, x, i)));
            if (leq_order(x, y, i) && leq_order(y, x, i))
                CHECK(s.check(x == y));
            if (leq_order(x, y, i) && leq_order(y, z, i))
                CHECK(s.check(leq_order(x, z, i)));
        }
    }

    // cotype is invariant under normalization
    {
        std::uniform_int_distribution<int> entry(1, 40);
        std::uniform_int_distribution<std::size_t> len(3, 6);
        for (int iter = 0; iter < 1200; ++iter) {
            std::vector<Int> e;
            std::size_t k = len(rng);
            for (std::size_t i = 0; i < k; ++i)
                e.emplace_back(entry(rng));
            ExponentTuple t(std::move(e));
            CHECK(s.check(cotype(normalize(t)) == cotype(t)));
        }
    }

    // adjunction parity and K^2 increment under contraction
    {
        for (int iter = 0; iter < 1200; ++iter) {
            IntersectionGraph g = random_graph(rng);
            auto [final, trace] = contract_all(g);
            CHECK(s.check(final.ambient_k_squared()
                          == g.ambient_k_squared() + static_cast<std::int64_t>(trace.size())));
            for (const std::string& name : final.curve_names()) {
                const Curve& c = final.curve(name);
                CHECK(s.check((c.self_int + c.k_degree) % 2 == 0));
            }
        }
    }

    // disjoint contractions commute
    {
        int exercised = 0;
        while (exercised < 1000) {
            IntersectionGraph g = random_graph(rng);
            std::vector<std::string> minus_ones;
            for (const std::string& name : g.curve_names()) {
                const Curve& c = g.curve(name);
                if (c.self_int == -1 && arithmetic_genus(c) == 0)
                    minus_ones.push_back(name);
            }
            for (std::size_t i = 0; i < minus_ones.size(); ++i)
                for (std::size_t j = i + 1; j < minus_ones.size(); ++j) {
                    if (g.multiplicity(minus_ones[i], minus_ones[j]) != 0)
                        continue;
                    IntersectionGraph ab = contract(contract(g, minus_ones[i]).first, minus_ones[j]).first;
                    IntersectionGraph ba = contract(contract(g, minus_ones[j]).first, minus_ones[i]).first;
                    CHECK(s.check(ab == ba));
                    ++exercised;
                }
        }
    }

    // reduce vanishes on the ideal; Leibniz rule
    {
        PresentedRing ring = pham_brieskorn_ring(ExponentTuple{2, 2, 3});
        std::uniform_int_distribution<int> exp(0, 4);
        std::uniform_int_distribution<long long> coeff(-4, 4);
        std::uniform_int_distribution<int> terms(0, 3);
        auto rand_poly = [&]() {
            Polynomial p(3);
            int k = terms(rng);
            for (int t = 0; t < k; ++t) {
                Monomial m(3);
                for (std::size_t v = 0; v < 3; ++v)
                    m[v] = static_cast<std::uint32_t>(exp(rng));
                p += Polynomial::monomial(std::move(m), {Rat(coeff(rng)), Rat(coeff(rng))});
            }
            return p;
        };
        Derivation d;
        d.images = {Polynomial::variable(3, 1), Polynomial::variable(3, 2) * Polynomial::variable(3, 2),
                    Polynomial::constant(3, GaussianRational(1))};
        for (int iter = 0; iter < 1200; ++iter) {
            Polynomial p = rand_poly();
            Polynomial q = rand_poly();
            CHECK(s.check(reduce(p * ring.relation + q, ring) == reduce(q, ring)));
            CHECK(s.check(apply(d, p * q) == apply(d, p) * q + p * apply(d, q)));
        }
    }

    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(s.check(seconds < 30.0));
}
