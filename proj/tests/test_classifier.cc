#include <minhom/classifier.hh>
#include <minhom/ordering.hh>

#include <doctest.h>

using namespace minhom;
using std::vector;

namespace
{
    auto kind_of(const Digraph & h) -> VerdictKind
    {
        return verdict_kind(classify_wpl(h));
    }

    Vertex all3[] = {0, 1, 2};
}

TEST_CASE("reflexive classification")
{
    CHECK(std::holds_alternative<PolynomialMinMax>(classify_reflexive(shapes::complete_reflexive(3))));

    auto r = classify_reflexive(shapes::r());
    REQUIRE(std::holds_alternative<NPHard>(r));
    auto r_hit = std::get_if<PatternHit>(&std::get<NPHard>(r).witness);
    REQUIRE(r_hit);
    CHECK(r_hit->kind == PatternKind::R);

    auto c3 = classify_reflexive(shapes::add_loops(shapes::directed_cycle(3), all3));
    REQUIRE(std::holds_alternative<NPHard>(c3));
    auto c3_hit = std::get_if<PatternHit>(&std::get<NPHard>(c3).witness);
    REQUIRE(c3_hit);
    CHECK(c3_hit->kind == PatternKind::ReflexiveC3);

    CHECK_THROWS_AS(classify_reflexive(shapes::w()), NotReflexiveSemicomplete);
}

TEST_CASE("reflexive claw in the symmetric part is hard")
{
    // centre 0 joined both ways to 1, 2, 3; leaves joined one way in a chain
    Digraph h(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 3}, {1, 3}});
    auto verdict = classify_reflexive(h);
    REQUIRE(std::holds_alternative<NPHard>(verdict));
    auto pig = std::get_if<LoopPartPigWitness>(&std::get<NPHard>(verdict).witness);
    REQUIRE(pig);
    CHECK(pig->witness == PigWitness{PigKind::Claw, {0, 1, 2, 3}});
    CHECK(verify_classification(h, verdict));
}

TEST_CASE("dichotomy verdicts for the named digraphs")
{
    auto c3 = classify_wpl(shapes::directed_cycle(3));
    REQUIRE(std::holds_alternative<PolynomialCycle>(c3));
    CHECK(std::get<PolynomialCycle>(c3).k == 3);
    CHECK(std::get<PolynomialCycle>(c3).cycle == VertexSet{0, 1, 2});
    CHECK(kind_of(shapes::directed_cycle(2)) == VerdictKind::PolynomialCycle);

    auto w = classify_wpl(shapes::w());
    REQUIRE(std::holds_alternative<NPHard>(w));
    CHECK(std::get<PatternHit>(std::get<NPHard>(w).witness).kind == PatternKind::W);

    CHECK(kind_of(shapes::remove_arc(shapes::complete_reflexive(3), {0, 1})) == VerdictKind::PolynomialMinMax);
    CHECK(kind_of(shapes::complete_reflexive(3)) == VerdictKind::PolynomialMinMax);
    CHECK(kind_of(shapes::r()) == VerdictKind::NPHard);
    CHECK(kind_of(shapes::r_prime()) == VerdictKind::NPHard);
    CHECK(kind_of(shapes::add_loops(shapes::directed_cycle(3), all3)) == VerdictKind::NPHard);
    CHECK(kind_of(Digraph(1, {})) == VerdictKind::PolynomialMinMax);
    CHECK(kind_of(Digraph(1, {{0, 0}})) == VerdictKind::PolynomialMinMax);
    CHECK_THROWS_AS(classify_wpl(Digraph(2, {})), NotSemicompleteWpl);
}

TEST_CASE("loopless cycle witnesses")
{
    // C_3 among loopless vertices plus a looped vertex dominating them
    Digraph coexist(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}, {3, 0}, {3, 1}, {3, 2}});
    auto verdict = classify_wpl(coexist);
    REQUIRE(std::holds_alternative<NPHard>(verdict));
    auto c = std::get_if<LWithCycleCoexistence>(&std::get<NPHard>(verdict).witness);
    REQUIRE(c);
    CHECK(c->loop_vertex == 3);
    CHECK(verify_classification(coexist, verdict));

    // a 4-vertex tournament with a cycle is not C_k
    Digraph t4(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    auto hard = classify_wpl(t4);
    REQUIRE(std::holds_alternative<NPHard>(hard));
    auto nc = std::get_if<LooplessCycleNotCk>(&std::get<NPHard>(hard).witness);
    REQUIRE(nc);
    CHECK(nc->cycle == VertexSet{0, 1, 2});
    CHECK(nc->extra == VertexSet{3});
    CHECK(verify_classification(t4, hard));

    Digraph c2_plus(3, {{0, 1}, {1, 0}, {0, 2}, {2, 1}});
    auto two = classify_wpl(c2_plus);
    REQUIRE(std::holds_alternative<NPHard>(two));
    CHECK(std::get<LooplessCycleNotCk>(std::get<NPHard>(two).witness).cycle == VertexSet{0, 1});
}

TEST_CASE("composition verdicts")
{
    CHECK(! classify_via_composition(shapes::add_loops(shapes::directed_cycle(3), all3)));
    CHECK(classify_via_composition(shapes::transitive_tournament(4)));
    CHECK(classify_via_composition(shapes::remove_arc(shapes::complete_reflexive(3), {0, 1})));
    CHECK(classify_via_composition(shapes::directed_cycle(3)));
}

TEST_CASE("the two characterisations agree on all digraphs up to four vertices")
{
    unsigned polynomial = 0, total = 0;
    for (unsigned n = 1; n <= 4; ++n)
        for (auto & h : all_semicomplete_wpl(n)) {
            auto verdict = classify_wpl(h);
            REQUIRE(is_polynomial(verdict) == classify_via_composition(h));
            REQUIRE(verify_classification(h, verdict));
            polynomial += is_polynomial(verdict);
            ++total;
        }
    CHECK(total == 2 + 12 + 216 + 729 * 16);
    CHECK(polynomial > 0);
}

TEST_CASE("the two characterisations agree on sampled larger digraphs")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        auto h = random_semicomplete_wpl(seed, 5 + seed % 2, 0.1 + 0.1 * double(seed % 5), 0.6 + 0.1 * double(seed % 5));
        auto verdict = classify_wpl(h);
        CHECK(is_polynomial(verdict) == classify_via_composition(h));
        CHECK(verify_classification(h, verdict));
    }
}

TEST_CASE("verdicts are invariant under relabelling and converse")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto n = unsigned(3 + seed % 4);
        auto h = random_semicomplete_wpl(seed, n, 0.3, 0.7);
        VertexSet perm(n);
        for (Vertex v = 0; v < n; ++v)
            perm[v] = v;
        Rng rng(seed);
        for (unsigned i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        auto kind = kind_of(h);
        CHECK(kind_of(relabel(h, perm)) == kind);
        CHECK(kind_of(converse(h)) == kind);
    }
}

TEST_CASE("tampered certificates are rejected")
{
    auto w = classify_wpl(shapes::w());
    auto tampered = std::get<NPHard>(w);
    auto & hit = std::get<PatternHit>(tampered.witness);
    std::swap(hit.vertices[0], hit.vertices[1]);
    CHECK(! verify_classification(shapes::w(), tampered));

    auto k3 = shapes::complete_reflexive(3);
    CHECK(! verify_classification(shapes::r(), classify_wpl(k3)));
    CHECK(! verify_classification(shapes::transitive_tournament(3), PolynomialCycle{3, {0, 1, 2}}));
}

TEST_CASE("explanations mention the verdict")
{
    CHECK(explain(classify_wpl(shapes::directed_cycle(3))).find("3-cycle") != std::string::npos);
    CHECK(explain(classify_wpl(shapes::w())).find("W") != std::string::npos);
}
