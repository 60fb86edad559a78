#include <minhom/classifier.hh>
#include <minhom/reductions.hh>

#include <doctest.h>

using namespace minhom;
using std::vector;

namespace
{
    constexpr std::uint64_t budget = 50'000'000;

    auto oracle(const ReductionInstance & instance) -> Homomorphism
    {
        auto best = solve_bruteforce(instance.h, instance.d, instance.costs, budget);
        REQUIRE(best);
        return *best;
    }

    auto k2() -> Graph { return Graph(2, {{0, 1}}); }
}

TEST_CASE("R' reduction shape")
{
    auto instance = reduce_mis_rprime(k2(), false);
    CHECK(instance.d.size() == 4);
    CHECK(instance.d == Digraph(4, {{0, 1}, {2, 3}, {1, 2}, {3, 0}}));
    CHECK(instance.h == Digraph(3, {{0, 1}, {1, 2}, {2, 1}, {2, 0}, {1, 1}, {2, 2}}));
    CHECK(reduce_mis_rprime(k2(), true).h.has_loop(0));
    CHECK(instance.costs == CostMatrix({{0, 9, 2}, {9, 3, 2}, {0, 9, 2}, {9, 3, 2}}));

    auto lone = reduce_mis_rprime(Graph(1, {}), false);
    CHECK(lone.d == Digraph(2, {{0, 1}}));
    CHECK(lone.vertex_origin[1] == VertexOrigin{"x2", 0, std::nullopt});

    CHECK_THROWS_AS(reduce_mis_rprime(Graph(2, {{0, 0}}), false), PreconditionViolated);
}

TEST_CASE("R' reduction optimum")
{
    for (bool loop : {false, true}) {
        auto instance = reduce_mis_rprime(k2(), loop);
        auto best = oracle(instance);
        CHECK(best.cost == 7);
        auto set = extract_independent_set(instance, best.map);
        CHECK(set.size() == 1);
        CHECK(is_independent(k2(), set));
    }
    auto two = reduce_mis_rprime(Graph(2, {}), false);
    auto best = oracle(two);
    CHECK(best.cost == 6);
    CHECK(extract_independent_set(two, best.map) == VertexSet{0, 1});
}

TEST_CASE("gadget reduction shape")
{
    auto triangle = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto instance = reduce_mis_gadget(triangle);
    CHECK(instance.d.size() == 3 + 8 * 3);
    CHECK(instance.h == Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 2}}));
    CHECK(instance.d.arc_count() == 10 * 3);

    // first gadget belongs to edge {0,1}
    Vertex x1 = 3, x4 = 6, x5 = 7, ue = 9, ve = 10;
    CHECK(instance.d.has_arc(x4, ue));
    CHECK(instance.d.has_arc(ue, 0));
    CHECK(instance.d.has_arc(x5, ve));
    CHECK(instance.d.has_arc(ve, 1));
    CHECK(instance.d.has_arc(x1 + 5, x1));
    CHECK(instance.vertex_origin[ue] == VertexOrigin{"ue", 0, 0});
    CHECK(instance.vertex_origin[ve] == VertexOrigin{"ve", 1, 0});

    CostValue p1 = 4;
    CHECK(instance.costs.at(x1, 0) == 0);
    CHECK(instance.costs.at(x1, 1) == p1);
    CHECK(instance.costs.at(x4, 2) == p1);
    CHECK(instance.costs.at(x4, 1) == 0);
    CHECK(instance.costs.at(0, 0) == 1);
    CHECK(instance.costs.at(0, 1) == 0);
    CHECK(instance.costs.at(0, 2) == p1);
    CHECK(instance.costs.at(ue, 2) == 0);
}

TEST_CASE("gadget reduction optimum")
{
    auto instance = reduce_mis_gadget(k2());
    CHECK(instance.d.size() == 10);
    auto best = oracle(instance);
    CHECK(best.cost == 1);
    auto set = extract_independent_set(instance, best.map);
    CHECK(set.size() == 1);

    auto triangle = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(oracle(reduce_mis_gadget(triangle)).cost == 2);
}

TEST_CASE("gadget identity on small graphs")
{
    for (unsigned n = 1; n <= 4; ++n)
        for (auto & g : all_graphs(n, false)) {
            if (g.edges().size() > 3)
                continue;
            auto instance = reduce_mis_gadget(g);
            auto best = oracle(instance);
            auto alpha = mis_bruteforce(g).alpha;
            CHECK(best.cost == CostValue(n) - alpha);
            auto set = extract_independent_set(instance, best.map);
            CHECK(is_independent(g, set));
            CHECK(CostValue(set.size()) == CostValue(n) - best.cost);
        }
}

TEST_CASE("R' identity on small graphs, with and without the loop")
{
    for (unsigned n = 1; n <= 4; ++n)
        for (auto & g : all_graphs(n, false))
            for (bool loop : {false, true}) {
                auto instance = reduce_mis_rprime(g, loop);
                auto best = oracle(instance);
                CHECK(best.cost == 4 * CostValue(n) - mis_bruteforce(g).alpha);
                auto set = extract_independent_set(instance, best.map);
                CHECK(is_independent(g, set));
                CHECK(CostValue(set.size()) == 4 * CostValue(n) - best.cost);
            }
}

TEST_CASE("independence number")
{
    CHECK(mis_bruteforce(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).alpha == 1);
    CHECK(mis_bruteforce(Graph(5, {})).alpha == 5);
    auto c5 = mis_bruteforce(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    CHECK(c5.alpha == 2);
    CHECK(is_independent(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), c5.witness));
    CHECK(mis_bruteforce(Graph(1, {})).alpha == 1);
    CHECK_THROWS_AS(mis_bruteforce(Graph(25, {})), BudgetExceeded);
}

TEST_CASE("independence number matches subset enumeration")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto n = unsigned(1 + seed % 10);
        auto g = random_graph(seed, n, 0.35);
        unsigned best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            VertexSet set;
            for (Vertex v = 0; v < n; ++v)
                if (mask & (1u << v))
                    set.push_back(v);
            if (is_independent(g, set))
                best = std::max(best, unsigned(set.size()));
        }
        CHECK(mis_bruteforce(g).alpha == best);
    }
}

TEST_CASE("reduction targets are hard")
{
    CHECK(! is_polynomial(classify_wpl(reduce_mis_rprime(k2(), false).h)));
    CHECK(! is_polynomial(classify_wpl(reduce_mis_rprime(k2(), true).h)));
    CHECK(! is_polynomial(classify_wpl(reduce_mis_gadget(k2()).h)));
}

TEST_CASE("reduction names")
{
    CHECK(reduction_from_name("rprime") == ReductionKind::RPrime);
    CHECK(reduction_from_name("gadget") == ReductionKind::Gadget);
    CHECK(! reduction_from_name("other"));
}
