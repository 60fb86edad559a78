#include <minhom/core.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace minhom;
using std::vector;

TEST_CASE("semicomplete recognition")
{
    CHECK(is_semicomplete_wpl(Digraph(1, {})));
    CHECK(is_semicomplete_wpl(shapes::w()));
    CHECK(! is_semicomplete_wpl(Digraph(2, {})));
    CHECK(shapes::w() == Digraph(2, {{0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("digraph queries agree with the arc set")
{
    Digraph d(4, {{0, 1}, {1, 0}, {2, 2}, {3, 1}, {0, 1}});
    CHECK(d.arc_count() == 4);
    CHECK(d.has_arc(3, 1));
    CHECK(! d.has_arc(1, 3));
    CHECK(d.has_loop(2));
    CHECK(d.symmetric(0, 1));
    CHECK(d.strictly_dominates(3, 1));
    CHECK(d.out_neighbors(0) == VertexSet{1});
    CHECK(d.in_neighbors(1) == VertexSet{0, 3});
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), PreconditionViolated);
}

TEST_CASE("large digraphs use the hashed representation consistently")
{
    auto d = random_digraph(5, 5000, 0.0005, 0.01);
    std::size_t count = 0;
    for (Vertex u = 0; u < d.size(); ++u)
        for (auto v : d.out_neighbors(u)) {
            CHECK(d.has_arc(u, v));
            ++count;
        }
    CHECK(count == d.arc_count());
    CHECK(d.has_arc(0, 0) == std::binary_search(d.arcs().begin(), d.arcs().end(), Arc{0, 0}));
}

TEST_CASE("symmetric subdigraph")
{
    auto c2 = shapes::directed_cycle(2);
    CHECK(symmetric_subdigraph(c2) == c2);
    CHECK(symmetric_subdigraph(shapes::transitive_tournament(2)).arc_count() == 0);
    // 0 -> 2 and 2 -> 0 are both arcs of R, so that pair survives
    CHECK(symmetric_subdigraph(shapes::r()) == Digraph(3, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {2, 0}}));
}

TEST_CASE("underlying graph")
{
    CHECK(underlying_graph(shapes::directed_cycle(2)) == Graph(2, {{0, 1}}));
    CHECK(underlying_graph(shapes::transitive_tournament(3)) == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(underlying_graph(shapes::r()) == Graph(3, {{0, 1}, {0, 2}, {1, 2}, {0, 0}, {1, 1}, {2, 2}}));
}

TEST_CASE("loop split")
{
    auto k3 = loop_split(shapes::complete_reflexive(3));
    CHECK(k3.loop_vertices == VertexSet{0, 1, 2});
    CHECK(k3.free_vertices.empty());
    CHECK(loop_split(shapes::directed_cycle(3)).loop_vertices.empty());
    auto w = loop_split(shapes::w());
    CHECK(w.loop_vertices == VertexSet{1});
    CHECK(w.free_vertices == VertexSet{0});
}

TEST_CASE("induced subdigraphs")
{
    auto r = shapes::r();
    Vertex all[] = {0, 1, 2}, zero[] = {0};
    CHECK(induced(r, all).digraph == r);
    CHECK(induced(r, zero).digraph == Digraph(1, {{0, 0}}));

    auto k3e = shapes::remove_arc(shapes::complete_reflexive(3), {1, 0});
    for (auto [a, b] : vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}}) {
        Vertex pair[] = {a, b};
        auto part = induced(k3e, pair);
        CHECK(part.digraph.arc_count() >= 3);
        CHECK(part.origin == VertexSet{a, b});
    }
    Vertex bad[] = {3};
    CHECK_THROWS_AS(induced(r, bad), PreconditionViolated);
}

TEST_CASE("converse")
{
    CHECK(converse(shapes::transitive_tournament(2)) == Digraph(2, {{1, 0}}));
    CHECK(converse(shapes::directed_cycle(3)) == Digraph(3, {{0, 2}, {2, 1}, {1, 0}}));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto h = random_semicomplete_wpl(seed, 6, 0.3, 0.5);
        CHECK(converse(converse(h)) == h);
        CHECK(underlying_graph(h) == underlying_graph(converse(h)));
    }
}

TEST_CASE("composition")
{
    auto single = Digraph(1, {});
    vector<Digraph> two_singles{single, single};
    CHECK(compose(shapes::transitive_tournament(2), two_singles) == shapes::transitive_tournament(2));

    vector<Digraph> one_block{shapes::complete_reflexive(3)};
    CHECK(compose(shapes::transitive_tournament(1), one_block) == shapes::complete_reflexive(3));

    vector<Digraph> mixed{single, shapes::complete_reflexive(2)};
    CHECK(compose(shapes::transitive_tournament(2), mixed) == Digraph(3, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}));

    CHECK_THROWS_AS(compose(shapes::directed_cycle(3), vector<Digraph>(3, single)), PreconditionViolated);
    CHECK_THROWS_AS(compose(shapes::transitive_tournament(2), vector<Digraph>(1, single)), PreconditionViolated);
}

TEST_CASE("composition keeps exactly the block loops")
{
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto k = unsigned(1 + rng.below(4));
        vector<Digraph> blocks;
        VertexSet expected_loops;
        Vertex offset = 0;
        for (unsigned b = 0; b < k; ++b) {
            auto size = unsigned(1 + rng.below(3));
            auto block = random_semicomplete_wpl(rng.next(), size, 0.5, 0.5);
            for (Vertex v = 0; v < size; ++v)
                if (block.has_loop(v))
                    expected_loops.push_back(offset + v);
            offset += size;
            blocks.push_back(block);
        }
        CHECK(loop_split(compose(shapes::transitive_tournament(k), blocks)).loop_vertices == expected_loops);
    }
}

TEST_CASE("weak components")
{
    CHECK(weak_components(Digraph(2, {})).size() == 2);
    CHECK(weak_components(shapes::directed_cycle(3)).size() == 1);
    auto comps = weak_components(Digraph(3, {{0, 1}, {1, 0}, {0, 0}, {1, 1}, {2, 2}}));
    CHECK(comps == vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("random semicomplete generator")
{
    CHECK(random_semicomplete_wpl(7, 5, 0.4, 0.6) == random_semicomplete_wpl(7, 5, 0.4, 0.6));
    CHECK(random_semicomplete_wpl(3, 3, 1.0, 1.0) == shapes::complete_reflexive(3));

    auto tournament = random_semicomplete_wpl(9, 7, 0.0, 0.0);
    for (Vertex u = 0; u < 7; ++u)
        for (Vertex v = 0; v < 7; ++v)
            CHECK(tournament.has_arc(u, v) == (u != v && ! tournament.has_arc(v, u)));

    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng params(seed);
        auto n = unsigned(1 + params.below(8));
        REQUIRE(is_semicomplete_wpl(random_semicomplete_wpl(seed, n, params.uniform(), params.uniform())));
    }
    CHECK_THROWS_AS(random_semicomplete_wpl(1, 0, 0.5, 0.5), PreconditionViolated);
    CHECK_THROWS_AS(random_semicomplete_wpl(1, 3, 1.5, 0.5), PreconditionViolated);
}

TEST_CASE("symmetric subdigraph is idempotent and keeps loops")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto h = random_semicomplete_wpl(seed, 6, 0.4, 0.5);
        auto s = symmetric_subdigraph(h);
        CHECK(symmetric_subdigraph(s) == s);
        for (Vertex v = 0; v < h.size(); ++v)
            CHECK(s.has_loop(v) == h.has_loop(v));
    }
}

TEST_CASE("orderings")
{
    Ordering o(VertexSet{2, 0, 1});
    CHECK(o[0] == 2);
    CHECK(o.position(2) == 0);
    CHECK(o.position(1) == 2);
    CHECK(o.reversed().vertices() == VertexSet{1, 0, 2});
    CHECK_THROWS_AS(Ordering(VertexSet{0, 0}), PreconditionViolated);
    CHECK_THROWS_AS(Ordering(VertexSet{1, 2}), PreconditionViolated);
}

TEST_CASE("exhaustive enumerators")
{
    CHECK(all_semicomplete_wpl(1).size() == 2);
    CHECK(all_semicomplete_wpl(2).size() == 12);
    CHECK(all_semicomplete_wpl(3).size() == 216);
    CHECK(all_graphs(4, false).size() == 64);
    for (auto & g : all_graphs(3, true))
        CHECK(g.is_reflexive());
}

TEST_CASE("rng draws stay in range")
{
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        auto u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.below(7) < 7);
    }
}
