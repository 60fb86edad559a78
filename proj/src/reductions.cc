#include <minhom/reductions.hh>

#include <bit>
#include <string>

using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        auto check_simple(const Graph & g, const char * who) -> void
        {
            if (g.has_any_loop())
                throw PreconditionViolated(string(who) + ": the input graph must be loop-free");
        }

        auto checked_multiply(CostValue a, CostValue b) -> CostValue
        {
            CostValue result;
            if (__builtin_mul_overflow(a, b, &result))
                throw PreconditionViolated("reduction cost overflows");
            return result;
        }
    }

    auto reduction_name(ReductionKind kind) -> const char *
    {
        switch (kind) {
            case ReductionKind::RPrime: return "rprime";
            case ReductionKind::Gadget: return "gadget";
        }
        return "?";
    }

    auto reduction_from_name(const string & name) -> optional<ReductionKind>
    {
        for (auto kind : {ReductionKind::RPrime, ReductionKind::Gadget})
            if (name == reduction_name(kind))
                return kind;
        return nullopt;
    }

    auto reduce_mis_rprime(const Graph & g, bool loop_at_0) -> ReductionInstance
    {
        check_simple(g, "reduce_mis_rprime");
        auto p = g.size();
        if (p == 0)
            throw PreconditionViolated("reduce_mis_rprime: the input graph is empty");

        vector<Arc> h_arcs{{0, 1}, {1, 2}, {2, 1}, {2, 0}, {1, 1}, {2, 2}};
        if (loop_at_0)
            h_arcs.push_back({0, 0});

        vector<Arc> d_arcs;
        for (Vertex x = 0; x < p; ++x)
            d_arcs.push_back({2 * x, 2 * x + 1});
        for (auto [x, y] : g.edges()) {
            d_arcs.push_back({2 * x + 1, 2 * y});
            d_arcs.push_back({2 * y + 1, 2 * x});
        }

        auto big = checked_multiply(4, p) + 1;
        CostMatrix costs(2 * p, 3);
        vector<VertexOrigin> origin;
        for (Vertex x = 0; x < p; ++x) {
            costs.set(2 * x, 0, 0);
            costs.set(2 * x, 1, big);
            costs.set(2 * x, 2, 2);
            costs.set(2 * x + 1, 0, big);
            costs.set(2 * x + 1, 1, 3);
            costs.set(2 * x + 1, 2, 2);
            origin.push_back({"x1", x, nullopt});
            origin.push_back({"x2", x, nullopt});
        }

        return ReductionInstance{ReductionKind::RPrime, Digraph(3, h_arcs), Digraph(2 * p, d_arcs), std::move(costs), p, std::move(origin)};
    }

    auto reduce_mis_gadget(const Graph & g) -> ReductionInstance
    {
        check_simple(g, "reduce_mis_gadget");
        auto p = g.size();
        auto & edges = g.edges();
        auto n = p + 8 * unsigned(edges.size());
        auto big = CostValue(p) + 1;

        vector<Arc> d_arcs;
        CostMatrix costs(n, 3);
        vector<VertexOrigin> origin;
        for (Vertex u = 0; u < p; ++u) {
            costs.set(u, 0, 1);
            costs.set(u, 1, 0);
            costs.set(u, 2, big);
            origin.push_back({"g", u, nullopt});
        }

        for (unsigned e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            Vertex base = p + 8 * e;
            auto x = [&](unsigned i) { return base + i - 1; };
            Vertex ue = base + 6, ve = base + 7;
            for (unsigned i = 1; i <= 6; ++i) {
                d_arcs.push_back({x(i), x(i % 6 + 1)});
                origin.push_back({"x" + to_string(i), u, e});
            }
            origin.push_back({"ue", u, e});
            origin.push_back({"ve", v, e});
            d_arcs.push_back({x(4), ue});
            d_arcs.push_back({ue, u});
            d_arcs.push_back({x(5), ve});
            d_arcs.push_back({ve, v});

            costs.set(x(1), 1, big);
            costs.set(x(1), 2, big);
            costs.set(x(4), 2, big);
            costs.set(x(5), 2, big);
        }

        Digraph h(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 2}});
        return ReductionInstance{ReductionKind::Gadget, std::move(h), Digraph(n, d_arcs), std::move(costs), p, std::move(origin)};
    }

    auto extract_independent_set(const ReductionInstance & instance, const vector<Vertex> & map) -> VertexSet
    {
        if (map.size() != instance.d.size())
            throw PreconditionViolated("extract_independent_set: map does not cover D");
        VertexSet result;
        for (Vertex x = 0; x < instance.graph_size; ++x) {
            if (instance.kind == ReductionKind::RPrime && map[2 * x] == 0)
                result.push_back(x);
            if (instance.kind == ReductionKind::Gadget && map[x] == 1)
                result.push_back(x);
        }
        return result;
    }

    auto is_independent(const Graph & g, const VertexSet & set) -> bool
    {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] >= g.size())
                return false;
            for (std::size_t j = 0; j < i; ++j)
                if (set[i] == set[j] || g.has_edge(set[i], set[j]))
                    return false;
        }
        return true;
    }

    namespace
    {
        using Mask = std::uint32_t;

        // Branch on the lowest candidate: take it (dropping its neighbours)
        // or leave it. Prune when the candidates cannot beat the best.
        void mis_search(const vector<Mask> & adjacent, Mask candidates, Mask chosen, Mask & best)
        {
            if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best))
                return;
            if (candidates == 0) {
                best = chosen;
                return;
            }
            auto v = unsigned(std::countr_zero(candidates));
            Mask bit = Mask{1} << v;
            mis_search(adjacent, candidates & ~bit & ~adjacent[v], chosen | bit, best);
            mis_search(adjacent, candidates & ~bit, chosen, best);
        }
    }

    auto mis_bruteforce(const Graph & g) -> IndependentSet
    {
        check_simple(g, "mis_bruteforce");
        if (g.size() > 24)
            throw BudgetExceeded("mis_bruteforce: graphs above 24 vertices are out of budget");
        vector<Mask> adjacent(g.size(), 0);
        for (auto [u, v] : g.edges()) {
            adjacent[u] |= Mask{1} << v;
            adjacent[v] |= Mask{1} << u;
        }
        Mask all = g.size() == 0 ? 0 : Mask((std::uint64_t{1} << g.size()) - 1);
        Mask best = 0;
        if (g.size() > 0)
            mis_search(adjacent, all, 0, best);

        IndependentSet result{unsigned(std::popcount(best)), {}};
        for (Vertex v = 0; v < g.size(); ++v)
            if (best & (Mask{1} << v))
                result.witness.push_back(v);
        return result;
    }
}
