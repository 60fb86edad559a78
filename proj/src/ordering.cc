#include <minhom/ordering.hh>
#include <minhom/recognition.hh>

#include <algorithm>
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
        auto describe(const VertexSet & vs) -> string
        {
            string s = "{";
            for (std::size_t i = 0; i < vs.size(); ++i)
                s += (i ? "," : "") + to_string(vs[i]);
            return s + "}";
        }

        auto strictly_dominates_all(const Digraph & h, const VertexSet & from, const VertexSet & to) -> bool
        {
            for (auto x : from)
                for (auto y : to)
                    if (! h.strictly_dominates(x, y))
                        return false;
            return true;
        }
    }

    auto check_minmax(const Digraph & h, const Ordering & ord) -> optional<MinMaxViolation>
    {
        if (ord.size() != h.size())
            throw PreconditionViolated("check_minmax: ordering size differs from digraph size");

        auto p = h.size();
        vector<bool> by_position(std::size_t{p} * p, false);
        vector<std::pair<unsigned, unsigned>> arcs;
        arcs.reserve(h.arc_count());
        for (auto & [u, v] : h.arcs()) {
            arcs.emplace_back(ord.position(u), ord.position(v));
            by_position[std::size_t{ord.position(u)} * p + ord.position(v)] = true;
        }

        for (std::size_t a = 0; a < arcs.size(); ++a)
            for (std::size_t b = a + 1; b < arcs.size(); ++b) {
                auto [i, k] = arcs[a];
                auto [j, s] = arcs[b];
                auto lo_tail = std::min(i, j), lo_head = std::min(k, s);
                auto hi_tail = std::max(i, j), hi_head = std::max(k, s);
                auto to_arc = [&](unsigned x, unsigned y) { return Arc{ord[x], ord[y]}; };
                if (! by_position[std::size_t{lo_tail} * p + lo_head])
                    return MinMaxViolation{h.arcs()[a], h.arcs()[b], MinMaxViolation::Missing::Min, to_arc(lo_tail, lo_head)};
                if (! by_position[std::size_t{hi_tail} * p + hi_head])
                    return MinMaxViolation{h.arcs()[a], h.arcs()[b], MinMaxViolation::Missing::Max, to_arc(hi_tail, hi_head)};
            }
        return nullopt;
    }

    auto slices_are_intervals(const Digraph & h, const Ordering & ord) -> bool
    {
        if (ord.size() != h.size())
            throw PreconditionViolated("slices_are_intervals: ordering size differs from digraph size");
        for (Vertex a = 0; a < h.size(); ++a) {
            auto & out = h.out_neighbors(a);
            if (out.empty())
                continue;
            unsigned lo = h.size(), hi = 0;
            for (auto b : out) {
                lo = std::min(lo, ord.position(b));
                hi = std::max(hi, ord.position(b));
            }
            if (hi - lo + 1 != out.size())
                return false;
        }
        return true;
    }

    auto orient_component(const Digraph & h, const VertexSet & component, const VertexSet & umbrella) -> VertexSet
    {
        auto all_forward = [&](const VertexSet & seq) {
            for (std::size_t i = 0; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j)
                    if (h.strictly_dominates(seq[j], seq[i]))
                        return false;
            return true;
        };

        VertexSet sorted_comp = component, sorted_umb = umbrella;
        std::sort(sorted_comp.begin(), sorted_comp.end());
        std::sort(sorted_umb.begin(), sorted_umb.end());
        if (sorted_comp != sorted_umb)
            throw PreconditionViolated("orient_component: ordering does not cover the component " + describe(component));

        if (all_forward(umbrella))
            return umbrella;
        VertexSet reversed(umbrella.rbegin(), umbrella.rend());
        if (all_forward(reversed))
            return reversed;
        throw PreconditionViolated("orient_component: neither direction of " + describe(umbrella) + " makes all one-way arcs forward");
    }

    auto order_components(const Digraph & h, const vector<VertexSet> & components) -> vector<unsigned>
    {
        auto k = unsigned(components.size());
        vector<Arc> block_arcs;
        for (unsigned a = 0; a < k; ++a)
            for (unsigned b = a + 1; b < k; ++b) {
                if (strictly_dominates_all(h, components[a], components[b]))
                    block_arcs.emplace_back(a, b);
                else if (strictly_dominates_all(h, components[b], components[a]))
                    block_arcs.emplace_back(b, a);
                else
                    throw PreconditionViolated("order_components: arcs between " + describe(components[a]) + " and " + describe(components[b]) + " are not uniform");
            }

        auto order = is_transitive_tournament(Digraph{k, block_arcs});
        if (! order)
            throw PreconditionViolated("order_components: component tournament is cyclic");
        return vector<unsigned>(order->vertices().begin(), order->vertices().end());
    }

    auto symmetric_loop_graph(const Digraph & h, const VertexSet & loop_vertices) -> Graph
    {
        vector<Graph::Edge> edges;
        for (Vertex i = 0; i < loop_vertices.size(); ++i) {
            edges.emplace_back(i, i);
            for (Vertex j = i + 1; j < loop_vertices.size(); ++j)
                if (h.symmetric(loop_vertices[i], loop_vertices[j]))
                    edges.emplace_back(i, j);
        }
        return Graph{unsigned(loop_vertices.size()), edges};
    }

    namespace
    {
        // Components of L^sym in ids of h, each listed in umbrella order.
        auto umbrella_components(const Digraph & h, const VertexSet & loop_vertices) -> vector<VertexSet>
        {
            auto graph = symmetric_loop_graph(h, loop_vertices);
            auto result = umbrella_ordering(graph);
            if (auto witness = std::get_if<PigWitness>(&result)) {
                VertexSet in_h;
                for (auto v : witness->vertices)
                    in_h.push_back(loop_vertices[v]);
                throw PreconditionViolated("symmetric part of the looped vertices is not proper interval; " + string(pig_name(witness->kind)) + " on " + describe(in_h));
            }
            auto & umbrella = std::get<Ordering>(result);

            vector<VertexSet> comps;
            for (auto & comp : connected_components(graph)) {
                VertexSet seq = comp;
                std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return umbrella.position(a) < umbrella.position(b); });
                for (auto & v : seq)
                    v = loop_vertices[v];
                comps.push_back(std::move(seq));
            }
            return comps;
        }
    }

    auto build_minmax_wpl(const Digraph & h) -> Ordering
    {
        auto split = loop_split(h);

        auto loopless = induced(h, split.free_vertices);
        auto acyclic = is_transitive_tournament(loopless.digraph);
        if (! acyclic)
            throw PreconditionViolated("build_minmax_wpl: loopless part is not a transitive tournament");
        VertexSet free_order;
        for (auto v : acyclic->vertices())
            free_order.push_back(loopless.origin[v]);

        auto comps = umbrella_components(h, split.loop_vertices);
        for (auto & comp : comps)
            comp = orient_component(h, comp, comp);
        auto comp_order = order_components(h, comps);

        // Slot s means: after the first s loopless vertices.
        auto p = unsigned(free_order.size());
        vector<vector<unsigned>> at_slot(p + 1);
        for (auto c : comp_order) {
            unsigned dominators = 0;
            bool dominated_seen = false;
            for (auto u : free_order) {
                bool u_over = strictly_dominates_all(h, {u}, comps[c]);
                bool c_over = strictly_dominates_all(h, comps[c], {u});
                if (! u_over && ! c_over)
                    throw PreconditionViolated("build_minmax_wpl: loopless vertex " + to_string(u) + " is not uniformly related to component " + describe(comps[c]));
                if (u_over) {
                    if (dominated_seen)
                        throw PreconditionViolated("build_minmax_wpl: component " + describe(comps[c]) + " closes a 3-cycle with the loopless part");
                    ++dominators;
                }
                else
                    dominated_seen = true;
            }
            at_slot[dominators].push_back(c);
        }

        VertexSet result;
        for (unsigned s = 0; s <= p; ++s) {
            for (auto c : at_slot[s])
                result.insert(result.end(), comps[c].begin(), comps[c].end());
            if (s < p)
                result.push_back(free_order[s]);
        }
        Ordering ordering{std::move(result)};

        for (unsigned i = 0; i < ordering.size(); ++i)
            for (unsigned j = i + 1; j < ordering.size(); ++j)
                if (! h.has_arc(ordering[i], ordering[j]))
                    throw PreconditionViolated("build_minmax_wpl: constructed ordering has a backward-only pair " + to_string(ordering[i]) + "," + to_string(ordering[j]));
        if (auto violation = check_minmax(h, ordering))
            throw PreconditionViolated("build_minmax_wpl: constructed ordering is not Min-Max (arcs " + to_string(violation->arc_e.first) + to_string(violation->arc_e.second) + ", " + to_string(violation->arc_f.first) + to_string(violation->arc_f.second) + ")");
        if (! slices_are_intervals(h, ordering))
            throw PreconditionViolated("build_minmax_wpl: constructed ordering has non-interval out-slices");
        return ordering;
    }

    auto decompose_tt_composition(const Digraph & h) -> std::variant<Decomposition, DecompositionFailure>
    {
        auto split = loop_split(h);
        auto graph = symmetric_loop_graph(h, split.loop_vertices);

        vector<VertexSet> blocks;
        vector<Decomposition::BlockKind> kinds;
        for (auto & comp : connected_components(graph)) {
            VertexSet block;
            for (auto v : comp)
                block.push_back(split.loop_vertices[v]);
            blocks.push_back(std::move(block));
            kinds.push_back(Decomposition::BlockKind::ReflexiveBlock);
        }
        for (auto v : split.free_vertices) {
            blocks.push_back({v});
            kinds.push_back(Decomposition::BlockKind::LooplessSingleton);
        }

        auto k = unsigned(blocks.size());
        vector<Arc> block_arcs;
        for (unsigned a = 0; a < k; ++a)
            for (unsigned b = a + 1; b < k; ++b) {
                if (strictly_dominates_all(h, blocks[a], blocks[b]))
                    block_arcs.emplace_back(a, b);
                else if (strictly_dominates_all(h, blocks[b], blocks[a]))
                    block_arcs.emplace_back(b, a);
                else {
                    VertexSet both = blocks[a];
                    both.insert(both.end(), blocks[b].begin(), blocks[b].end());
                    return DecompositionFailure{"arcs between blocks are not a uniform one-way domination", both};
                }
            }

        auto block_order = is_transitive_tournament(Digraph{k, block_arcs});
        if (! block_order) {
            // A cyclic tournament contains a directed 3-cycle.
            for (unsigned a = 0; a < k; ++a)
                for (unsigned b = 0; b < k; ++b)
                    for (unsigned c = 0; c < k; ++c)
                        if (a < b && a < c && b != c && h.has_arc(blocks[a][0], blocks[b][0]) && h.has_arc(blocks[b][0], blocks[c][0]) && h.has_arc(blocks[c][0], blocks[a][0]))
                            return DecompositionFailure{"block tournament is cyclic", {blocks[a][0], blocks[b][0], blocks[c][0]}};
            throw InternalInconsistency("decompose_tt_composition: cyclic tournament without a 3-cycle");
        }

        for (unsigned b = 0; b < k; ++b) {
            if (kinds[b] != Decomposition::BlockKind::ReflexiveBlock)
                continue;
            auto sub = induced(h, blocks[b]);
            if (auto hit = find_pattern(sub.digraph, PatternKind::R)) {
                VertexSet in_h;
                for (auto v : hit->vertices)
                    in_h.push_back(sub.origin[v]);
                return DecompositionFailure{"reflexive block contains an induced R", in_h};
            }
            auto ordered = umbrella_ordering(symmetric_loop_graph(h, blocks[b]));
            if (auto witness = std::get_if<PigWitness>(&ordered)) {
                VertexSet in_h;
                for (auto v : witness->vertices)
                    in_h.push_back(blocks[b][v]);
                return DecompositionFailure{"symmetric part of a reflexive block is not proper interval (" + string(pig_name(witness->kind)) + ")", in_h};
            }
        }

        Decomposition result;
        for (auto b : block_order->vertices()) {
            result.blocks.push_back(blocks[b]);
            result.kinds.push_back(kinds[b]);
        }
        return result;
    }
}
