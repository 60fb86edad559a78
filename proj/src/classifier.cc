#include <minhom/classifier.hh>
#include <minhom/ordering.hh>

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
        auto list(const VertexSet & vs) -> string
        {
            string s;
            for (std::size_t i = 0; i < vs.size(); ++i)
                s += (i ? "," : "") + to_string(vs[i]);
            return s;
        }

        auto in_h(const VertexSet & local, const VertexSet & origin) -> VertexSet
        {
            VertexSet result;
            for (auto v : local)
                result.push_back(origin[v]);
            return result;
        }

        // A 2-cycle if there is one, else a 3-cycle; h is loopless and
        // semicomplete with a cycle.
        auto short_cycle(const Digraph & h) -> VertexSet
        {
            auto n = h.size();
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (h.symmetric(u, v))
                        return {u, v};
            for (Vertex u = 0; u < n; ++u)
                for (auto v : h.out_neighbors(u))
                    for (auto w : h.out_neighbors(v))
                        if (u < v && u < w && h.has_arc(w, u))
                            return {u, v, w};
            throw InternalInconsistency("short_cycle: semicomplete digraph with a cycle has neither a 2- nor a 3-cycle");
        }

        auto is_cycle_in(const Digraph & h, const VertexSet & cycle) -> bool
        {
            if (cycle.size() < 2)
                return false;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (cycle[i] >= h.size() || ! h.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]))
                    return false;
                for (std::size_t j = 0; j < i; ++j)
                    if (cycle[i] == cycle[j])
                        return false;
            }
            return true;
        }

        auto all_loopless(const Digraph & h, const VertexSet & vs) -> bool
        {
            return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v < h.size() && ! h.has_loop(v); });
        }

        auto distinct_in_range(const Digraph & h, VertexSet vs) -> bool
        {
            for (auto v : vs)
                if (v >= h.size())
                    return false;
            std::sort(vs.begin(), vs.end());
            return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
        }

        auto check_semicomplete(const Digraph & h) -> void
        {
            if (h.size() == 0)
                throw NotSemicompleteWpl("digraph is empty");
            if (! is_semicomplete_wpl(h))
                throw NotSemicompleteWpl("digraph is not semicomplete: some pair of distinct vertices is non-adjacent");
        }

        auto looped_part_witness(const Digraph & h, const VertexSet & loop_vertices) -> optional<HardnessWitness>
        {
            for (auto kind : {PatternKind::R, PatternKind::ReflexiveC3})
                if (auto hit = find_pattern(h, kind))
                    return HardnessWitness{*hit};

            auto ordered = umbrella_ordering(symmetric_loop_graph(h, loop_vertices));
            if (auto pig = std::get_if<PigWitness>(&ordered))
                return HardnessWitness{LoopPartPigWitness{PigWitness{pig->kind, in_h(pig->vertices, loop_vertices)}}};
            return nullopt;
        }

        auto build_ordering(const Digraph & h) -> Ordering
        {
            try {
                return build_minmax_wpl(h);
            }
            catch (const PreconditionViolated & e) {
                throw InternalInconsistency(string("classifier accepted a digraph the ordering construction rejects: ") + e.what());
            }
        }
    }

    auto verdict_kind(const Classification & c) -> VerdictKind
    {
        return VerdictKind(c.index());
    }

    auto verdict_name(VerdictKind kind) -> string
    {
        switch (kind) {
            case VerdictKind::PolynomialCycle: return "polynomial_cycle";
            case VerdictKind::PolynomialMinMax: return "polynomial_minmax";
            case VerdictKind::NPHard: return "np_hard";
        }
        return "?";
    }

    auto is_polynomial(const Classification & c) -> bool
    {
        return verdict_kind(c) != VerdictKind::NPHard;
    }

    auto exact_short_cycle(const Digraph & h) -> optional<VertexSet>
    {
        auto n = h.size();
        if ((n != 2 && n != 3) || h.arc_count() != n || ! is_loopless(h))
            return nullopt;
        VertexSet cycle{0};
        while (cycle.size() < n) {
            auto & out = h.out_neighbors(cycle.back());
            if (out.size() != 1)
                return nullopt;
            cycle.push_back(out.front());
        }
        if (! is_cycle_in(h, cycle))
            return nullopt;
        return cycle;
    }

    auto classify_reflexive(const Digraph & h) -> Classification
    {
        if (h.size() == 0 || ! is_reflexive(h) || ! is_semicomplete_wpl(h))
            throw NotReflexiveSemicomplete("classify_reflexive: digraph is not a reflexive semicomplete digraph");

        VertexSet all(h.size());
        for (Vertex v = 0; v < h.size(); ++v)
            all[v] = v;
        if (auto witness = looped_part_witness(h, all))
            return NPHard{*witness};
        return PolynomialMinMax{build_ordering(h)};
    }

    auto classify_wpl(const Digraph & h) -> Classification
    {
        check_semicomplete(h);

        if (auto cycle = exact_short_cycle(h))
            return PolynomialCycle{unsigned(cycle->size()), *cycle};

        for (auto kind : {PatternKind::W, PatternKind::RPrime, PatternKind::LooplessC3WithLoops})
            if (auto hit = find_pattern(h, kind))
                return NPHard{*hit};

        auto split = loop_split(h);
        auto loopless = induced(h, split.free_vertices);
        if (! is_transitive_tournament(loopless.digraph)) {
            auto cycle = in_h(short_cycle(loopless.digraph), loopless.origin);
            if (exact_short_cycle(loopless.digraph))
                return NPHard{LWithCycleCoexistence{cycle, split.loop_vertices.front()}};
            VertexSet extra;
            for (auto v : split.free_vertices)
                if (std::find(cycle.begin(), cycle.end(), v) == cycle.end()) {
                    extra.push_back(v);
                    break;
                }
            return NPHard{LooplessCycleNotCk{cycle, extra}};
        }

        if (auto witness = looped_part_witness(h, split.loop_vertices))
            return NPHard{*witness};

        return PolynomialMinMax{build_ordering(h)};
    }

    auto classify_via_composition(const Digraph & h) -> bool
    {
        check_semicomplete(h);
        if (exact_short_cycle(h))
            return true;
        return std::holds_alternative<Decomposition>(decompose_tt_composition(h));
    }

    auto verify_witness(const Digraph & h, const HardnessWitness & witness) -> bool
    {
        if (auto hit = std::get_if<PatternHit>(&witness))
            return verify_pattern_hit(h, *hit);

        if (auto pig = std::get_if<LoopPartPigWitness>(&witness)) {
            auto & vs = pig->witness.vertices;
            if (! distinct_in_range(h, vs))
                return false;
            for (auto v : vs)
                if (! h.has_loop(v))
                    return false;
            VertexSet local(vs.size());
            for (Vertex i = 0; i < vs.size(); ++i)
                local[i] = i;
            return verify_pig_witness(symmetric_loop_graph(h, vs), PigWitness{pig->witness.kind, local});
        }

        if (auto c = std::get_if<LooplessCycleNotCk>(&witness)) {
            VertexSet all = c->cycle;
            all.insert(all.end(), c->extra.begin(), c->extra.end());
            if (c->extra.size() > 1 || ! distinct_in_range(h, all) || ! all_loopless(h, all) || ! is_cycle_in(h, c->cycle))
                return false;
            return ! exact_short_cycle(induced(h, all).digraph);
        }

        if (auto c = std::get_if<LWithCycleCoexistence>(&witness)) {
            if (! distinct_in_range(h, c->cycle) || ! all_loopless(h, c->cycle) || ! is_cycle_in(h, c->cycle))
                return false;
            if (c->loop_vertex >= h.size() || ! h.has_loop(c->loop_vertex))
                return false;
            if (! exact_short_cycle(induced(h, c->cycle).digraph))
                return false;
            VertexSet sorted_cycle = c->cycle;
            std::sort(sorted_cycle.begin(), sorted_cycle.end());
            return loop_split(h).free_vertices == sorted_cycle;
        }
        return false;
    }

    auto verify_classification(const Digraph & h, const Classification & c) -> bool
    {
        if (auto cyc = std::get_if<PolynomialCycle>(&c)) {
            auto expected = exact_short_cycle(h);
            return expected && cyc->k == expected->size() && cyc->cycle == *expected;
        }
        if (auto mm = std::get_if<PolynomialMinMax>(&c))
            return mm->ordering.size() == h.size() && ! check_minmax(h, mm->ordering) && slices_are_intervals(h, mm->ordering);
        return verify_witness(h, std::get<NPHard>(c).witness);
    }

    auto explain(const Classification & c) -> string
    {
        if (auto cyc = std::get_if<PolynomialCycle>(&c))
            return "H is the directed " + to_string(cyc->k) + "-cycle; solvable by cycle label propagation";
        if (std::holds_alternative<PolynomialMinMax>(c))
            return "H has a Min-Max ordering with interval out-slices; solvable by minimum cut";

        auto & w = std::get<NPHard>(c).witness;
        if (auto hit = std::get_if<PatternHit>(&w))
            return "H contains an induced " + string(pattern_name(hit->kind)) + " on vertices " + list(hit->vertices);
        if (auto pig = std::get_if<LoopPartPigWitness>(&w))
            return "the symmetric part of the looped vertices is not a proper interval graph: " + string(pig_name(pig->witness.kind)) + " on vertices " + list(pig->witness.vertices);
        if (auto cyc = std::get_if<LooplessCycleNotCk>(&w))
            return "the loopless vertices contain the cycle " + list(cyc->cycle) + " but do not induce C_2 or C_3";
        auto & co = std::get<LWithCycleCoexistence>(w);
        return "the loopless vertices induce the cycle " + list(co.cycle) + " while vertex " + to_string(co.loop_vertex) + " carries a loop";
    }
}
