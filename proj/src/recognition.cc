#include <minhom/recognition.hh>

#include <algorithm>
#include <array>
#include <functional>
#include <string>

using std::array;
using std::nullopt;
using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace minhom
{
    namespace
    {
        struct PatternShape
        {
            unsigned size;
            vector<Arc> arcs;
        };

        auto shape_of(PatternKind kind) -> PatternShape
        {
            switch (kind) {
                case PatternKind::R: return {3, shapes::r().arcs()};
                case PatternKind::RPrime: return {3, shapes::r_prime().arcs()};
                case PatternKind::W: return {2, shapes::w().arcs()};
                case PatternKind::ReflexiveC3: return {3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}, {1, 1}, {2, 2}}};
                case PatternKind::LooplessC3WithLoops: return {3, {{0, 1}, {1, 2}, {2, 0}}};
            }
            throw InternalInconsistency("unknown pattern kind");
        }

        auto shape_has(const PatternShape & shape, unsigned a, unsigned b) -> bool
        {
            return std::find(shape.arcs.begin(), shape.arcs.end(), Arc{a, b}) != shape.arcs.end();
        }

        // Exact match of the induced subdigraph on `vs` against the pattern
        // under the identity correspondence vs[i] <-> i.
        auto matches(const Digraph & h, PatternKind kind, const PatternShape & shape, std::span<const Vertex> vs) -> bool
        {
            bool any_loop = false;
            for (unsigned a = 0; a < shape.size; ++a)
                for (unsigned b = 0; b < shape.size; ++b) {
                    bool present = h.has_arc(vs[a], vs[b]);
                    if (a == b && kind == PatternKind::LooplessC3WithLoops) {
                        any_loop = any_loop || present;
                        continue;
                    }
                    if (present != shape_has(shape, a, b))
                        return false;
                }
            return kind != PatternKind::LooplessC3WithLoops || any_loop;
        }

        auto make_hit(const Digraph & h, PatternKind kind, VertexSet vs) -> PatternHit
        {
            vector<bool> mask;
            for (auto v : vs)
                mask.push_back(h.has_loop(v));
            return PatternHit{kind, std::move(vs), std::move(mask)};
        }

        auto loops_in_shape(const PatternShape & shape) -> unsigned
        {
            return unsigned(std::count_if(shape.arcs.begin(), shape.arcs.end(), [](const Arc & a) { return a.first == a.second; }));
        }
    }

    auto pattern_name(PatternKind kind) -> string_view
    {
        switch (kind) {
            case PatternKind::R: return "R";
            case PatternKind::RPrime: return "RPrime";
            case PatternKind::W: return "W";
            case PatternKind::ReflexiveC3: return "ReflexiveC3";
            case PatternKind::LooplessC3WithLoops: return "LooplessC3WithLoops";
        }
        return "?";
    }

    auto pattern_from_name(string_view name) -> optional<PatternKind>
    {
        for (auto kind : {PatternKind::R, PatternKind::RPrime, PatternKind::W, PatternKind::ReflexiveC3, PatternKind::LooplessC3WithLoops})
            if (pattern_name(kind) == name)
                return kind;
        return nullopt;
    }

    auto find_pattern(const Digraph & h, PatternKind kind) -> optional<PatternHit>
    {
        auto shape = shape_of(kind);
        auto n = h.size();
        auto wanted_loops = loops_in_shape(shape);
        auto loop_count_ok = [&](unsigned loops) {
            return kind == PatternKind::LooplessC3WithLoops ? loops >= 1 : loops == wanted_loops;
        };

        if (shape.size == 2) {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) {
                    if (! loop_count_ok(unsigned(h.has_loop(u)) + unsigned(h.has_loop(v))))
                        continue;
                    for (auto vs : {array<Vertex, 2>{u, v}, array<Vertex, 2>{v, u}})
                        if (matches(h, kind, shape, vs))
                            return make_hit(h, kind, VertexSet(vs.begin(), vs.end()));
                }
            return nullopt;
        }

        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                for (Vertex w = v + 1; w < n; ++w) {
                    if (! loop_count_ok(unsigned(h.has_loop(u)) + unsigned(h.has_loop(v)) + unsigned(h.has_loop(w))))
                        continue;
                    array<Vertex, 3> vs{u, v, w};
                    do {
                        if (matches(h, kind, shape, vs))
                            return make_hit(h, kind, VertexSet(vs.begin(), vs.end()));
                    } while (std::next_permutation(vs.begin(), vs.end()));
                }
        return nullopt;
    }

    auto verify_pattern_hit(const Digraph & h, const PatternHit & hit) -> bool
    {
        auto shape = shape_of(hit.kind);
        if (hit.vertices.size() != shape.size || hit.loop_mask.size() != shape.size)
            return false;
        for (unsigned a = 0; a < shape.size; ++a) {
            if (hit.vertices[a] >= h.size() || hit.loop_mask[a] != h.has_loop(hit.vertices[a]))
                return false;
            for (unsigned b = 0; b < a; ++b)
                if (hit.vertices[a] == hit.vertices[b])
                    return false;
        }
        return matches(h, hit.kind, shape, hit.vertices);
    }

    auto is_transitive_tournament(const Digraph & h) -> optional<Ordering>
    {
        auto n = h.size();
        for (Vertex u = 0; u < n; ++u) {
            if (h.has_loop(u))
                return nullopt;
            for (Vertex v = u + 1; v < n; ++v)
                if (h.has_arc(u, v) == h.has_arc(v, u))
                    return nullopt;
        }

        VertexSet order(n);
        for (Vertex u = 0; u < n; ++u)
            order[u] = u;
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return h.out_neighbors(a).size() > h.out_neighbors(b).size();
        });
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (! h.has_arc(order[i], order[j]))
                    return nullopt;
        return Ordering{std::move(order)};
    }

    auto pig_name(PigKind kind) -> string_view
    {
        switch (kind) {
            case PigKind::LongInducedCycle: return "LongInducedCycle";
            case PigKind::Claw: return "Claw";
            case PigKind::Net: return "Net";
            case PigKind::Tent: return "Tent";
        }
        return "?";
    }

    auto pig_from_name(string_view name) -> optional<PigKind>
    {
        for (auto kind : {PigKind::LongInducedCycle, PigKind::Claw, PigKind::Net, PigKind::Tent})
            if (pig_name(kind) == name)
                return kind;
        return nullopt;
    }

    namespace
    {
        auto adjacent(const Graph & g, Vertex u, Vertex v) -> bool
        {
            return u != v && g.has_edge(u, v);
        }

        auto umbrella_holds_fast(const Graph & g, const Ordering & ord) -> bool
        {
            // Equivalent to the triple condition: every vertex's later
            // neighbours form the run right after it, earlier ones the run
            // right before it.
            for (unsigned i = 0; i < ord.size(); ++i) {
                unsigned forward = 0, backward = 0, max_forward = i, min_backward = i;
                for (auto w : g.neighbors(ord[i])) {
                    auto p = ord.position(w);
                    if (p > i) {
                        ++forward;
                        max_forward = std::max(max_forward, p);
                    }
                    else {
                        ++backward;
                        min_backward = std::min(min_backward, p);
                    }
                }
                if (max_forward - i != forward || i - min_backward != backward)
                    return false;
            }
            return true;
        }

        auto lex_bfs(const Graph & g, const VertexSet & priority) -> VertexSet
        {
            vector<VertexSet> classes{priority};
            vector<bool> marked(g.size(), false);
            VertexSet result;
            result.reserve(priority.size());

            while (! classes.empty()) {
                auto v = classes.front().front();
                classes.front().erase(classes.front().begin());
                result.push_back(v);

                for (auto w : g.neighbors(v))
                    marked[w] = true;
                vector<VertexSet> refined;
                refined.reserve(classes.size() * 2);
                for (auto & cls : classes) {
                    VertexSet in, out;
                    for (auto w : cls)
                        (marked[w] ? in : out).push_back(w);
                    if (! in.empty())
                        refined.push_back(std::move(in));
                    if (! out.empty())
                        refined.push_back(std::move(out));
                }
                for (auto w : g.neighbors(v))
                    marked[w] = false;
                classes = std::move(refined);
            }
            return result;
        }

        // Three LexBFS sweeps, the second and third breaking ties by the
        // last vertex of the previous sweep.
        auto three_sweep(const Graph & g, const VertexSet & component) -> VertexSet
        {
            auto sigma = lex_bfs(g, component);
            for (int sweep = 0; sweep < 2; ++sweep)
                sigma = lex_bfs(g, VertexSet(sigma.rbegin(), sigma.rend()));
            return sigma;
        }

        auto component_is_umbrella(const Graph & g, const VertexSet & seq) -> bool
        {
            auto sub = induced(g, seq);
            return umbrella_holds_fast(sub, Ordering::identity(sub.size()));
        }

        auto exhaustive_umbrella(const Graph & g, VertexSet seq) -> optional<VertexSet>
        {
            std::sort(seq.begin(), seq.end());
            do {
                if (component_is_umbrella(g, seq))
                    return seq;
            } while (std::next_permutation(seq.begin(), seq.end()));
            return nullopt;
        }

        constexpr unsigned exhaustive_limit = 9;

        auto find_long_induced_cycle(const Graph & g) -> optional<VertexSet>
        {
            VertexSet path;
            std::function<bool(Vertex)> extend = [&](Vertex s) -> bool {
                auto x = path.back();
                for (auto y : g.neighbors(x)) {
                    if (y <= s || std::find(path.begin(), path.end(), y) != path.end())
                        continue;
                    bool chord = false;
                    for (std::size_t i = 1; i + 1 < path.size() && ! chord; ++i)
                        chord = adjacent(g, y, path[i]);
                    if (chord)
                        continue;
                    if (adjacent(g, y, s)) {
                        if (path.size() + 1 >= 4 && path[1] < y) {
                            path.push_back(y);
                            return true;
                        }
                        continue;
                    }
                    path.push_back(y);
                    if (extend(s))
                        return true;
                    path.pop_back();
                }
                return false;
            };

            for (Vertex s = 0; s < g.size(); ++s) {
                for (auto a : g.neighbors(s)) {
                    if (a <= s)
                        continue;
                    path = {s, a};
                    if (extend(s))
                        return path;
                }
            }
            return nullopt;
        }

        auto find_claw(const Graph & g) -> optional<VertexSet>
        {
            for (Vertex c = 0; c < g.size(); ++c) {
                auto & nb = g.neighbors(c);
                for (std::size_t a = 0; a < nb.size(); ++a)
                    for (std::size_t b = a + 1; b < nb.size(); ++b) {
                        if (adjacent(g, nb[a], nb[b]))
                            continue;
                        for (std::size_t d = b + 1; d < nb.size(); ++d)
                            if (! adjacent(g, nb[a], nb[d]) && ! adjacent(g, nb[b], nb[d]))
                                return VertexSet{c, nb[a], nb[b], nb[d]};
                    }
            }
            return nullopt;
        }

        // Triangles x1 < x2 < x3 in increasing order, each offered three
        // pendant slots. Slot i draws candidates from the neighbours of
        // x[anchor(i)]; `fits(i, y, x)` decides whether y may fill it.
        template <typename Anchor_, typename Fits_>
        auto find_triangle_with_pendants(const Graph & g, Anchor_ && anchor, Fits_ && fits) -> optional<VertexSet>
        {
            for (Vertex x1 = 0; x1 < g.size(); ++x1)
                for (auto x2 : g.neighbors(x1)) {
                    if (x2 <= x1)
                        continue;
                    for (auto x3 : g.neighbors(x2)) {
                        if (x3 <= x2 || ! adjacent(g, x1, x3))
                            continue;
                        array<Vertex, 3> x{x1, x2, x3};
                        array<Vertex, 3> y{};
                        std::function<bool(unsigned)> fill = [&](unsigned i) -> bool {
                            if (i == 3)
                                return true;
                            for (auto cand : g.neighbors(x[anchor(i)])) {
                                if (cand == x1 || cand == x2 || cand == x3)
                                    continue;
                                if (! fits(i, cand, x))
                                    continue;
                                bool clash = false;
                                for (unsigned j = 0; j < i && ! clash; ++j)
                                    clash = y[j] == cand || adjacent(g, y[j], cand);
                                if (clash)
                                    continue;
                                y[i] = cand;
                                if (fill(i + 1))
                                    return true;
                            }
                            return false;
                        };
                        if (fill(0))
                            return VertexSet{x1, x2, x3, y[0], y[1], y[2]};
                    }
                }
            return nullopt;
        }

        auto find_net(const Graph & g) -> optional<VertexSet>
        {
            auto anchor = [](unsigned i) { return i; };
            return find_triangle_with_pendants(g, anchor, [&](unsigned i, Vertex y, const array<Vertex, 3> & x) {
                for (unsigned j = 0; j < 3; ++j)
                    if (adjacent(g, y, x[j]) != (i == j))
                        return false;
                return true;
            });
        }

        auto find_tent(const Graph & g) -> optional<VertexSet>
        {
            auto anchor = [](unsigned i) { return (i + 1) % 3; };
            return find_triangle_with_pendants(g, anchor, [&](unsigned i, Vertex y, const array<Vertex, 3> & x) {
                for (unsigned j = 0; j < 3; ++j)
                    if (adjacent(g, y, x[j]) == (i == j))
                        return false;
                return true;
            });
        }

        auto witness_edges(PigKind kind, unsigned size) -> vector<Graph::Edge>
        {
            switch (kind) {
                case PigKind::Claw: return {{0, 1}, {0, 2}, {0, 3}};
                case PigKind::Net: return {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
                case PigKind::Tent: return {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}};
                case PigKind::LongInducedCycle: {
                    vector<Graph::Edge> edges;
                    for (Vertex i = 0; i < size; ++i)
                        edges.emplace_back(std::min(i, (i + 1) % size), std::max(i, (i + 1) % size));
                    return edges;
                }
            }
            return {};
        }
    }

    auto check_umbrella(const Graph & g, const Ordering & ord) -> optional<UmbrellaViolation>
    {
        if (ord.size() != g.size())
            throw PreconditionViolated("check_umbrella: ordering size differs from graph size");
        if (umbrella_holds_fast(g, ord))
            return nullopt;

        auto n = ord.size();
        for (unsigned i = 0; i < n; ++i) {
            vector<unsigned> later;
            for (auto w : g.neighbors(ord[i]))
                if (ord.position(w) > i)
                    later.push_back(ord.position(w));
            std::sort(later.begin(), later.end());
            for (unsigned j = i + 1; j < n; ++j) {
                bool ij = adjacent(g, ord[i], ord[j]);
                for (auto k : later)
                    if (k > j && (! ij || ! adjacent(g, ord[j], ord[k])))
                        return UmbrellaViolation{i, j, k};
            }
        }
        throw InternalInconsistency("check_umbrella: fast and exhaustive checks disagree");
    }

    auto find_pig_witness(const Graph & g) -> optional<PigWitness>
    {
        if (auto c = find_long_induced_cycle(g))
            return PigWitness{PigKind::LongInducedCycle, *c};
        if (auto c = find_claw(g))
            return PigWitness{PigKind::Claw, *c};
        if (auto c = find_net(g))
            return PigWitness{PigKind::Net, *c};
        if (auto c = find_tent(g))
            return PigWitness{PigKind::Tent, *c};
        return nullopt;
    }

    auto verify_pig_witness(const Graph & g, const PigWitness & witness) -> bool
    {
        auto & vs = witness.vertices;
        unsigned expected_size = witness.kind == PigKind::Claw ? 4 : witness.kind == PigKind::LongInducedCycle ? unsigned(vs.size()) : 6;
        if (vs.size() != expected_size || vs.size() < 4)
            return false;
        for (std::size_t a = 0; a < vs.size(); ++a) {
            if (vs[a] >= g.size())
                return false;
            for (std::size_t b = 0; b < a; ++b)
                if (vs[a] == vs[b])
                    return false;
        }

        auto edges = witness_edges(witness.kind, unsigned(vs.size()));
        for (unsigned a = 0; a < vs.size(); ++a)
            for (unsigned b = a + 1; b < vs.size(); ++b) {
                bool want = std::find(edges.begin(), edges.end(), Graph::Edge{a, b}) != edges.end();
                if (adjacent(g, vs[a], vs[b]) != want)
                    return false;
            }
        return true;
    }

    auto umbrella_ordering(const Graph & g) -> std::variant<Ordering, PigWitness>
    {
        if (! g.is_reflexive())
            throw PreconditionViolated("umbrella_ordering: graph is not reflexive");

        VertexSet result;
        bool failed = false;
        auto components = connected_components(g);
        vector<VertexSet> per_component;
        for (auto & comp : components) {
            auto seq = three_sweep(g, comp);
            if (! component_is_umbrella(g, seq))
                failed = true;
            per_component.push_back(std::move(seq));
        }

        if (failed) {
            if (auto w = find_pig_witness(g))
                return *w;
            // No forbidden subgraph, so an umbrella ordering exists; the
            // sweep should have found it.
            for (std::size_t c = 0; c < components.size(); ++c) {
                if (component_is_umbrella(g, per_component[c]))
                    continue;
                if (components[c].size() > exhaustive_limit)
                    throw InternalInconsistency("umbrella_ordering: sweep failed on a proper interval component of size " + std::to_string(components[c].size()));
                auto fallback = exhaustive_umbrella(g, components[c]);
                if (! fallback)
                    throw InternalInconsistency("umbrella_ordering: no witness and no ordering");
                per_component[c] = std::move(*fallback);
            }
        }

        for (auto & seq : per_component)
            result.insert(result.end(), seq.begin(), seq.end());
        Ordering ordering{std::move(result)};
        if (check_umbrella(g, ordering))
            throw InternalInconsistency("umbrella_ordering: produced ordering fails the umbrella check");
        return ordering;
    }
}
