#include <minhom/core.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        constexpr unsigned dense_limit = 4096;

        auto arc_key(Vertex u, Vertex v) -> std::uint64_t
        {
            return (std::uint64_t{u} << 32) | v;
        }

        void check_vertex(unsigned n, Vertex v, const char * what)
        {
            if (v >= n)
                throw PreconditionViolated(string(what) + ": vertex " + to_string(v) + " out of range for n = " + to_string(n));
        }
    }

    Digraph::Digraph(unsigned n, std::span<const Arc> arcs) : _n(n)
    {
        build(vector<Arc>(arcs.begin(), arcs.end()));
    }

    Digraph::Digraph(unsigned n, std::initializer_list<Arc> arcs) : _n(n)
    {
        build(vector<Arc>(arcs));
    }

    void Digraph::build(vector<Arc> arcs)
    {
        for (auto & [u, v] : arcs) {
            check_vertex(_n, u, "arc");
            check_vertex(_n, v, "arc");
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        _arcs = std::move(arcs);

        _out.assign(_n, {});
        _in.assign(_n, {});
        for (auto & [u, v] : _arcs) {
            _out[u].push_back(v);
            _in[v].push_back(u);
        }

        if (_n <= dense_limit) {
            _words_per_row = (_n + 63) / 64;
            _matrix.assign(std::size_t{_words_per_row} * _n, 0);
            for (auto & [u, v] : _arcs)
                _matrix[std::size_t{u} * _words_per_row + v / 64] |= std::uint64_t{1} << (v % 64);
        }
        else {
            _arc_keys.reserve(_arcs.size());
            for (auto & [u, v] : _arcs)
                _arc_keys.insert(arc_key(u, v));
        }
    }

    auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
    {
        if (u >= _n || v >= _n)
            return false;
        if (_n <= dense_limit)
            return (_matrix[std::size_t{u} * _words_per_row + v / 64] >> (v % 64)) & 1;
        return _arc_keys.contains(arc_key(u, v));
    }

    Graph::Graph(unsigned n, std::span<const Edge> edges) : _n(n), _adj(n), _loops(n, false)
    {
        for (auto [u, v] : edges) {
            check_vertex(n, u, "edge");
            check_vertex(n, v, "edge");
            _edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(_edges.begin(), _edges.end());
        _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());
        for (auto [u, v] : _edges) {
            if (u == v)
                _loops[u] = true;
            else {
                _adj[u].push_back(v);
                _adj[v].push_back(u);
            }
        }
        for (auto & a : _adj)
            std::sort(a.begin(), a.end());
    }

    Graph::Graph(unsigned n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        if (u >= _n || v >= _n)
            return false;
        if (u == v)
            return _loops[u];
        if (_adj[u].size() > _adj[v].size())
            std::swap(u, v);
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto Graph::is_reflexive() const -> bool
    {
        return std::all_of(_loops.begin(), _loops.end(), [](bool b) { return b; });
    }

    auto Graph::has_any_loop() const -> bool
    {
        return std::any_of(_loops.begin(), _loops.end(), [](bool b) { return b; });
    }

    Ordering::Ordering(VertexSet perm) : _perm(std::move(perm)), _position(_perm.size(), unsigned(-1))
    {
        for (unsigned i = 0; i < _perm.size(); ++i) {
            if (_perm[i] >= _perm.size() || _position[_perm[i]] != unsigned(-1))
                throw PreconditionViolated("ordering is not a permutation of 0.." + to_string(_perm.size()) + "-1");
            _position[_perm[i]] = i;
        }
    }

    auto Ordering::identity(unsigned n) -> Ordering
    {
        VertexSet perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        return Ordering{std::move(perm)};
    }

    auto Ordering::reversed() const -> Ordering
    {
        return Ordering{VertexSet(_perm.rbegin(), _perm.rend())};
    }

    auto is_semicomplete_wpl(const Digraph & h) -> bool
    {
        for (Vertex u = 0; u < h.size(); ++u)
            for (Vertex v = u + 1; v < h.size(); ++v)
                if (! h.adjacent(u, v))
                    return false;
        return true;
    }

    auto is_reflexive(const Digraph & h) -> bool
    {
        for (Vertex u = 0; u < h.size(); ++u)
            if (! h.has_loop(u))
                return false;
        return true;
    }

    auto is_loopless(const Digraph & h) -> bool
    {
        for (Vertex u = 0; u < h.size(); ++u)
            if (h.has_loop(u))
                return false;
        return true;
    }

    auto symmetric_subdigraph(const Digraph & h) -> Digraph
    {
        vector<Arc> arcs;
        for (auto & [u, v] : h.arcs())
            if (h.has_arc(v, u))
                arcs.emplace_back(u, v);
        return Digraph{h.size(), arcs};
    }

    auto underlying_graph(const Digraph & d) -> Graph
    {
        vector<Graph::Edge> edges(d.arcs().begin(), d.arcs().end());
        return Graph{d.size(), edges};
    }

    auto loop_split(const Digraph & h) -> LoopSplit
    {
        LoopSplit result;
        for (Vertex u = 0; u < h.size(); ++u)
            (h.has_loop(u) ? result.loop_vertices : result.free_vertices).push_back(u);
        return result;
    }

    auto induced(const Digraph & h, std::span<const Vertex> s) -> InducedSubdigraph
    {
        vector<int> position(h.size(), -1);
        for (unsigned i = 0; i < s.size(); ++i) {
            check_vertex(h.size(), s[i], "induced");
            if (position[s[i]] != -1)
                throw PreconditionViolated("induced: vertex " + to_string(s[i]) + " listed twice");
            position[s[i]] = int(i);
        }

        vector<Arc> arcs;
        for (unsigned i = 0; i < s.size(); ++i)
            for (auto v : h.out_neighbors(s[i]))
                if (position[v] != -1)
                    arcs.emplace_back(i, Vertex(position[v]));

        return InducedSubdigraph{Digraph{unsigned(s.size()), arcs}, VertexSet(s.begin(), s.end())};
    }

    auto induced(const Graph & g, std::span<const Vertex> s) -> Graph
    {
        vector<int> position(g.size(), -1);
        for (unsigned i = 0; i < s.size(); ++i) {
            check_vertex(g.size(), s[i], "induced");
            if (position[s[i]] != -1)
                throw PreconditionViolated("induced: vertex " + to_string(s[i]) + " listed twice");
            position[s[i]] = int(i);
        }

        vector<Graph::Edge> edges;
        for (auto [u, v] : g.edges())
            if (position[u] != -1 && position[v] != -1)
                edges.emplace_back(Vertex(position[u]), Vertex(position[v]));
        return Graph{unsigned(s.size()), edges};
    }

    auto converse(const Digraph & h) -> Digraph
    {
        vector<Arc> arcs;
        arcs.reserve(h.arc_count());
        for (auto & [u, v] : h.arcs())
            arcs.emplace_back(v, u);
        return Digraph{h.size(), arcs};
    }

    auto compose(const Digraph & tournament, std::span<const Digraph> blocks) -> Digraph
    {
        auto k = tournament.size();
        if (blocks.size() != k)
            throw PreconditionViolated("compose: " + to_string(blocks.size()) + " blocks for a tournament on " + to_string(k) + " vertices");

        // Loopless tournament whose out-degrees are exactly k-1, ..., 0.
        vector<unsigned> seen(k, 0);
        for (Vertex i = 0; i < k; ++i) {
            if (tournament.has_loop(i))
                throw PreconditionViolated("compose: tournament has a loop at " + to_string(i));
            for (Vertex j = i + 1; j < k; ++j)
                if (tournament.has_arc(i, j) == tournament.has_arc(j, i))
                    throw PreconditionViolated("compose: not a tournament at pair " + to_string(i) + "," + to_string(j));
            auto deg = tournament.out_neighbors(i).size();
            if (seen[deg]++)
                throw PreconditionViolated("compose: tournament is not transitive");
        }

        vector<unsigned> offset(k + 1, 0);
        for (unsigned i = 0; i < k; ++i)
            offset[i + 1] = offset[i] + blocks[i].size();

        vector<Arc> arcs;
        for (unsigned i = 0; i < k; ++i)
            for (auto & [u, v] : blocks[i].arcs())
                arcs.emplace_back(offset[i] + u, offset[i] + v);
        for (auto & [i, j] : tournament.arcs())
            for (auto x = offset[i]; x < offset[i + 1]; ++x)
                for (auto y = offset[j]; y < offset[j + 1]; ++y)
                    arcs.emplace_back(x, y);

        return Digraph{offset[k], arcs};
    }

    namespace
    {
        template <typename Neighbors_>
        auto components_by_bfs(unsigned n, Neighbors_ && neighbors) -> vector<VertexSet>
        {
            vector<VertexSet> result;
            vector<bool> seen(n, false);
            for (Vertex start = 0; start < n; ++start) {
                if (seen[start])
                    continue;
                VertexSet comp{start};
                seen[start] = true;
                for (std::size_t head = 0; head < comp.size(); ++head)
                    neighbors(comp[head], [&](Vertex w) {
                        if (! seen[w]) {
                            seen[w] = true;
                            comp.push_back(w);
                        }
                    });
                std::sort(comp.begin(), comp.end());
                result.push_back(std::move(comp));
            }
            return result;
        }
    }

    auto weak_components(const Digraph & d) -> vector<VertexSet>
    {
        return components_by_bfs(d.size(), [&](Vertex u, auto && visit) {
            for (auto w : d.out_neighbors(u))
                visit(w);
            for (auto w : d.in_neighbors(u))
                visit(w);
        });
    }

    auto connected_components(const Graph & g) -> vector<VertexSet>
    {
        return components_by_bfs(g.size(), [&](Vertex u, auto && visit) {
            for (auto w : g.neighbors(u))
                visit(w);
        });
    }

    auto relabel(const Digraph & h, std::span<const Vertex> perm) -> Digraph
    {
        if (perm.size() != h.size())
            throw PreconditionViolated("relabel: permutation has wrong length");
        vector<Arc> arcs;
        for (auto & [u, v] : h.arcs())
            arcs.emplace_back(perm[u], perm[v]);
        return Digraph{h.size(), arcs};
    }

    namespace shapes
    {
        auto directed_cycle(unsigned k) -> Digraph
        {
            vector<Arc> arcs;
            for (Vertex i = 0; i < k; ++i)
                arcs.emplace_back(i, (i + 1) % k);
            return Digraph{k, arcs};
        }

        auto transitive_tournament(unsigned k) -> Digraph
        {
            vector<Arc> arcs;
            for (Vertex i = 0; i < k; ++i)
                for (Vertex j = i + 1; j < k; ++j)
                    arcs.emplace_back(i, j);
            return Digraph{k, arcs};
        }

        auto complete_reflexive(unsigned k) -> Digraph
        {
            vector<Arc> arcs;
            for (Vertex i = 0; i < k; ++i)
                for (Vertex j = 0; j < k; ++j)
                    arcs.emplace_back(i, j);
            return Digraph{k, arcs};
        }

        auto add_loops(const Digraph & d, std::span<const Vertex> at) -> Digraph
        {
            vector<Arc> arcs = d.arcs();
            for (auto v : at)
                arcs.emplace_back(v, v);
            return Digraph{d.size(), arcs};
        }

        auto remove_arc(const Digraph & d, Arc arc) -> Digraph
        {
            vector<Arc> arcs;
            for (auto & a : d.arcs())
                if (a != arc)
                    arcs.push_back(a);
            return Digraph{d.size(), arcs};
        }

        auto r() -> Digraph
        {
            return Digraph{3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}, {0, 0}, {1, 1}, {2, 2}}};
        }

        auto r_prime() -> Digraph
        {
            return Digraph{3, {{0, 1}, {1, 2}, {2, 1}, {2, 0}, {1, 1}, {2, 2}}};
        }

        auto w() -> Digraph
        {
            return Digraph{2, {{0, 1}, {1, 0}, {1, 1}}};
        }
    }

    auto Rng::uniform() -> double
    {
        return double(_engine() >> 11) * 0x1.0p-53;
    }

    auto Rng::below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw PreconditionViolated("Rng::below: empty range");
        // Rejection sampling keeps this exactly uniform.
        auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        while (true) {
            auto x = _engine();
            if (x < limit)
                return x % bound;
        }
    }

    namespace
    {
        void check_probability(double p, const char * what)
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw PreconditionViolated(string(what) + " must lie in [0, 1]");
        }
    }

    auto random_semicomplete_wpl(std::uint64_t seed, unsigned n, double sym_prob, double loop_prob) -> Digraph
    {
        if (n < 1)
            throw PreconditionViolated("random_semicomplete_wpl: n must be at least 1");
        check_probability(sym_prob, "sym_prob");
        check_probability(loop_prob, "loop_prob");

        Rng rng(seed);
        vector<Arc> arcs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.chance(sym_prob)) {
                    arcs.emplace_back(u, v);
                    arcs.emplace_back(v, u);
                }
                else if (rng.chance(0.5))
                    arcs.emplace_back(u, v);
                else
                    arcs.emplace_back(v, u);
            }
        for (Vertex u = 0; u < n; ++u)
            if (rng.chance(loop_prob))
                arcs.emplace_back(u, u);
        return Digraph{n, arcs};
    }

    auto random_digraph(std::uint64_t seed, unsigned n, double arc_prob, double loop_prob) -> Digraph
    {
        check_probability(arc_prob, "arc_prob");
        check_probability(loop_prob, "loop_prob");

        Rng rng(seed);
        vector<Arc> arcs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && rng.chance(arc_prob))
                    arcs.emplace_back(u, v);
        for (Vertex u = 0; u < n; ++u)
            if (rng.chance(loop_prob))
                arcs.emplace_back(u, u);
        return Digraph{n, arcs};
    }

    auto random_graph(std::uint64_t seed, unsigned n, double edge_prob) -> Graph
    {
        check_probability(edge_prob, "edge_prob");

        Rng rng(seed);
        vector<Graph::Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.chance(edge_prob))
                    edges.emplace_back(u, v);
        return Graph{n, edges};
    }

    auto all_semicomplete_wpl(unsigned n) -> vector<Digraph>
    {
        if (n > 5)
            throw PreconditionViolated("all_semicomplete_wpl: n above 5 is too large to enumerate");
        vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
        unsigned pair_states = 1;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            pair_states *= 3;

        vector<Digraph> result;
        for (unsigned code = 0; code < pair_states; ++code)
            for (unsigned loops = 0; loops < (1u << n); ++loops) {
                vector<Arc> arcs;
                auto c = code;
                for (auto [i, j] : pairs) {
                    auto state = c % 3;
                    c /= 3;
                    if (state != 1)
                        arcs.emplace_back(i, j);
                    if (state != 0)
                        arcs.emplace_back(j, i);
                }
                for (Vertex v = 0; v < n; ++v)
                    if (loops & (1u << v))
                        arcs.emplace_back(v, v);
                result.emplace_back(n, arcs);
            }
        return result;
    }

    auto all_graphs(unsigned n, bool reflexive) -> vector<Graph>
    {
        if (n > 8)
            throw PreconditionViolated("all_graphs: n above 8 is too large to enumerate");
        vector<Graph::Edge> pairs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
        vector<Graph> result;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            vector<Graph::Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask & (std::uint64_t{1} << i))
                    edges.push_back(pairs[i]);
            if (reflexive)
                for (Vertex v = 0; v < n; ++v)
                    edges.emplace_back(v, v);
            result.emplace_back(n, edges);
        }
        return result;
    }
}
