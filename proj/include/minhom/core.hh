#ifndef MINHOM_CORE_HH
#define MINHOM_CORE_HH

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace minhom
{
    /// Vertices are dense indices 0..n-1.
    using Vertex = unsigned;
    using Arc = std::pair<Vertex, Vertex>;
    using VertexSet = std::vector<Vertex>;

    /// Raised when a caller hands an operation something outside its
    /// documented domain (wrong shape, out of range, failed precondition).
    class PreconditionViolated : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when a result fails its own post-check. Reaching this is a bug.
    class InternalInconsistency : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// Immutable digraph; loops are ordinary arcs (u,u). Duplicate arcs
    /// passed to the constructor are merged.
    class Digraph
    {
    public:
        Digraph() = default;
        Digraph(unsigned n, std::span<const Arc> arcs);
        Digraph(unsigned n, std::initializer_list<Arc> arcs);

        [[nodiscard]] auto size() const -> unsigned { return _n; }
        [[nodiscard]] auto arc_count() const -> std::size_t { return _arcs.size(); }
        /// Sorted lexicographically.
        [[nodiscard]] auto arcs() const -> const std::vector<Arc> & { return _arcs; }

        [[nodiscard]] auto has_arc(Vertex u, Vertex v) const -> bool;
        [[nodiscard]] auto has_loop(Vertex u) const -> bool { return has_arc(u, u); }
        [[nodiscard]] auto symmetric(Vertex u, Vertex v) const -> bool { return has_arc(u, v) && has_arc(v, u); }
        /// u -> v and not v -> u.
        [[nodiscard]] auto strictly_dominates(Vertex u, Vertex v) const -> bool { return has_arc(u, v) && ! has_arc(v, u); }
        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return has_arc(u, v) || has_arc(v, u); }

        /// Sorted ascending; includes u itself when u has a loop.
        [[nodiscard]] auto out_neighbors(Vertex u) const -> const VertexSet & { return _out[u]; }
        [[nodiscard]] auto in_neighbors(Vertex u) const -> const VertexSet & { return _in[u]; }

        auto operator==(const Digraph & other) const -> bool { return _n == other._n && _arcs == other._arcs; }

    private:
        unsigned _n = 0;
        std::vector<Arc> _arcs;
        std::vector<VertexSet> _out, _in;
        // Dense bit matrix for small n, hashed arc keys otherwise.
        std::vector<std::uint64_t> _matrix;
        std::unordered_set<std::uint64_t> _arc_keys;
        unsigned _words_per_row = 0;

        void build(std::vector<Arc> arcs);
    };

    /// Undirected graph with optional self-loops; edges stored with u <= v.
    class Graph
    {
    public:
        using Edge = std::pair<Vertex, Vertex>;

        Graph() = default;
        Graph(unsigned n, std::span<const Edge> edges);
        Graph(unsigned n, std::initializer_list<Edge> edges);

        [[nodiscard]] auto size() const -> unsigned { return _n; }
        [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }
        [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;
        [[nodiscard]] auto has_loop(Vertex u) const -> bool { return has_edge(u, u); }
        /// Neighbors other than u itself, sorted.
        [[nodiscard]] auto neighbors(Vertex u) const -> const VertexSet & { return _adj[u]; }
        [[nodiscard]] auto is_reflexive() const -> bool;
        [[nodiscard]] auto has_any_loop() const -> bool;

        auto operator==(const Graph & other) const -> bool { return _n == other._n && _edges == other._edges; }

    private:
        unsigned _n = 0;
        std::vector<Edge> _edges;
        std::vector<VertexSet> _adj;
        std::vector<bool> _loops;
    };

    /// A permutation of V(H), indexed by position.
    class Ordering
    {
    public:
        Ordering() = default;
        /// Throws PreconditionViolated unless `perm` is a permutation of 0..n-1.
        explicit Ordering(VertexSet perm);
        static auto identity(unsigned n) -> Ordering;

        [[nodiscard]] auto size() const -> unsigned { return unsigned(_perm.size()); }
        [[nodiscard]] auto operator[](unsigned position) const -> Vertex { return _perm[position]; }
        [[nodiscard]] auto position(Vertex v) const -> unsigned { return _position[v]; }
        [[nodiscard]] auto vertices() const -> const VertexSet & { return _perm; }
        [[nodiscard]] auto reversed() const -> Ordering;

        auto operator==(const Ordering & other) const -> bool { return _perm == other._perm; }

    private:
        VertexSet _perm;
        std::vector<unsigned> _position;
    };

    struct LoopSplit
    {
        VertexSet loop_vertices;
        VertexSet free_vertices;
    };

    struct InducedSubdigraph
    {
        Digraph digraph;
        /// origin[i] is the vertex of the parent that became vertex i.
        VertexSet origin;
    };

    auto is_semicomplete_wpl(const Digraph & h) -> bool;
    auto is_reflexive(const Digraph & h) -> bool;
    auto is_loopless(const Digraph & h) -> bool;

    auto symmetric_subdigraph(const Digraph & h) -> Digraph;
    auto underlying_graph(const Digraph & d) -> Graph;
    auto loop_split(const Digraph & h) -> LoopSplit;

    /// Vertices of the result are numbered in the order they appear in `s`.
    auto induced(const Digraph & h, std::span<const Vertex> s) -> InducedSubdigraph;
    auto induced(const Graph & g, std::span<const Vertex> s) -> Graph;

    auto converse(const Digraph & h) -> Digraph;

    /// T[S_1, ..., S_k]: blocks are laid out consecutively in block order.
    auto compose(const Digraph & tournament, std::span<const Digraph> blocks) -> Digraph;

    /// Components sorted by their least vertex, each sorted ascending.
    auto weak_components(const Digraph & d) -> std::vector<VertexSet>;
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;

    /// Relabels vertex v of h to perm[v].
    auto relabel(const Digraph & h, std::span<const Vertex> perm) -> Digraph;

    /// Fixed shapes used throughout. Vertex ids are 0-based.
    namespace shapes
    {
        auto directed_cycle(unsigned k) -> Digraph;
        auto transitive_tournament(unsigned k) -> Digraph;
        auto complete_reflexive(unsigned k) -> Digraph;
        auto add_loops(const Digraph & d, std::span<const Vertex> at) -> Digraph;
        auto remove_arc(const Digraph & d, Arc arc) -> Digraph;
        /// {01, 12, 20, 02, 00, 11, 22}
        auto r() -> Digraph;
        /// {01, 12, 21, 20, 11, 22}
        auto r_prime() -> Digraph;
        /// {01, 10, 11}
        auto w() -> Digraph;
    }

    /// mt19937_64 with distribution helpers that do not depend on the
    /// standard library's (implementation-defined) distributions.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}
        auto next() -> std::uint64_t { return _engine(); }
        /// Uniform in [0, 1).
        auto uniform() -> double;
        auto chance(double p) -> bool { return uniform() < p; }
        /// Uniform in [0, bound).
        auto below(std::uint64_t bound) -> std::uint64_t;

    private:
        std::mt19937_64 _engine;
    };

    auto random_semicomplete_wpl(std::uint64_t seed, unsigned n, double sym_prob, double loop_prob) -> Digraph;
    /// Each ordered pair of distinct vertices is an arc with probability arc_prob.
    auto random_digraph(std::uint64_t seed, unsigned n, double arc_prob, double loop_prob) -> Digraph;
    auto random_graph(std::uint64_t seed, unsigned n, double edge_prob) -> Graph;

    /// Every labelled semicomplete digraph with possible loops on n vertices.
    auto all_semicomplete_wpl(unsigned n) -> std::vector<Digraph>;
    /// Every labelled simple graph on n vertices, optionally with all loops.
    auto all_graphs(unsigned n, bool reflexive) -> std::vector<Graph>;
}

#endif
