#ifndef MINHOM_ORDERING_HH
#define MINHOM_ORDERING_HH

#include <minhom/core.hh>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minhom
{
    /// Two arcs whose coordinatewise minimum or maximum (in ordering
    /// positions) is not an arc. Arcs are given as original vertex ids.
    struct MinMaxViolation
    {
        enum class Missing
        {
            Min,
            Max
        };

        Arc arc_e;
        Arc arc_f;
        Missing missing;
        /// The absent pair, as vertex ids.
        Arc absent;
    };

    /// Absent iff `ordering` is a Min-Max ordering of h.
    auto check_minmax(const Digraph & h, const Ordering & ordering) -> std::optional<MinMaxViolation>;

    /// True iff every out-neighbourhood is a contiguous run of positions.
    auto slices_are_intervals(const Digraph & h, const Ordering & ordering) -> bool;

    /// `umbrella` (an ordering of `component`'s vertices, as ids of h) or
    /// its reversal, whichever makes every one-way arc inside the
    /// component point forward. Throws PreconditionViolated when neither.
    auto orient_component(const Digraph & h, const VertexSet & component, const VertexSet & umbrella) -> VertexSet;

    /// Indices into `components`, ordered so that every vertex of an
    /// earlier component strictly dominates every vertex of a later one.
    /// Throws PreconditionViolated on non-uniform cross arcs or a cyclic
    /// component tournament.
    auto order_components(const Digraph & h, const std::vector<VertexSet> & components) -> std::vector<unsigned>;

    /// Builds a Min-Max ordering for a semicomplete digraph with possible
    /// loops whose loopless part is a transitive tournament and whose
    /// looped part is free of the forbidden patterns. Every structural
    /// step is re-verified; a failed check raises PreconditionViolated.
    auto build_minmax_wpl(const Digraph & h) -> Ordering;

    struct Decomposition
    {
        enum class BlockKind
        {
            LooplessSingleton,
            ReflexiveBlock
        };

        /// In dominance order: earlier blocks strictly dominate later ones.
        std::vector<VertexSet> blocks;
        std::vector<BlockKind> kinds;
    };

    struct DecompositionFailure
    {
        std::string reason;
        VertexSet vertices;
    };

    /// Tries to write h as TT_k[S_1, ..., S_k] with each block a loopless
    /// singleton or a reflexive block free of R whose symmetric part is a
    /// connected proper interval graph.
    auto decompose_tt_composition(const Digraph & h) -> std::variant<Decomposition, DecompositionFailure>;

    /// Induced loop-carrying subgraph of h as a reflexive graph on
    /// `loop_vertices` (relabelled 0..|L|-1), keeping only two-way arcs.
    auto symmetric_loop_graph(const Digraph & h, const VertexSet & loop_vertices) -> Graph;
}

#endif
