#ifndef MINHOM_REDUCTIONS_HH
#define MINHOM_REDUCTIONS_HH

#include <minhom/core.hh>
#include <minhom/solver.hh>

#include <optional>
#include <string>
#include <vector>

namespace minhom
{
    enum class ReductionKind
    {
        RPrime,
        Gadget
    };

    auto reduction_name(ReductionKind kind) -> const char *;
    auto reduction_from_name(const std::string & name) -> std::optional<ReductionKind>;

    /// Where a vertex of D came from. For the R' construction the roles
    /// are "x1" and "x2" of graph vertex `graph_vertex`. For the gadget
    /// construction, "g" marks a copy of a graph vertex, and "x1".."x6",
    /// "ue", "ve" mark the gadget of edge number `edge`.
    struct VertexOrigin
    {
        std::string role;
        Vertex graph_vertex = 0;
        std::optional<unsigned> edge;

        auto operator==(const VertexOrigin &) const -> bool = default;
    };

    struct ReductionInstance
    {
        ReductionKind kind;
        Digraph h;
        Digraph d;
        CostMatrix costs;
        /// Number of vertices of the source graph.
        unsigned graph_size = 0;
        std::vector<VertexOrigin> vertex_origin;
    };

    /// Independent sets of G as MinHOM over the three-vertex digraph
    /// {01, 12, 21, 20, 11, 22}, plus 00 if loop_at_0. Vertex x of G
    /// becomes the arc 2x -> 2x+1. Optimum is 4p - alpha(G).
    auto reduce_mis_rprime(const Graph & g, bool loop_at_0) -> ReductionInstance;

    /// Independent sets of G as MinHOM over {01, 10, 12, 20, 22}: G's
    /// vertices come first, then one eight-vertex gadget per edge (u < v,
    /// edges in lexicographic order). Optimum is p - alpha(G).
    auto reduce_mis_gadget(const Graph & g) -> ReductionInstance;

    /// The independent set encoded by an optimal homomorphism.
    auto extract_independent_set(const ReductionInstance & instance, const std::vector<Vertex> & map) -> VertexSet;

    auto is_independent(const Graph & g, const VertexSet & set) -> bool;

    struct IndependentSet
    {
        unsigned alpha;
        VertexSet witness;
    };

    /// Exact independence number by branch and bound; graphs above 24
    /// vertices raise BudgetExceeded.
    auto mis_bruteforce(const Graph & g) -> IndependentSet;
}

#endif
