#ifndef MINHOM_RECOGNITION_HH
#define MINHOM_RECOGNITION_HH

#include <minhom/core.hh>

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace minhom
{
    /// The small induced subdigraphs whose presence forces NP-hardness.
    enum class PatternKind
    {
        R,                   ///< reflexive; 0->1, 1->2 one-way, 0<->2 two-way
        RPrime,              ///< 0 loopless; 0->1, 2->0 one-way, 1<->2 two-way, loops on 1, 2
        W,                   ///< 0<->1, loop on 1 only
        ReflexiveC3,         ///< reflexive one-way 3-cycle
        LooplessC3WithLoops  ///< one-way 3-cycle carrying at least one loop
    };

    auto pattern_name(PatternKind kind) -> std::string_view;
    auto pattern_from_name(std::string_view name) -> std::optional<PatternKind>;

    /// vertices[i] of H plays the role of vertex i of the pattern.
    struct PatternHit
    {
        PatternKind kind;
        VertexSet vertices;
        /// Which hit vertices carry loops, aligned with `vertices`.
        std::vector<bool> loop_mask;

        auto operator==(const PatternHit &) const -> bool = default;
    };

    auto find_pattern(const Digraph & h, PatternKind kind) -> std::optional<PatternHit>;
    auto verify_pattern_hit(const Digraph & h, const PatternHit & hit) -> bool;

    /// Returns an acyclic ordering when h is a loopless transitive tournament.
    auto is_transitive_tournament(const Digraph & h) -> std::optional<Ordering>;

    enum class PigKind
    {
        LongInducedCycle,
        Claw,
        Net,
        Tent
    };

    auto pig_name(PigKind kind) -> std::string_view;
    auto pig_from_name(std::string_view name) -> std::optional<PigKind>;

    /// A forbidden induced subgraph of proper interval graphs. Layouts:
    /// Claw is (centre, leaf, leaf, leaf); Net and Tent are (x1, x2, x3,
    /// y1, y2, y3) with x1 < x2 < x3 the central triangle and y_i attached
    /// to x_i (Net) or to the two x's other than x_i (Tent);
    /// LongInducedCycle lists the cycle from its least vertex.
    struct PigWitness
    {
        PigKind kind;
        VertexSet vertices;

        auto operator==(const PigWitness &) const -> bool = default;
    };

    /// Positions (i, j, k) with i < j < k, {v_i, v_k} an edge, and
    /// {v_i, v_j} or {v_j, v_k} missing.
    struct UmbrellaViolation
    {
        unsigned i, j, k;

        auto operator==(const UmbrellaViolation &) const -> bool = default;
    };

    /// Loops are ignored; the lexicographically least violating triple.
    auto check_umbrella(const Graph & g, const Ordering & ordering) -> std::optional<UmbrellaViolation>;

    /// Umbrella ordering of a reflexive graph (components concatenated in
    /// order of their least vertex), or a forbidden-subgraph witness.
    /// Throws PreconditionViolated if g is not reflexive.
    auto umbrella_ordering(const Graph & g) -> std::variant<Ordering, PigWitness>;

    /// Preference: LongInducedCycle, Claw, Net, Tent; within a kind, the
    /// lexicographically least vertex tuple.
    auto find_pig_witness(const Graph & g) -> std::optional<PigWitness>;
    auto verify_pig_witness(const Graph & g, const PigWitness & witness) -> bool;
}

#endif
