#ifndef MINHOM_CLASSIFIER_HH
#define MINHOM_CLASSIFIER_HH

#include <minhom/core.hh>
#include <minhom/recognition.hh>

#include <string>
#include <variant>

namespace minhom
{
    class NotSemicompleteWpl : public PreconditionViolated
    {
    public:
        using PreconditionViolated::PreconditionViolated;
    };

    class NotReflexiveSemicomplete : public PreconditionViolated
    {
    public:
        using PreconditionViolated::PreconditionViolated;
    };

    /// A forbidden induced subgraph of U(L^sym); vertices are ids of H and
    /// follow the PigWitness layout.
    struct LoopPartPigWitness
    {
        PigWitness witness;

        auto operator==(const LoopPartPigWitness &) const -> bool = default;
    };

    /// A directed cycle among loopless vertices, plus at most one further
    /// loopless vertex, whose induced subdigraph is neither C_2 nor C_3.
    struct LooplessCycleNotCk
    {
        VertexSet cycle;
        VertexSet extra;

        auto operator==(const LooplessCycleNotCk &) const -> bool = default;
    };

    /// The loopless vertices of H are exactly a C_2 or C_3, and H also has a
    /// looped vertex.
    struct LWithCycleCoexistence
    {
        VertexSet cycle;
        Vertex loop_vertex;

        auto operator==(const LWithCycleCoexistence &) const -> bool = default;
    };

    using HardnessWitness = std::variant<PatternHit, LoopPartPigWitness, LooplessCycleNotCk, LWithCycleCoexistence>;

    struct PolynomialCycle
    {
        unsigned k;
        /// cycle[i] -> cycle[i + 1 mod k]; cycle[0] is vertex 0.
        VertexSet cycle;
    };

    struct PolynomialMinMax
    {
        Ordering ordering;
    };

    struct NPHard
    {
        HardnessWitness witness;
    };

    using Classification = std::variant<PolynomialCycle, PolynomialMinMax, NPHard>;

    enum class VerdictKind
    {
        PolynomialCycle,
        PolynomialMinMax,
        NPHard
    };

    auto verdict_kind(const Classification & c) -> VerdictKind;
    auto verdict_name(VerdictKind kind) -> std::string;
    auto is_polynomial(const Classification & c) -> bool;

    /// When h is exactly a loopless C_2 or C_3, its vertices in cycle order
    /// starting from vertex 0.
    auto exact_short_cycle(const Digraph & h) -> std::optional<VertexSet>;

    /// Verdict for a reflexive semicomplete digraph.
    auto classify_reflexive(const Digraph & h) -> Classification;

    /// Verdict for a semicomplete digraph with possible loops. Hardness
    /// witnesses are searched in the order W, R', C_3 with a loop; then
    /// cycles among loopless vertices; then R, C*_3 and the proper interval
    /// test on the looped part.
    auto classify_wpl(const Digraph & h) -> Classification;

    /// Independent verdict via the TT_k[S_1..S_k] decomposition.
    auto classify_via_composition(const Digraph & h) -> bool;

    auto verify_witness(const Digraph & h, const HardnessWitness & witness) -> bool;
    /// Re-checks the certificate of any verdict against h.
    auto verify_classification(const Digraph & h, const Classification & c) -> bool;

    /// One-line human-readable explanation of the verdict.
    auto explain(const Classification & c) -> std::string;
}

#endif
