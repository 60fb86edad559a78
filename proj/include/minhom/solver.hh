#ifndef MINHOM_SOLVER_HH
#define MINHOM_SOLVER_HH

#include <minhom/classifier.hh>
#include <minhom/core.hh>
#include <minhom/maxflow.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace minhom
{
    using CostValue = std::int64_t;

    /// Sentinel for a forbidden (vertex, colour) assignment.
    inline constexpr CostValue infinite_cost = std::numeric_limits<CostValue>::max();

    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// c_i(u) for every vertex u of D and colour i of H; entries are
    /// non-negative or infinite_cost.
    class CostMatrix
    {
    public:
        CostMatrix() = default;
        CostMatrix(unsigned rows, unsigned colours, CostValue fill = 0);
        explicit CostMatrix(const std::vector<std::vector<CostValue>> & rows);

        [[nodiscard]] auto rows() const -> unsigned { return _rows; }
        [[nodiscard]] auto colours() const -> unsigned { return _colours; }
        [[nodiscard]] auto at(Vertex u, Vertex colour) const -> CostValue { return _values[std::size_t{u} * _colours + colour]; }
        void set(Vertex u, Vertex colour, CostValue value);
        [[nodiscard]] auto is_finite(Vertex u, Vertex colour) const -> bool { return at(u, colour) != infinite_cost; }

        auto operator==(const CostMatrix &) const -> bool = default;

    private:
        unsigned _rows = 0, _colours = 0;
        std::vector<CostValue> _values;
    };

    struct Homomorphism
    {
        std::vector<Vertex> map;
        CostValue cost = 0;
    };

    /// Least arc uv of D (lexicographically) with map(u)map(v) not an arc of H.
    auto verify_hom(const Digraph & d, const Digraph & h, const std::vector<Vertex> & map) -> std::optional<Arc>;

    /// Total cost of `map`, or infinite_cost if any summand is infinite.
    auto cost_of(const CostMatrix & costs, const std::vector<Vertex> & map) -> CostValue;

    /// Min-cut network whose finite s-t cuts are exactly the homomorphisms
    /// D -> H, with cut value equal to homomorphism cost. Colours are the
    /// ordering positions 1..p; node (u, i) for 2 <= i <= p stands for
    /// "f(u) >= i", with (u, 1) = source and (u, p + 1) = sink.
    class ThresholdNetwork
    {
    public:
        ThresholdNetwork(const Digraph & h, const Ordering & ordering, const Digraph & d, const CostMatrix & costs);

        [[nodiscard]] auto colours() const -> unsigned { return _p; }
        [[nodiscard]] auto source() const -> unsigned { return 0; }
        [[nodiscard]] auto sink() const -> unsigned { return 1; }
        /// Node for threshold `position` (1-based, 1..p+1) of vertex u.
        [[nodiscard]] auto node(Vertex u, unsigned position) const -> unsigned;
        /// Per colour position 1..p (index position - 1): least and greatest
        /// out-slice position, 0 when the slice is empty.
        [[nodiscard]] auto qplus() const -> const std::vector<unsigned> & { return _qplus; }
        [[nodiscard]] auto rplus() const -> const std::vector<unsigned> & { return _rplus; }
        /// Finite surrogate for infinite capacities.
        [[nodiscard]] auto big_m() const -> CostValue { return _big_m; }
        [[nodiscard]] auto network() -> FlowNetwork & { return _network; }
        [[nodiscard]] auto network() const -> const FlowNetwork & { return _network; }

        /// Effective chain cost c'_i(u) for position i (1-based).
        [[nodiscard]] auto chain_cost(Vertex u, unsigned position) const -> CostValue;

        /// Value of the threshold cut induced by a colouring (colours given as
        /// ordering positions 1..p); infinite_cost if it crosses an infinite arc.
        [[nodiscard]] auto cut_value(const std::vector<unsigned> & positions) const -> CostValue;

    private:
        unsigned _p, _n;
        std::vector<unsigned> _qplus, _rplus;
        std::vector<CostValue> _chain;
        CostValue _big_m = 0;
        FlowNetwork _network;
        struct ArcRecord
        {
            unsigned from, to;
            CostValue capacity;
            bool infinite;
        };
        std::vector<ArcRecord> _arcs;

        void add(unsigned from, unsigned to, CostValue capacity, bool infinite);
    };

    /// Exact minimum via minimum cut. Requires a Min-Max ordering with
    /// interval out-slices (checked). Returns nullopt when no homomorphism
    /// exists.
    auto solve_minmax(const Digraph & h, const Ordering & ordering, const Digraph & d, const CostMatrix & costs) -> std::optional<Homomorphism>;

    /// Exact minimum for H = loopless C_k with colours 0..k-1 and arcs
    /// i -> i+1 mod k.
    auto solve_cycle(unsigned k, const Digraph & d, const CostMatrix & costs) -> std::optional<Homomorphism>;

    /// Exhaustive depth-first search with arc-consistency and cost-bound
    /// pruning. Throws BudgetExceeded after `node_budget` expansions.
    auto solve_bruteforce(const Digraph & h, const Digraph & d, const CostMatrix & costs, std::uint64_t node_budget) -> std::optional<Homomorphism>;

    struct NotPolynomial
    {
        HardnessWitness witness;
    };

    /// Either an optimal homomorphism, nullopt for "none exists", or the
    /// hardness certificate when H is not in a polynomial class.
    using SolveOutcome = std::variant<std::optional<Homomorphism>, NotPolynomial>;

    /// Classifies H and dispatches to the cycle or min-cut solver.
    auto solve(const Digraph & h, const Digraph & d, const CostMatrix & costs) -> SolveOutcome;
    /// Same, reusing a classification of H.
    auto solve(const Digraph & h, const Classification & verdict, const Digraph & d, const CostMatrix & costs) -> SolveOutcome;

    /// Integer costs uniform in [0, max_cost], each replaced by
    /// infinite_cost with probability infinite_prob.
    auto random_costs(std::uint64_t seed, unsigned rows, unsigned colours, CostValue max_cost, double infinite_prob) -> CostMatrix;
}

#endif
