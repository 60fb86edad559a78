#ifndef MINHOM_MAXFLOW_HH
#define MINHOM_MAXFLOW_HH

#include <cstdint>
#include <vector>

namespace minhom
{
    /// Dinic's blocking-flow max-flow over integer capacities.
    class FlowNetwork
    {
    public:
        using Capacity = std::int64_t;

        explicit FlowNetwork(unsigned nodes);

        [[nodiscard]] auto node_count() const -> unsigned { return unsigned(_adjacent.size()); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size() / 2; }

        void add_edge(unsigned from, unsigned to, Capacity capacity);

        /// Pushes flow from source to sink, stopping once `limit` units have
        /// been routed. Returns the value pushed by this call.
        auto max_flow(unsigned source, unsigned sink, Capacity limit) -> Capacity;

        /// Nodes reachable from `source` in the residual network.
        [[nodiscard]] auto residual_reachable(unsigned source) const -> std::vector<bool>;

    private:
        struct Edge
        {
            unsigned to;
            Capacity residual;
        };

        std::vector<Edge> _edges;
        std::vector<std::vector<unsigned>> _adjacent;
        std::vector<int> _level;
        std::vector<std::size_t> _next;

        auto build_levels(unsigned source, unsigned sink) -> bool;
        auto push(unsigned node, unsigned sink, Capacity amount) -> Capacity;
    };
}

#endif
