#include <minhom/core.hh>
#include <minhom/maxflow.hh>

#include <algorithm>
#include <queue>

namespace minhom
{
    FlowNetwork::FlowNetwork(unsigned nodes) : _adjacent(nodes)
    {
    }

    void FlowNetwork::add_edge(unsigned from, unsigned to, Capacity capacity)
    {
        if (from >= node_count() || to >= node_count() || capacity < 0)
            throw PreconditionViolated("FlowNetwork::add_edge: bad endpoint or negative capacity");
        _adjacent[from].push_back(unsigned(_edges.size()));
        _edges.push_back({to, capacity});
        _adjacent[to].push_back(unsigned(_edges.size()));
        _edges.push_back({from, 0});
    }

    auto FlowNetwork::build_levels(unsigned source, unsigned sink) -> bool
    {
        _level.assign(node_count(), -1);
        std::queue<unsigned> queue;
        _level[source] = 0;
        queue.push(source);
        while (! queue.empty()) {
            auto node = queue.front();
            queue.pop();
            for (auto e : _adjacent[node]) {
                auto & edge = _edges[e];
                if (edge.residual > 0 && _level[edge.to] < 0) {
                    _level[edge.to] = _level[node] + 1;
                    queue.push(edge.to);
                }
            }
        }
        return _level[sink] >= 0;
    }

    // Iterative DFS along the level graph; returns the amount pushed.
    auto FlowNetwork::push(unsigned source, unsigned sink, Capacity amount) -> Capacity
    {
        std::vector<unsigned> path_edges;
        unsigned node = source;
        while (true) {
            if (node == sink) {
                Capacity bottleneck = amount;
                for (auto e : path_edges)
                    bottleneck = std::min(bottleneck, _edges[e].residual);
                for (auto e : path_edges) {
                    _edges[e].residual -= bottleneck;
                    _edges[e ^ 1].residual += bottleneck;
                }
                return bottleneck;
            }

            bool advanced = false;
            for (auto & i = _next[node]; i < _adjacent[node].size(); ++i) {
                auto e = _adjacent[node][i];
                auto & edge = _edges[e];
                if (edge.residual > 0 && _level[edge.to] == _level[node] + 1) {
                    path_edges.push_back(e);
                    node = edge.to;
                    advanced = true;
                    break;
                }
            }
            if (advanced)
                continue;

            // Dead end: retreat and never revisit this node in this phase.
            _level[node] = -1;
            if (path_edges.empty())
                return 0;
            auto e = path_edges.back();
            path_edges.pop_back();
            node = _edges[e ^ 1].to;
            ++_next[node];
        }
    }

    auto FlowNetwork::max_flow(unsigned source, unsigned sink, Capacity limit) -> Capacity
    {
        if (source >= node_count() || sink >= node_count() || source == sink)
            throw PreconditionViolated("FlowNetwork::max_flow: bad source or sink");
        Capacity total = 0;
        while (total < limit && build_levels(source, sink)) {
            _next.assign(node_count(), 0);
            while (total < limit) {
                auto pushed = push(source, sink, limit - total);
                if (pushed == 0)
                    break;
                total += pushed;
            }
        }
        return total;
    }

    auto FlowNetwork::residual_reachable(unsigned source) const -> std::vector<bool>
    {
        std::vector<bool> seen(node_count(), false);
        std::vector<unsigned> stack{source};
        seen[source] = true;
        while (! stack.empty()) {
            auto node = stack.back();
            stack.pop_back();
            for (auto e : _adjacent[node]) {
                auto & edge = _edges[e];
                if (edge.residual > 0 && ! seen[edge.to]) {
                    seen[edge.to] = true;
                    stack.push_back(edge.to);
                }
            }
        }
        return seen;
    }
}
