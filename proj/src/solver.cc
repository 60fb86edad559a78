#include <minhom/ordering.hh>
#include <minhom/solver.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        auto checked_add(CostValue a, CostValue b, const char * what) -> CostValue
        {
            CostValue result;
            if (__builtin_add_overflow(a, b, &result))
                throw PreconditionViolated(string(what) + ": cost total overflows a 64-bit integer");
            return result;
        }

        auto check_dimensions(const Digraph & d, unsigned colours, const CostMatrix & costs, const char * who) -> void
        {
            if (costs.rows() != d.size() || costs.colours() != colours)
                throw PreconditionViolated(string(who) + ": cost matrix is " + to_string(costs.rows()) + "x" + to_string(costs.colours())
                    + " but D has " + to_string(d.size()) + " vertices and H has " + to_string(colours) + " colours");
        }
    }

    CostMatrix::CostMatrix(unsigned rows, unsigned colours, CostValue fill) :
        _rows(rows),
        _colours(colours),
        _values(std::size_t{rows} * colours, fill)
    {
        if (fill < 0)
            throw PreconditionViolated("CostMatrix: negative cost");
    }

    CostMatrix::CostMatrix(const vector<vector<CostValue>> & rows) :
        _rows(unsigned(rows.size())),
        _colours(rows.empty() ? 0 : unsigned(rows.front().size()))
    {
        _values.reserve(std::size_t{_rows} * _colours);
        for (std::size_t u = 0; u < rows.size(); ++u) {
            if (rows[u].size() != _colours)
                throw PreconditionViolated("CostMatrix: row " + to_string(u) + " has " + to_string(rows[u].size()) + " entries, expected " + to_string(_colours));
            for (auto c : rows[u]) {
                if (c < 0)
                    throw PreconditionViolated("CostMatrix: negative cost in row " + to_string(u));
                _values.push_back(c);
            }
        }
    }

    void CostMatrix::set(Vertex u, Vertex colour, CostValue value)
    {
        if (u >= _rows || colour >= _colours || value < 0)
            throw PreconditionViolated("CostMatrix::set: index out of range or negative cost");
        _values[std::size_t{u} * _colours + colour] = value;
    }

    auto verify_hom(const Digraph & d, const Digraph & h, const vector<Vertex> & map) -> optional<Arc>
    {
        if (map.size() != d.size())
            throw PreconditionViolated("verify_hom: map has " + to_string(map.size()) + " entries but D has " + to_string(d.size()) + " vertices");
        for (auto c : map)
            if (c >= h.size())
                throw PreconditionViolated("verify_hom: map uses colour " + to_string(c) + " outside H");
        for (auto [u, v] : d.arcs())
            if (! h.has_arc(map[u], map[v]))
                return Arc{u, v};
        return nullopt;
    }

    auto cost_of(const CostMatrix & costs, const vector<Vertex> & map) -> CostValue
    {
        CostValue total = 0;
        for (Vertex u = 0; u < map.size(); ++u) {
            auto c = costs.at(u, map[u]);
            if (c == infinite_cost)
                return infinite_cost;
            total = checked_add(total, c, "cost_of");
        }
        return total;
    }

    ThresholdNetwork::ThresholdNetwork(const Digraph & h, const Ordering & ordering, const Digraph & d, const CostMatrix & costs) :
        _p(h.size()),
        _n(d.size()),
        _network(2 + d.size() * (h.size() > 0 ? h.size() - 1 : 0))
    {
        if (_p == 0)
            throw PreconditionViolated("build_network: H is empty");
        if (ordering.size() != _p)
            throw PreconditionViolated("build_network: ordering size does not match H");
        check_dimensions(d, _p, costs, "build_network");
        if (auto violation = check_minmax(h, ordering))
            throw PreconditionViolated("build_network: ordering is not a Min-Max ordering of H");
        if (! slices_are_intervals(h, ordering))
            throw PreconditionViolated("build_network: out-slices of the ordering are not intervals");

        _qplus.assign(_p, 0);
        _rplus.assign(_p, 0);
        for (unsigned i = 1; i <= _p; ++i) {
            for (auto w : h.out_neighbors(ordering[i - 1])) {
                auto pos = ordering.position(w) + 1;
                if (_qplus[i - 1] == 0 || pos < _qplus[i - 1])
                    _qplus[i - 1] = pos;
                _rplus[i - 1] = std::max(_rplus[i - 1], pos);
            }
        }

        unsigned last_q = 0, last_r = 0;
        for (unsigned i = 0; i < _p; ++i) {
            if (_qplus[i] == 0)
                continue;
            if (_qplus[i] < last_q || _rplus[i] < last_r)
                throw InternalInconsistency("build_network: slice bounds are not monotone under a Min-Max ordering");
            last_q = _qplus[i];
            last_r = _rplus[i];
        }

        _chain.assign(std::size_t{_n} * _p, 0);
        CostValue sum_max = 0;
        for (Vertex u = 0; u < _n; ++u) {
            bool has_out = ! d.out_neighbors(u).empty();
            CostValue row_max = 0;
            for (unsigned i = 1; i <= _p; ++i) {
                auto c = costs.at(u, ordering[i - 1]);
                if (has_out && _qplus[i - 1] == 0)
                    c = infinite_cost;
                _chain[std::size_t{u} * _p + (i - 1)] = c;
                if (c != infinite_cost)
                    row_max = std::max(row_max, c);
            }
            sum_max = checked_add(sum_max, row_max, "build_network");
        }
        _big_m = checked_add(sum_max, 1, "build_network");

        for (Vertex u = 0; u < _n; ++u) {
            for (unsigned i = 1; i <= _p; ++i) {
                auto c = chain_cost(u, i);
                add(node(u, i), node(u, i + 1), c == infinite_cost ? _big_m : c, c == infinite_cost);
            }
            for (unsigned i = 2; i < _p; ++i)
                add(node(u, i + 1), node(u, i), _big_m, true);
        }

        for (auto [u, v] : d.arcs())
            for (unsigned i = 1; i <= _p; ++i) {
                if (_qplus[i - 1] == 0)
                    continue;
                if (_qplus[i - 1] != 1)
                    add(node(u, i), node(v, _qplus[i - 1]), _big_m, true);
                if (_rplus[i - 1] + 1 != _p + 1)
                    add(node(v, _rplus[i - 1] + 1), node(u, i + 1), _big_m, true);
            }
    }

    auto ThresholdNetwork::node(Vertex u, unsigned position) const -> unsigned
    {
        if (position == 1)
            return source();
        if (position == _p + 1)
            return sink();
        return 2 + u * (_p - 1) + (position - 2);
    }

    auto ThresholdNetwork::chain_cost(Vertex u, unsigned position) const -> CostValue
    {
        return _chain[std::size_t{u} * _p + (position - 1)];
    }

    void ThresholdNetwork::add(unsigned from, unsigned to, CostValue capacity, bool infinite)
    {
        if (from == to)
            return;
        _arcs.push_back({from, to, capacity, infinite});
        _network.add_edge(from, to, capacity);
    }

    auto ThresholdNetwork::cut_value(const vector<unsigned> & positions) const -> CostValue
    {
        if (positions.size() != _n)
            throw PreconditionViolated("ThresholdNetwork::cut_value: wrong number of positions");
        vector<bool> in_source(_network.node_count(), false);
        in_source[source()] = true;
        for (Vertex u = 0; u < _n; ++u) {
            if (positions[u] < 1 || positions[u] > _p)
                throw PreconditionViolated("ThresholdNetwork::cut_value: position out of range");
            for (unsigned i = 2; i <= positions[u]; ++i)
                in_source[node(u, i)] = true;
        }

        CostValue total = 0;
        for (auto & a : _arcs)
            if (in_source[a.from] && ! in_source[a.to]) {
                if (a.infinite)
                    return infinite_cost;
                total = checked_add(total, a.capacity, "cut_value");
            }
        return total;
    }

    auto solve_minmax(const Digraph & h, const Ordering & ordering, const Digraph & d, const CostMatrix & costs) -> optional<Homomorphism>
    {
        ThresholdNetwork net(h, ordering, d, costs);
        auto flow = net.network().max_flow(net.source(), net.sink(), net.big_m());
        if (flow >= net.big_m())
            return nullopt;

        auto reachable = net.network().residual_reachable(net.source());
        Homomorphism result;
        result.map.resize(d.size());
        for (Vertex u = 0; u < d.size(); ++u) {
            unsigned f = 1;
            for (unsigned i = 2; i <= net.colours(); ++i)
                if (reachable[net.node(u, i)])
                    f = i;
            result.map[u] = ordering[f - 1];
        }

        if (auto bad = verify_hom(d, h, result.map))
            throw InternalInconsistency("solve_minmax: recovered map violates arc (" + to_string(bad->first) + "," + to_string(bad->second) + ")");
        result.cost = cost_of(costs, result.map);
        if (result.cost != flow)
            throw InternalInconsistency("solve_minmax: recovered map costs " + to_string(result.cost) + " but the cut is " + to_string(flow));
        return result;
    }

    auto solve_cycle(unsigned k, const Digraph & d, const CostMatrix & costs) -> optional<Homomorphism>
    {
        if (k < 2)
            throw PreconditionViolated("solve_cycle: k must be at least 2");
        check_dimensions(d, k, costs, "solve_cycle");

        for (Vertex u = 0; u < d.size(); ++u)
            if (d.has_loop(u))
                return nullopt;

        vector<Vertex> label(d.size(), 0);
        vector<bool> seen(d.size(), false);
        Homomorphism result;
        result.map.assign(d.size(), 0);

        for (auto & component : weak_components(d)) {
            auto seed = component.front();
            seen[seed] = true;
            label[seed] = 0;
            vector<Vertex> stack{seed};
            while (! stack.empty()) {
                auto y = stack.back();
                stack.pop_back();
                auto visit = [&](Vertex z, unsigned want) -> bool {
                    if (! seen[z]) {
                        seen[z] = true;
                        label[z] = want;
                        stack.push_back(z);
                        return true;
                    }
                    return label[z] == want;
                };
                for (auto z : d.out_neighbors(y))
                    if (! visit(z, (label[y] + 1) % k))
                        return nullopt;
                for (auto z : d.in_neighbors(y))
                    if (! visit(z, (label[y] + k - 1) % k))
                        return nullopt;
            }

            optional<CostValue> best;
            unsigned best_r = 0;
            for (unsigned r = 0; r < k; ++r) {
                CostValue total = 0;
                for (auto u : component) {
                    auto c = costs.at(u, (label[u] + r) % k);
                    if (c == infinite_cost) {
                        total = infinite_cost;
                        break;
                    }
                    total = checked_add(total, c, "solve_cycle");
                }
                if (total != infinite_cost && (! best || total < *best)) {
                    best = total;
                    best_r = r;
                }
            }
            if (! best)
                return nullopt;
            for (auto u : component)
                result.map[u] = (label[u] + best_r) % k;
            result.cost = checked_add(result.cost, *best, "solve_cycle");
        }

        if (auto bad = verify_hom(d, shapes::directed_cycle(k), result.map))
            throw InternalInconsistency("solve_cycle: propagated labels violate an arc");
        return result;
    }

    namespace
    {
        class Backtracker
        {
        public:
            Backtracker(const Digraph & h, const Digraph & d, const CostMatrix & costs, std::uint64_t budget) :
                _h(h),
                _d(d),
                _costs(costs),
                _budget(budget),
                _map(d.size(), 0),
                _assigned(d.size(), false)
            {
                _order.resize(d.size());
                for (Vertex u = 0; u < d.size(); ++u) {
                    auto & colours = _order[u];
                    for (Vertex c = 0; c < h.size(); ++c)
                        if (costs.is_finite(u, c) && (! d.has_loop(u) || h.has_loop(c)))
                            colours.push_back(c);
                    std::stable_sort(colours.begin(), colours.end(), [&](Vertex a, Vertex b) { return costs.at(u, a) < costs.at(u, b); });
                }
            }

            auto run() -> optional<Homomorphism>
            {
                search(0, 0);
                if (! _best_cost)
                    return nullopt;
                return Homomorphism{_best_map, *_best_cost};
            }

        private:
            const Digraph & _h;
            const Digraph & _d;
            const CostMatrix & _costs;
            std::uint64_t _budget, _nodes = 0;
            vector<vector<Vertex>> _order;
            vector<Vertex> _map;
            vector<bool> _assigned;
            optional<CostValue> _best_cost;
            vector<Vertex> _best_map;

            auto consistent(Vertex u, Vertex c) const -> bool
            {
                for (auto w : _d.out_neighbors(u))
                    if (_assigned[w] && ! _h.has_arc(c, _map[w]))
                        return false;
                for (auto w : _d.in_neighbors(u))
                    if (_assigned[w] && ! _h.has_arc(_map[w], c))
                        return false;
                return true;
            }

            // Sum over unassigned vertices from `from` of their cheapest colour
            // still consistent with assigned neighbours; nullopt on a wipe-out.
            auto lower_bound(Vertex from) const -> optional<CostValue>
            {
                CostValue total = 0;
                for (Vertex u = from; u < _d.size(); ++u) {
                    bool found = false;
                    for (auto c : _order[u])
                        if (consistent(u, c)) {
                            total += _costs.at(u, c);
                            found = true;
                            break;
                        }
                    if (! found)
                        return nullopt;
                }
                return total;
            }

            void search(Vertex u, CostValue so_far)
            {
                if (u == _d.size()) {
                    if (! _best_cost || so_far < *_best_cost) {
                        _best_cost = so_far;
                        _best_map = _map;
                    }
                    return;
                }

                for (auto c : _order[u]) {
                    if (! consistent(u, c))
                        continue;
                    auto here = checked_add(so_far, _costs.at(u, c), "solve_bruteforce");
                    if (_best_cost && here >= *_best_cost)
                        break;
                    if (++_nodes > _budget)
                        throw BudgetExceeded("solve_bruteforce: node budget of " + to_string(_budget) + " exhausted");
                    _map[u] = c;
                    _assigned[u] = true;
                    auto rest = lower_bound(u + 1);
                    if (rest && (! _best_cost || here + *rest < *_best_cost))
                        search(u + 1, here);
                    _assigned[u] = false;
                }
            }
        };
    }

    auto solve_bruteforce(const Digraph & h, const Digraph & d, const CostMatrix & costs, std::uint64_t node_budget) -> optional<Homomorphism>
    {
        check_dimensions(d, h.size(), costs, "solve_bruteforce");
        auto result = Backtracker(h, d, costs, node_budget).run();
        if (result) {
            if (verify_hom(d, h, result->map) || cost_of(costs, result->map) != result->cost)
                throw InternalInconsistency("solve_bruteforce: search produced an invalid assignment");
        }
        return result;
    }

    auto solve(const Digraph & h, const Classification & verdict, const Digraph & d, const CostMatrix & costs) -> SolveOutcome
    {
        check_dimensions(d, h.size(), costs, "solve");

        if (auto cyc = std::get_if<PolynomialCycle>(&verdict)) {
            CostMatrix permuted(d.size(), cyc->k);
            for (Vertex u = 0; u < d.size(); ++u)
                for (unsigned j = 0; j < cyc->k; ++j)
                    permuted.set(u, j, costs.at(u, cyc->cycle[j]));
            auto result = solve_cycle(cyc->k, d, permuted);
            if (result)
                for (auto & c : result->map)
                    c = cyc->cycle[c];
            return result;
        }
        if (auto mm = std::get_if<PolynomialMinMax>(&verdict))
            return solve_minmax(h, mm->ordering, d, costs);
        return NotPolynomial{std::get<NPHard>(verdict).witness};
    }

    auto solve(const Digraph & h, const Digraph & d, const CostMatrix & costs) -> SolveOutcome
    {
        check_dimensions(d, h.size(), costs, "solve");
        return solve(h, classify_wpl(h), d, costs);
    }

    auto random_costs(std::uint64_t seed, unsigned rows, unsigned colours, CostValue max_cost, double infinite_prob) -> CostMatrix
    {
        if (max_cost < 0)
            throw PreconditionViolated("random_costs: max_cost must be non-negative");
        Rng rng(seed);
        CostMatrix result(rows, colours);
        for (Vertex u = 0; u < rows; ++u)
            for (Vertex c = 0; c < colours; ++c) {
                auto value = CostValue(rng.below(std::uint64_t(max_cost) + 1));
                result.set(u, c, rng.chance(infinite_prob) ? infinite_cost : value);
            }
        return result;
    }
}
