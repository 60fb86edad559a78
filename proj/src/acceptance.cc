#include <minhom/acceptance.hh>
#include <minhom/classifier.hh>
#include <minhom/ordering.hh>
#include <minhom/reductions.hh>
#include <minhom/solver.hh>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace minhom
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        constexpr std::uint64_t oracle_budget = 50'000'000;

        auto scaled(double scale, unsigned count) -> unsigned
        {
            return std::max(1u, unsigned(std::lround(scale * count)));
        }

        auto mix(std::uint64_t seed, std::uint64_t salt) -> std::uint64_t
        {
            // splitmix64 finaliser, to derive independent per-sample seeds
            auto z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

        auto with_all_loops(const Graph & g) -> Graph
        {
            auto edges = g.edges();
            for (Vertex v = 0; v < g.size(); ++v)
                edges.emplace_back(v, v);
            return Graph(g.size(), edges);
        }

        // Loopless transitive head and tail around a reflexive band in which
        // vertices within `width` of each other are joined both ways and all
        // other arcs point forward.
        auto band_target(unsigned head, unsigned band, unsigned tail, unsigned width) -> Digraph
        {
            auto n = head + band + tail;
            auto in_band = [&](Vertex v) { return v >= head && v < head + band; };
            vector<Arc> arcs;
            for (Vertex i = 0; i < n; ++i) {
                if (in_band(i))
                    arcs.emplace_back(i, i);
                for (Vertex j = i + 1; j < n; ++j) {
                    arcs.emplace_back(i, j);
                    if (in_band(i) && in_band(j) && j - i <= width)
                        arcs.emplace_back(j, i);
                }
            }
            return Digraph(n, arcs);
        }

        class Suite
        {
        public:
            explicit Suite(const AcceptanceOptions & options) : _o(options) {}

            auto run(unsigned number, string & detail) -> bool
            {
                switch (number) {
                    case 1: return exhaustive_dichotomy(detail);
                    case 2: return sampled_agreement(detail);
                    case 3: return solver_oracle(detail);
                    case 4: return cycle_solver(detail);
                    case 5: return reductions(detail);
                    case 6: return recognition(detail);
                    case 7: return scale_smoke(detail);
                }
                detail = "no such criterion";
                return false;
            }

        private:
            const AcceptanceOptions & _o;
            vector<std::pair<Digraph, Ordering>> _minmax_targets;

            // Classification plus every cross-check shared by criteria 1 and 2.
            auto check_one(const Digraph & h, string & detail) -> std::optional<Classification>
            {
                auto verdict = classify_wpl(h);
                if (! verify_classification(h, verdict)) {
                    detail = "certificate failed to re-verify";
                    return std::nullopt;
                }
                if (is_polynomial(verdict) != classify_via_composition(h)) {
                    detail = "the two characterisations disagree";
                    return std::nullopt;
                }
                if (auto mm = std::get_if<PolynomialMinMax>(&verdict))
                    _minmax_targets.emplace_back(h, mm->ordering);
                return verdict;
            }

            auto exhaustive_dichotomy(string & detail) -> bool
            {
                unsigned count = 0;
                for (unsigned n = 1; n <= 3; ++n)
                    for (auto & h : all_semicomplete_wpl(n)) {
                        ++count;
                        if (! check_one(h, detail)) {
                            detail += " on a digraph with " + std::to_string(n) + " vertices";
                            return false;
                        }
                    }

                using shapes::complete_reflexive, shapes::directed_cycle, shapes::remove_arc, shapes::add_loops;
                Vertex all3[] = {0, 1, 2};
                struct Named
                {
                    const char * name;
                    Digraph h;
                    VerdictKind expected;
                };
                vector<Named> named{
                    {"C_2", directed_cycle(2), VerdictKind::PolynomialCycle},
                    {"C_3", directed_cycle(3), VerdictKind::PolynomialCycle},
                    {"C*_3", add_loops(directed_cycle(3), all3), VerdictKind::NPHard},
                    {"W", shapes::w(), VerdictKind::NPHard},
                    {"R", shapes::r(), VerdictKind::NPHard},
                    {"R'", shapes::r_prime(), VerdictKind::NPHard},
                    {"K*_3", complete_reflexive(3), VerdictKind::PolynomialMinMax},
                    {"K*_3-e", remove_arc(complete_reflexive(3), {0, 1}), VerdictKind::PolynomialMinMax}};
                for (auto & [name, h, expected] : named)
                    if (verdict_kind(classify_wpl(h)) != expected) {
                        detail = string(name) + " classified as " + verdict_name(verdict_kind(classify_wpl(h)));
                        return false;
                    }
                detail = std::to_string(count) + " digraphs agree; 8 named verdicts match";
                return count == 2 + 12 + 216;
            }

            auto sampled_agreement(string & detail) -> bool
            {
                const double sym[] = {0.1, 0.3, 0.6};
                const double loop[] = {0.5, 0.8, 0.95, 1.0};
                auto samples = scaled(_o.scale, 400);
                unsigned polynomial = 0;
                for (unsigned i = 0; i < samples; ++i) {
                    unsigned n = 4 + i % 3;
                    auto h = random_semicomplete_wpl(mix(_o.seed, 2000 + i), n, sym[(i / 3) % 3], loop[(i / 9) % 4]);
                    auto verdict = check_one(h, detail);
                    if (! verdict) {
                        detail += " on sample " + std::to_string(i);
                        return false;
                    }
                    polynomial += is_polynomial(*verdict);
                }
                detail = std::to_string(samples) + " samples agree (" + std::to_string(polynomial) + " polynomial); all certificates re-verify";
                return true;
            }

            auto solver_oracle(string & detail) -> bool
            {
                if (_minmax_targets.empty()) {
                    detail = "no Min-Max targets collected";
                    return false;
                }
                auto required = std::uint64_t(std::ceil(10'000 * _o.scale));
                auto per_target = std::max<std::uint64_t>(scaled(_o.scale, 100), (required + _minmax_targets.size() - 1) / _minmax_targets.size());
                std::uint64_t comparisons = 0, infeasible = 0, salt = 0;
                for (auto & [h, ordering] : _minmax_targets)
                    for (unsigned t = 0; t < per_target; ++t) {
                        auto seed = mix(_o.seed, 3'000'000 + salt++);
                        auto n = unsigned(1 + Rng(seed).below(6));
                        auto d = random_digraph(mix(seed, 1), n, 0.5, 0.2);
                        auto costs = random_costs(mix(seed, 2), n, h.size(), 9, 0.05);
                        auto fast = solve_minmax(h, ordering, d, costs);
                        auto slow = solve_bruteforce(h, d, costs, oracle_budget);
                        ++comparisons;
                        if (fast.has_value() != slow.has_value() || (fast && fast->cost != slow->cost)) {
                            detail = "mismatch on comparison " + std::to_string(comparisons);
                            return false;
                        }
                        infeasible += ! fast;
                    }
                detail = std::to_string(comparisons) + " comparisons over " + std::to_string(_minmax_targets.size()) + " targets ("
                    + std::to_string(infeasible) + " infeasible), required " + std::to_string(required);
                return comparisons >= required;
            }

            auto cycle_solver(string & detail) -> bool
            {
                auto samples = scaled(_o.scale, 500);
                unsigned feasible = 0;
                for (unsigned k = 2; k <= 3; ++k) {
                    auto h = shapes::directed_cycle(k);
                    for (unsigned t = 0; t < samples; ++t) {
                        auto seed = mix(_o.seed, 4'000'000 + 1000 * k + t);
                        Rng rng(seed);
                        auto n = unsigned(1 + rng.below(8));
                        Digraph d;
                        if (t % 2 == 0)
                            d = random_digraph(mix(seed, 1), n, 0.25, 0.05);
                        else {
                            // arcs only between consecutive hidden labels: always feasible
                            vector<unsigned> label(n);
                            for (auto & l : label)
                                l = unsigned(rng.below(k));
                            vector<Arc> arcs;
                            for (Vertex u = 0; u < n; ++u)
                                for (Vertex v = 0; v < n; ++v)
                                    if (label[v] == (label[u] + 1) % k && u != v && rng.chance(0.4))
                                        arcs.emplace_back(u, v);
                            d = Digraph(n, arcs);
                        }
                        auto costs = random_costs(mix(seed, 2), n, k, 9, 0.05);
                        auto fast = solve_cycle(k, d, costs);
                        auto slow = solve_bruteforce(h, d, costs, oracle_budget);
                        if (fast.has_value() != slow.has_value() || (fast && fast->cost != slow->cost)) {
                            detail = "k = " + std::to_string(k) + ": mismatch with the oracle on sample " + std::to_string(t);
                            return false;
                        }
                        if (! fast)
                            continue;
                        ++feasible;

                        CostMatrix rotated(n, k);
                        for (Vertex u = 0; u < n; ++u)
                            for (Vertex i = 0; i < k; ++i)
                                rotated.set(u, (i + 1) % k, costs.at(u, i));
                        auto r = solve_cycle(k, d, rotated);
                        if (! r || r->cost != fast->cost) {
                            detail = "k = " + std::to_string(k) + ": rotating the colours changed the optimum on sample " + std::to_string(t);
                            return false;
                        }

                        auto shifted = costs;
                        auto target = Vertex(rng.below(n));
                        CostValue delta = 1 + CostValue(rng.below(5));
                        for (Vertex i = 0; i < k; ++i)
                            if (costs.is_finite(target, i))
                                shifted.set(target, i, costs.at(target, i) + delta);
                        auto s = solve_cycle(k, d, shifted);
                        if (! s || s->cost != fast->cost + delta) {
                            detail = "k = " + std::to_string(k) + ": a cost shift was not covariant on sample " + std::to_string(t);
                            return false;
                        }
                    }
                }

                for (unsigned len = 3; len <= 9; len += 2)
                    if (solve_cycle(2, shapes::directed_cycle(len), CostMatrix(len, 2))) {
                        detail = "the directed " + std::to_string(len) + "-cycle was coloured by C_2";
                        return false;
                    }
                detail = std::to_string(2 * samples) + " instances match the oracle (" + std::to_string(feasible)
                    + " feasible, rotation and shift checked); odd cycles infeasible for k = 2";
                return true;
            }

            auto check_reduction(const Graph & g, const ReductionInstance & instance, CostValue multiplier, string & detail) -> bool
            {
                auto alpha = mis_bruteforce(g).alpha;
                auto p = CostValue(g.size());
                auto best = solve_bruteforce(instance.h, instance.d, instance.costs, oracle_budget);
                if (! best || best->cost != multiplier * p - alpha) {
                    detail = string(reduction_name(instance.kind)) + " optimum differs from " + std::to_string(multiplier) + "p - alpha on a graph with "
                        + std::to_string(g.size()) + " vertices and " + std::to_string(g.edges().size()) + " edges";
                    return false;
                }
                auto set = extract_independent_set(instance, best->map);
                if (! is_independent(g, set) || CostValue(set.size()) != multiplier * p - best->cost) {
                    detail = string(reduction_name(instance.kind)) + " extraction is not an independent set of the predicted size";
                    return false;
                }
                return true;
            }

            auto reductions(string & detail) -> bool
            {
                vector<Graph> graphs;
                for (unsigned n = 1; n <= 4; ++n)
                    for (auto & g : all_graphs(n, false))
                        graphs.push_back(g);
                auto random_count = scaled(_o.scale, 100);
                for (unsigned i = 0; i < random_count; ++i) {
                    auto seed = mix(_o.seed, 5'000'000 + i);
                    auto n = unsigned(1 + Rng(seed).below(7));
                    graphs.push_back(random_graph(mix(seed, 1), n, 0.4));
                }

                unsigned rprime = 0;
                for (auto & g : graphs)
                    for (bool loop : {false, true}) {
                        if (! check_reduction(g, reduce_mis_rprime(g, loop), 4, detail))
                            return false;
                        ++rprime;
                    }

                std::pair<const char *, Graph> gadget_cases[] = {
                    {"K_2", Graph(2, {{0, 1}})},
                    {"P_3", Graph(3, {{0, 1}, {1, 2}})},
                    {"K_3", Graph(3, {{0, 1}, {1, 2}, {0, 2}})},
                    {"star_3", Graph(4, {{0, 1}, {0, 2}, {0, 3}})}};
                for (auto & [name, g] : gadget_cases)
                    if (! check_reduction(g, reduce_mis_gadget(g), 1, detail)) {
                        detail += " (" + string(name) + ")";
                        return false;
                    }

                for (auto h : {reduce_mis_rprime(Graph(1, {}), false).h, reduce_mis_rprime(Graph(1, {}), true).h, reduce_mis_gadget(Graph(1, {})).h})
                    if (is_polynomial(classify_wpl(h))) {
                        detail = "a reduction target was not classified NP-hard";
                        return false;
                    }

                detail = std::to_string(rprime) + " R' instances and 4 gadget instances match; extracted sets independent";
                return true;
            }

            auto recognition(string & detail) -> bool
            {
                vector<Graph> graphs;
                for (unsigned n = 1; n <= 5; ++n)
                    for (auto & g : all_graphs(n, true))
                        graphs.push_back(g);
                auto exhaustive = graphs.size();
                auto samples = scaled(_o.scale, 2000);
                for (unsigned i = 0; i < samples; ++i) {
                    auto seed = mix(_o.seed, 6'000'000 + i);
                    unsigned n = 6 + i % 2;
                    const double density[] = {0.3, 0.5, 0.7};
                    graphs.push_back(with_all_loops(random_graph(seed, n, density[(i / 2) % 3])));
                }

                unsigned proper = 0;
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    auto & g = graphs[i];
                    auto result = umbrella_ordering(g);
                    auto witness = find_pig_witness(g);
                    if (auto ordering = std::get_if<Ordering>(&result)) {
                        if (witness || check_umbrella(g, *ordering)) {
                            detail = "graph " + std::to_string(i) + ": ordering returned but it fails the check or a witness exists";
                            return false;
                        }
                        ++proper;
                    }
                    else {
                        auto & w = std::get<PigWitness>(result);
                        if (! witness || ! verify_pig_witness(g, w) || ! verify_pig_witness(g, *witness)) {
                            detail = "graph " + std::to_string(i) + ": witness missing or not verified";
                            return false;
                        }
                    }
                }
                detail = std::to_string(graphs.size()) + " reflexive graphs (" + std::to_string(exhaustive) + " exhaustive), "
                    + std::to_string(proper) + " proper interval";
                return true;
            }

            auto scale_smoke(string & detail) -> bool
            {
                auto start = Clock::now();
                auto big = random_semicomplete_wpl(mix(_o.seed, 7'000'000), 100, 0.3, 0.7);
                auto verdict = classify_wpl(big);
                auto wide = band_target(5, 90, 5, 4);
                auto wide_verdict = classify_wpl(wide);
                double classify_seconds = std::chrono::duration<double>(Clock::now() - start).count();
                if (! verify_classification(big, verdict) || ! verify_classification(wide, wide_verdict)) {
                    detail = "a 100-vertex certificate failed to re-verify";
                    return false;
                }
                if (! std::holds_alternative<PolynomialMinMax>(wide_verdict)) {
                    detail = "the 100-vertex band target was not classified Min-Max";
                    return false;
                }

                auto h = band_target(1, 8, 1, 2);
                auto target = classify_wpl(h);
                auto mm = std::get_if<PolynomialMinMax>(&target);
                if (! mm) {
                    detail = "the ten-vertex band target was not classified Min-Max";
                    return false;
                }

                Rng rng(mix(_o.seed, 7'000'001));
                constexpr unsigned n = 2000;
                std::set<Arc> chosen;
                while (chosen.size() < 10'000) {
                    auto u = Vertex(rng.below(n)), v = Vertex(rng.below(n));
                    if (u != v || rng.chance(0.05))
                        chosen.emplace(u, v);
                }
                vector<Arc> d_arcs(chosen.begin(), chosen.end());
                Digraph d(n, d_arcs);
                auto costs = random_costs(mix(_o.seed, 7'000'002), n, 10, 9, 0.05);

                start = Clock::now();
                auto result = solve_minmax(h, mm->ordering, d, costs);
                double solve_seconds = std::chrono::duration<double>(Clock::now() - start).count();
                if (! result) {
                    detail = "the large instance was reported infeasible";
                    return false;
                }

                // Spot-check: six vertices reached from vertex 0, with their arcs.
                VertexSet sub{0};
                for (std::size_t i = 0; i < sub.size() && sub.size() < 6; ++i)
                    for (auto w : d.out_neighbors(sub[i]))
                        if (sub.size() < 6 && std::find(sub.begin(), sub.end(), w) == sub.end())
                            sub.push_back(w);
                auto part = induced(d, sub);
                CostMatrix sub_costs(unsigned(sub.size()), 10);
                for (Vertex u = 0; u < sub.size(); ++u)
                    for (Vertex i = 0; i < 10; ++i)
                        sub_costs.set(u, i, costs.at(sub[u], i));
                auto fast = solve_minmax(h, mm->ordering, part.digraph, sub_costs);
                auto slow = solve_bruteforce(h, part.digraph, sub_costs, oracle_budget);
                if (fast.has_value() != slow.has_value() || (fast && fast->cost != slow->cost)) {
                    detail = "the six-vertex spot-check disagrees with the oracle";
                    return false;
                }

                char buffer[320];
                std::snprintf(buffer, sizeof buffer, "classify two n=100 targets (random %s, band polynomial_minmax) in %.3f s (limit 2 s); solve |V(D)|=%u |A(D)|=%zu p=10 in %.3f s (limit 10 s), cost %lld; spot-check ok",
                    verdict_name(verdict_kind(verdict)).c_str(), classify_seconds, n, d.arc_count(), solve_seconds, static_cast<long long>(result->cost));
                detail = buffer;
                return classify_seconds < 2.0 && solve_seconds < 10.0;
            }
        };
    }

    auto format_result(const CriterionResult & r) -> string
    {
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", r.seconds, r.limit_seconds);
        return "criterion " + std::to_string(r.number) + " (" + r.title + "): " + (r.passed ? "PASS" : "FAIL") + " [" + timing + "] " + r.detail;
    }

    auto run_acceptance(const AcceptanceOptions & options, const std::function<void(const CriterionResult &)> & report) -> vector<CriterionResult>
    {
        const std::pair<const char *, double> criteria[] = {
            {"exhaustive small-H dichotomy", 10},
            {"sampled agreement", 30},
            {"solver-oracle equivalence", 120},
            {"cycle solver", 30},
            {"reduction identities", 300},
            {"recognition completeness", 60},
            {"scale smoke test", 30}};

        Suite suite(options);
        vector<CriterionResult> results;
        for (unsigned i = 0; i < 7; ++i) {
            CriterionResult r{i + 1, criteria[i].first, false, "", 0.0, criteria[i].second};
            auto start = Clock::now();
            try {
                r.passed = suite.run(i + 1, r.detail);
            }
            catch (const std::exception & e) {
                r.passed = false;
                r.detail = string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            if (r.seconds >= r.limit_seconds) {
                r.passed = false;
                r.detail += " (time limit exceeded)";
            }
            if (report)
                report(r);
            results.push_back(r);
        }
        return results;
    }
}
