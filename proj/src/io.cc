#include <minhom/io.hh>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        [[noreturn]] auto fail(const string & source, const string & field, const string & problem) -> void
        {
            throw InputError(source + ": " + field + ": " + problem);
        }

        auto member(const Json & j, const string & key, const string & source) -> const Json &
        {
            if (! j.is_object())
                fail(source, "(top level)", "expected a JSON object");
            auto it = j.find(key);
            if (it == j.end())
                fail(source, key, "missing field");
            return *it;
        }

        auto as_unsigned(const Json & j, const string & source, const string & field) -> unsigned
        {
            if (! j.is_number_integer())
                fail(source, field, "expected a non-negative integer");
            auto value = j.get<std::int64_t>();
            if (value < 0 || value > std::int64_t{std::numeric_limits<unsigned>::max()})
                fail(source, field, "integer " + to_string(value) + " out of range");
            return unsigned(value);
        }

        auto vertex_list(const Json & j, const string & source, const string & field) -> VertexSet
        {
            if (! j.is_array())
                fail(source, field, "expected an array of vertices");
            VertexSet result;
            for (std::size_t i = 0; i < j.size(); ++i)
                result.push_back(as_unsigned(j[i], source, field + "[" + to_string(i) + "]"));
            return result;
        }

        auto pair_list(const Json & j, unsigned n, const string & source, const string & field) -> vector<Arc>
        {
            if (! j.is_array())
                fail(source, field, "expected an array of pairs");
            vector<Arc> result;
            for (std::size_t i = 0; i < j.size(); ++i) {
                auto name = field + "[" + to_string(i) + "]";
                if (! j[i].is_array() || j[i].size() != 2)
                    fail(source, name, "expected a pair [u, v]");
                auto u = as_unsigned(j[i][0], source, name);
                auto v = as_unsigned(j[i][1], source, name);
                if (u >= n || v >= n)
                    fail(source, name, "vertex out of range for n = " + to_string(n));
                result.emplace_back(u, v);
            }
            return result;
        }

        auto vertex_count(const Json & j, const string & source) -> unsigned
        {
            auto n = as_unsigned(member(j, "n", source), source, "n");
            if (n == 0)
                fail(source, "n", "must be at least 1");
            return n;
        }

        auto pair_json(const vector<Arc> & pairs) -> Json
        {
            auto result = Json::array();
            for (auto [u, v] : pairs)
                result.push_back({u, v});
            return result;
        }
    }

    auto parse_json(const string & text, const string & source) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw InputError(source + ": not valid JSON: " + e.what());
        }
    }

    auto read_json(const string & path) -> Json
    {
        if (path == "-") {
            string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
            return parse_json(text, "<stdin>");
        }
        std::ifstream in(path);
        if (! in)
            throw InputError(path + ": cannot open file");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_json(buffer.str(), path);
    }

    auto digraph_from_json(const Json & j, const string & source) -> Digraph
    {
        auto n = vertex_count(j, source);
        return Digraph(n, pair_list(member(j, "arcs", source), n, source, "arcs"));
    }

    auto to_json(const Digraph & d) -> Json
    {
        return Json{{"n", d.size()}, {"arcs", pair_json(d.arcs())}};
    }

    auto graph_from_json(const Json & j, const string & source) -> Graph
    {
        auto n = vertex_count(j, source);
        return Graph(n, pair_list(member(j, "edges", source), n, source, "edges"));
    }

    auto to_json(const Graph & g) -> Json
    {
        return Json{{"n", g.size()}, {"edges", pair_json(g.edges())}};
    }

    auto costs_from_json(const Json & j, const string & source) -> CostMatrix
    {
        auto & rows = member(j, "costs", source);
        if (! rows.is_array())
            fail(source, "costs", "expected an array of rows");
        vector<vector<CostValue>> values;
        for (std::size_t u = 0; u < rows.size(); ++u) {
            auto row_name = "costs[" + to_string(u) + "]";
            if (! rows[u].is_array())
                fail(source, row_name, "expected an array of costs");
            if (u > 0 && rows[u].size() != rows[0].size())
                fail(source, row_name, "has " + to_string(rows[u].size()) + " entries, expected " + to_string(rows[0].size()));
            auto & row = values.emplace_back();
            for (std::size_t i = 0; i < rows[u].size(); ++i) {
                auto & entry = rows[u][i];
                auto name = row_name + "[" + to_string(i) + "]";
                if (entry.is_null())
                    row.push_back(infinite_cost);
                else if (! entry.is_number_integer() || entry.get<std::int64_t>() < 0)
                    fail(source, name, "expected a non-negative integer or null");
                else if (entry.get<std::int64_t>() == infinite_cost)
                    fail(source, name, "cost too large; use null for an infinite cost");
                else
                    row.push_back(entry.get<std::int64_t>());
            }
        }
        return CostMatrix(values);
    }

    auto to_json(const CostMatrix & costs) -> Json
    {
        auto rows = Json::array();
        for (Vertex u = 0; u < costs.rows(); ++u) {
            auto row = Json::array();
            for (Vertex i = 0; i < costs.colours(); ++i)
                row.push_back(costs.is_finite(u, i) ? Json(costs.at(u, i)) : Json(nullptr));
            rows.push_back(row);
        }
        return Json{{"costs", rows}};
    }

    auto ordering_from_json(const Json & j, const string & source) -> Ordering
    {
        auto perm = vertex_list(member(j, "ordering", source), source, "ordering");
        try {
            return Ordering(perm);
        }
        catch (const PreconditionViolated &) {
            fail(source, "ordering", "not a permutation of 0..n-1");
        }
    }

    auto to_json(const Ordering & ordering) -> Json
    {
        return Json{{"ordering", ordering.vertices()}};
    }

    auto witness_from_json(const Json & j, const string & source) -> HardnessWitness
    {
        auto & type = member(j, "type", source);
        if (! type.is_string())
            fail(source, "witness.type", "expected a string");
        auto t = type.get<string>();
        if (t == "pattern") {
            auto & name = member(j, "pattern", source);
            auto kind = name.is_string() ? pattern_from_name(name.get<string>()) : std::nullopt;
            if (! kind)
                fail(source, "witness.pattern", "unknown pattern");
            auto vertices = vertex_list(member(j, "vertices", source), source, "witness.vertices");
            auto & mask = member(j, "loop_mask", source);
            if (! mask.is_array() || mask.size() != vertices.size())
                fail(source, "witness.loop_mask", "expected one boolean per vertex");
            vector<bool> loops;
            for (auto & b : mask) {
                if (! b.is_boolean())
                    fail(source, "witness.loop_mask", "expected booleans");
                loops.push_back(b.get<bool>());
            }
            return PatternHit{*kind, vertices, loops};
        }
        if (t == "pig") {
            auto & name = member(j, "kind", source);
            auto kind = name.is_string() ? pig_from_name(name.get<string>()) : std::nullopt;
            if (! kind)
                fail(source, "witness.kind", "unknown forbidden subgraph");
            return LoopPartPigWitness{PigWitness{*kind, vertex_list(member(j, "vertices", source), source, "witness.vertices")}};
        }
        if (t == "loopless_cycle_not_ck")
            return LooplessCycleNotCk{vertex_list(member(j, "cycle", source), source, "witness.cycle"),
                vertex_list(member(j, "extra", source), source, "witness.extra")};
        if (t == "loopless_cycle_with_loop")
            return LWithCycleCoexistence{vertex_list(member(j, "cycle", source), source, "witness.cycle"),
                as_unsigned(member(j, "loop_vertex", source), source, "witness.loop_vertex")};
        fail(source, "witness.type", "unknown witness type '" + t + "'");
    }

    auto to_json(const HardnessWitness & witness) -> Json
    {
        if (auto hit = std::get_if<PatternHit>(&witness)) {
            auto mask = Json::array();
            for (bool b : hit->loop_mask)
                mask.push_back(b);
            return Json{{"type", "pattern"}, {"pattern", string(pattern_name(hit->kind))}, {"vertices", hit->vertices}, {"loop_mask", mask}};
        }
        if (auto pig = std::get_if<LoopPartPigWitness>(&witness))
            return Json{{"type", "pig"}, {"kind", string(pig_name(pig->witness.kind))}, {"vertices", pig->witness.vertices}};
        if (auto c = std::get_if<LooplessCycleNotCk>(&witness))
            return Json{{"type", "loopless_cycle_not_ck"}, {"cycle", c->cycle}, {"extra", c->extra}};
        auto & c = std::get<LWithCycleCoexistence>(witness);
        return Json{{"type", "loopless_cycle_with_loop"}, {"cycle", c.cycle}, {"loop_vertex", c.loop_vertex}};
    }

    auto make_report(const Classification & verdict) -> VerdictReport
    {
        return VerdictReport{verdict, explain(verdict)};
    }

    auto report_from_json(const Json & j, const string & source) -> VerdictReport
    {
        auto & kind = member(j, "verdict", source);
        if (! kind.is_string())
            fail(source, "verdict", "expected a string");
        auto name = kind.get<string>();
        auto & reason = member(j, "reason", source);
        if (! reason.is_string())
            fail(source, "reason", "expected a string");

        optional<Classification> verdict;
        if (name == verdict_name(VerdictKind::PolynomialCycle)) {
            auto cycle = vertex_list(member(j, "cycle", source), source, "cycle");
            auto k = as_unsigned(member(j, "k", source), source, "k");
            if (k != cycle.size())
                fail(source, "k", "does not match the cycle length");
            verdict = PolynomialCycle{k, cycle};
        }
        else if (name == verdict_name(VerdictKind::PolynomialMinMax))
            verdict = PolynomialMinMax{ordering_from_json(j, source)};
        else if (name == verdict_name(VerdictKind::NPHard))
            verdict = NPHard{witness_from_json(member(j, "witness", source), source)};
        else
            fail(source, "verdict", "unknown verdict '" + name + "'");
        return VerdictReport{*verdict, reason.get<string>()};
    }

    auto to_json(const VerdictReport & report) -> Json
    {
        Json result{{"verdict", verdict_name(verdict_kind(report.verdict))}, {"reason", report.reason}};
        if (auto cyc = std::get_if<PolynomialCycle>(&report.verdict)) {
            result["k"] = cyc->k;
            result["cycle"] = cyc->cycle;
        }
        else if (auto mm = std::get_if<PolynomialMinMax>(&report.verdict))
            result["ordering"] = mm->ordering.vertices();
        else
            result["witness"] = to_json(std::get<NPHard>(report.verdict).witness);
        return result;
    }

    auto to_json(const optional<Homomorphism> & result) -> Json
    {
        if (! result)
            return Json{{"status", "infeasible"}};
        return Json{{"status", "optimal"}, {"cost", result->cost}, {"map", result->map}};
    }

    auto to_json(const ReductionInstance & instance) -> Json
    {
        auto origin = Json::array();
        for (auto & o : instance.vertex_origin) {
            Json entry{{"role", o.role}, {"graph_vertex", o.graph_vertex}};
            if (o.edge)
                entry["edge"] = *o.edge;
            origin.push_back(entry);
        }
        return Json{{"lemma", reduction_name(instance.kind)}, {"h", to_json(instance.h)}, {"d", to_json(instance.d)},
            {"costs", to_json(instance.costs)["costs"]}, {"graph_size", instance.graph_size}, {"vertex_origin", origin}};
    }

    auto dump(const Json & j) -> string
    {
        return j.dump(2) + "\n";
    }
}
