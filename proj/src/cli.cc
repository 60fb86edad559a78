#include <minhom/acceptance.hh>
#include <minhom/cli.hh>
#include <minhom/io.hh>
#include <minhom/ordering.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace minhom
{
    namespace
    {
        struct Options
        {
            string h, d, costs, g, lemma, out, kind = "h", certificate;
            std::uint64_t seed = 1, budget = 10'000'000;
            unsigned n = 5;
            double sym_prob = 0.5, loop_prob = 0.5, arc_prob = 0.5, scale = 0.1;
            bool oracle = false, loop = false;
        };

        class Command
        {
        public:
            Command(const Options & options, ostream & out, ostream & err) : _o(options), _out(out), _err(err) {}

            auto classify() -> int
            {
                auto h = load_h();
                auto verdict = classify_wpl(h);
                if (! verify_classification(h, verdict)) {
                    _err << "minhom: the computed certificate failed re-verification\n";
                    return exit_internal;
                }
                emit(to_json(make_report(verdict)));
                return exit_ok;
            }

            auto solve() -> int
            {
                auto h = load_h();
                auto d = digraph_from_json(read_json(required(_o.d, "--d")), _o.d);
                auto costs = costs_from_json(read_json(required(_o.costs, "--costs")), _o.costs);
                if (costs.rows() != d.size())
                    throw InputError(_o.costs + ": costs: has " + std::to_string(costs.rows()) + " rows but D has " + std::to_string(d.size()) + " vertices");
                if (costs.colours() != h.size())
                    throw InputError(_o.costs + ": costs[0]: has " + std::to_string(costs.colours()) + " entries but H has " + std::to_string(h.size()) + " vertices");

                if (_o.oracle) {
                    try {
                        return emit_solution(solve_bruteforce(h, d, costs, _o.budget), "bruteforce");
                    }
                    catch (const BudgetExceeded & e) {
                        emit(Json{{"status", "budget_exceeded"}, {"budget", _o.budget}});
                        _err << "minhom: " << e.what() << "\n";
                        return exit_negative;
                    }
                }

                auto verdict = classify_wpl(h);
                auto outcome = minhom::solve(h, verdict, d, costs);
                if (auto hard = std::get_if<NotPolynomial>(&outcome)) {
                    emit(Json{{"status", "np_hard"}, {"verdict", to_json(make_report(NPHard{hard->witness}))}});
                    return exit_negative;
                }
                auto solver = std::holds_alternative<PolynomialCycle>(verdict) ? "cycle" : "minmax";
                return emit_solution(std::get<optional<Homomorphism>>(outcome), solver);
            }

            auto order() -> int
            {
                auto h = load_h();
                auto verdict = classify_wpl(h);
                if (auto mm = std::get_if<PolynomialMinMax>(&verdict)) {
                    if (check_minmax(h, mm->ordering) || ! slices_are_intervals(h, mm->ordering)) {
                        _err << "minhom: the constructed ordering failed re-verification\n";
                        return exit_internal;
                    }
                    emit(to_json(mm->ordering));
                    return exit_ok;
                }
                emit(Json{{"status", "no_ordering"}, {"verdict", to_json(make_report(verdict))}});
                return exit_negative;
            }

            auto verify() -> int
            {
                auto h = load_h();
                auto cert = read_json(_o.certificate);
                auto & source = _o.certificate;
                bool valid = false;
                string detail;

                if (cert.is_object() && cert.contains("verdict")) {
                    auto report = report_from_json(cert, source);
                    valid = verify_classification(h, report.verdict);
                    detail = valid ? "certificate re-verifies" : "certificate does not hold in H";
                }
                else if (cert.is_object() && cert.contains("ordering")) {
                    auto ordering = ordering_from_json(cert, source);
                    if (ordering.size() != h.size())
                        detail = "ordering does not cover the vertices of H";
                    else if (auto bad = check_minmax(h, ordering))
                        detail = "not a Min-Max ordering: pair (" + std::to_string(bad->absent.first) + "," + std::to_string(bad->absent.second) + ") is missing";
                    else if (! slices_are_intervals(h, ordering))
                        detail = "Min-Max ordering, but some out-slice is not an interval";
                    else {
                        valid = true;
                        detail = "Min-Max ordering with interval out-slices";
                    }
                }
                else if (cert.is_object() && cert.contains("map")) {
                    auto d = digraph_from_json(read_json(required(_o.d, "--d")), _o.d);
                    auto & entries = cert["map"];
                    if (! entries.is_array())
                        throw InputError(source + ": map: expected an array of colours");
                    vector<Vertex> map;
                    for (std::size_t i = 0; i < entries.size(); ++i) {
                        if (! entries[i].is_number_unsigned())
                            throw InputError(source + ": map[" + std::to_string(i) + "]: expected a non-negative integer");
                        map.push_back(entries[i].get<Vertex>());
                    }
                    if (map.size() != d.size())
                        throw InputError(source + ": map: has " + std::to_string(map.size()) + " entries but D has " + std::to_string(d.size()) + " vertices");
                    for (std::size_t i = 0; i < map.size(); ++i)
                        if (map[i] >= h.size())
                            throw InputError(source + ": map[" + std::to_string(i) + "]: colour out of range for H");
                    if (auto bad = verify_hom(d, h, map))
                        detail = "arc (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ") is not preserved";
                    else if (! _o.costs.empty() && cert.contains("cost")) {
                        auto costs = costs_from_json(read_json(_o.costs), _o.costs);
                        if (costs.rows() != d.size() || costs.colours() != h.size())
                            throw InputError(_o.costs + ": costs: dimensions do not match D and H");
                        auto actual = cost_of(costs, map);
                        valid = cert["cost"].is_number_integer() && actual == cert["cost"].get<CostValue>();
                        detail = valid ? "homomorphism with the stated cost" : "homomorphism, but the stated cost is wrong";
                    }
                    else {
                        valid = true;
                        detail = "homomorphism";
                    }
                }
                else
                    throw InputError(source + ": (top level): expected a verdict, ordering or map certificate");

                emit(Json{{"valid", valid}, {"detail", detail}});
                return valid ? exit_ok : exit_negative;
            }

            auto reduce() -> int
            {
                auto kind = reduction_from_name(_o.lemma);
                if (! kind)
                    throw InputError("--lemma: expected rprime or gadget, got '" + _o.lemma + "'");
                auto g = graph_from_json(read_json(required(_o.g, "--g")), _o.g);
                if (g.has_any_loop())
                    throw InputError(_o.g + ": edges: the graph must not have loops");
                auto instance = *kind == ReductionKind::RPrime ? reduce_mis_rprime(g, _o.loop) : reduce_mis_gadget(g);
                emit(to_json(instance));
                return exit_ok;
            }

            auto gen() -> int
            {
                if (_o.n == 0)
                    throw InputError("--n: must be at least 1");
                if (_o.kind == "h")
                    emit(to_json(random_semicomplete_wpl(_o.seed, _o.n, _o.sym_prob, _o.loop_prob)));
                else if (_o.kind == "d")
                    emit(to_json(random_digraph(_o.seed, _o.n, _o.arc_prob, _o.loop_prob)));
                else
                    throw InputError("gen: kind must be h or d, got '" + _o.kind + "'");
                return exit_ok;
            }

            auto selftest() -> int
            {
                AcceptanceOptions options;
                options.scale = _o.scale;
                options.seed = _o.seed;
                bool all = true;
                run_acceptance(options, [&](const CriterionResult & r) {
                    _out << format_result(r) << "\n";
                    _out.flush();
                    all = all && r.passed;
                });
                return all ? exit_ok : exit_internal;
            }

        private:
            const Options & _o;
            ostream & _out;
            ostream & _err;

            auto required(const string & value, const string & flag) -> const string &
            {
                if (value.empty())
                    throw CLI::RequiredError(flag);
                return value;
            }

            auto load_h() -> Digraph
            {
                return digraph_from_json(read_json(required(_o.h, "--h")), _o.h);
            }

            void emit(const Json & j)
            {
                if (_o.out.empty() || _o.out == "-") {
                    _out << dump(j);
                    return;
                }
                std::ofstream file(_o.out);
                if (! file)
                    throw InputError(_o.out + ": cannot open for writing");
                file << dump(j);
            }

            auto emit_solution(const optional<Homomorphism> & result, const char * solver) -> int
            {
                auto j = to_json(result);
                j["solver"] = solver;
                emit(j);
                return result ? exit_ok : exit_negative;
            }
        };
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        Options o;
        CLI::App app{"Minimum cost homomorphism dichotomy for semicomplete digraphs with possible loops", "minhom"};
        app.require_subcommand(1);
        app.set_help_flag("--help", "print this help and exit");

        auto add_h = [&](CLI::App * sub) { sub->set_help_flag("--help", "print this help and exit"); sub->add_option("--h", o.h, "target digraph H (JSON, - for stdin)")->required(); };
        auto add_out = [&](CLI::App * sub) { sub->add_option("--out", o.out, "write the result here instead of stdout"); };

        auto classify = app.add_subcommand("classify", "decide the complexity of MinHOM(H) and print a certificate");
        add_h(classify);
        add_out(classify);

        auto solve = app.add_subcommand("solve", "solve one MinHOM(H) instance exactly");
        add_h(solve);
        solve->add_option("--d", o.d, "input digraph D")->required();
        solve->add_option("--costs", o.costs, "cost matrix")->required();
        solve->add_flag("--oracle", o.oracle, "use exhaustive search regardless of the verdict");
        solve->add_option("--budget", o.budget, "node budget for --oracle");
        add_out(solve);

        auto order = app.add_subcommand("order", "print a Min-Max ordering of H");
        add_h(order);
        add_out(order);

        auto verify = app.add_subcommand("verify", "check a verdict, ordering or homomorphism file against H");
        add_h(verify);
        verify->add_option("certificate", o.certificate, "certificate file")->required();
        verify->add_option("--d", o.d, "input digraph D, for homomorphism certificates");
        verify->add_option("--costs", o.costs, "cost matrix, to check a stated cost");
        add_out(verify);

        auto reduce = app.add_subcommand("reduce", "build an independent-set reduction instance");
        reduce->add_option("--lemma", o.lemma, "rprime or gadget")->required();
        reduce->add_option("--g", o.g, "undirected graph G")->required();
        reduce->add_flag("--loop", o.loop, "rprime only: give the target a loop at vertex 0");
        add_out(reduce);

        auto gen = app.add_subcommand("gen", "generate a seeded random H or D");
        gen->add_option("kind", o.kind, "h (semicomplete with possible loops) or d (arbitrary digraph)");
        gen->add_option("--seed", o.seed);
        gen->add_option("--n", o.n);
        gen->add_option("--sym-prob", o.sym_prob, "h: probability a pair is joined both ways")->check(CLI::Range(0.0, 1.0));
        gen->add_option("--arc-prob", o.arc_prob, "d: probability of each arc")->check(CLI::Range(0.0, 1.0));
        gen->add_option("--loop-prob", o.loop_prob, "probability of each loop")->check(CLI::Range(0.0, 1.0));
        add_out(gen);

        auto selftest = app.add_subcommand("selftest", "run the acceptance criteria at reduced scale");
        selftest->add_option("--scale", o.scale, "fraction of the full sample counts")->check(CLI::Range(0.0, 1.0));
        selftest->add_option("--seed", o.seed);

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        Command command(o, out, err);
        try {
            if (classify->parsed())
                return command.classify();
            if (solve->parsed())
                return command.solve();
            if (order->parsed())
                return command.order();
            if (verify->parsed())
                return command.verify();
            if (reduce->parsed())
                return command.reduce();
            if (gen->parsed())
                return command.gen();
            if (selftest->parsed())
                return command.selftest();
        }
        catch (const InternalInconsistency & e) {
            err << "minhom: internal error: " << e.what() << "\n";
            return exit_internal;
        }
        catch (const InputError & e) {
            err << "minhom: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const PreconditionViolated & e) {
            err << "minhom: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const CLI::Error & e) {
            err << "minhom: missing " << e.what() << "\n";
            return exit_usage;
        }
        catch (const Json::exception & e) {
            err << "minhom: malformed JSON content: " << e.what() << "\n";
            return exit_usage;
        }
        return exit_usage;
    }
}
