#include <minhom/cli.hh>
#include <minhom/io.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace minhom;
using std::string;
using std::vector;

namespace
{
    class Scratch
    {
    public:
        Scratch()
        {
            static unsigned counter = 0;
            _dir = std::filesystem::temp_directory_path() / ("minhom_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
            std::filesystem::create_directories(_dir);
        }
        ~Scratch() { std::filesystem::remove_all(_dir); }

        auto write(const string & name, const string & text) -> string
        {
            auto path = (_dir / name).string();
            std::ofstream(path) << text;
            return path;
        }

        auto path(const string & name) -> string { return (_dir / name).string(); }

    private:
        std::filesystem::path _dir;
    };

    struct Outcome
    {
        int code;
        string out, err;
    };

    auto call(vector<string> args) -> Outcome
    {
        std::ostringstream out, err;
        auto code = run(args, out, err);
        return {code, out.str(), err.str()};
    }
}

TEST_CASE("digraph json round trip and validation")
{
    auto h = shapes::r_prime();
    CHECK(digraph_from_json(to_json(h), "x") == h);
    CHECK(digraph_from_json(parse_json(R"({"n": 2, "arcs": [[0,1],[0,1],[1,1]]})", "x"), "x").arc_count() == 2);
    CHECK_THROWS_WITH_AS(digraph_from_json(parse_json(R"({"n": 0, "arcs": []})", "h.json"), "h.json"), "h.json: n: must be at least 1", InputError);
    CHECK_THROWS_WITH_AS(digraph_from_json(parse_json(R"({"n": 2, "arcs": [[0,2]]})", "h.json"), "h.json"),
        "h.json: arcs[0]: vertex out of range for n = 2", InputError);
    CHECK_THROWS_AS(digraph_from_json(parse_json(R"({"arcs": []})", "h.json"), "h.json"), InputError);
    CHECK_THROWS_AS(parse_json("{", "h.json"), InputError);
}

TEST_CASE("cost matrix json uses null for infinity")
{
    auto j = parse_json(R"({"costs": [[1, null], [0, 3]]})", "c.json");
    auto costs = costs_from_json(j, "c.json");
    CHECK(! costs.is_finite(0, 1));
    CHECK(to_json(costs) == j);
    CHECK_THROWS_WITH_AS(costs_from_json(parse_json(R"({"costs": [[1, -2]]})", "c.json"), "c.json"),
        "c.json: costs[0][1]: expected a non-negative integer or null", InputError);
    CHECK_THROWS_AS(costs_from_json(parse_json(R"({"costs": [[1, 2], [3]]})", "c.json"), "c.json"), InputError);
}

TEST_CASE("verdict reports round-trip")
{
    vector<Digraph> targets{shapes::directed_cycle(3), shapes::w(), shapes::r(), shapes::remove_arc(shapes::complete_reflexive(3), {0, 1}),
        Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}), Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}, {3, 0}, {3, 1}, {3, 2}})};
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        targets.push_back(random_semicomplete_wpl(seed, 6, 0.4, 0.8));
    for (auto & h : targets) {
        auto report = make_report(classify_wpl(h));
        auto j = to_json(report);
        auto back = report_from_json(parse_json(dump(j), "r.json"), "r.json");
        CHECK(to_json(back) == j);
        CHECK(verify_classification(h, back.verdict));
    }
}

TEST_CASE("classify command")
{
    Scratch dir;
    auto c3 = dir.write("c3.json", dump(to_json(shapes::directed_cycle(3))));
    auto r = call({"classify", "--h", c3});
    CHECK(r.code == exit_ok);
    auto j = parse_json(r.out, "out");
    CHECK(j["verdict"] == "polynomial_cycle");
    CHECK(j["k"] == 3);

    auto w = dir.write("w.json", R"({"n": 2, "arcs": [[0,1],[1,0],[1,1]]})");
    auto rw = call({"classify", "--h", w});
    CHECK(rw.code == exit_ok);
    auto jw = parse_json(rw.out, "out");
    CHECK(jw["verdict"] == "np_hard");
    CHECK(jw["witness"]["pattern"] == "W");
    CHECK(jw["witness"]["vertices"] == Json::array({0, 1}));
}

TEST_CASE("solve command")
{
    Scratch dir;
    auto h = dir.write("h.json", R"({"n": 2, "arcs": [[0,1]]})");
    auto d = dir.write("d.json", R"({"n": 2, "arcs": [[0,1]]})");
    auto c = dir.write("c.json", R"({"costs": [[5,1],[1,3]]})");
    auto r = call({"solve", "--h", h, "--d", d, "--costs", c});
    CHECK(r.code == exit_ok);
    auto j = parse_json(r.out, "out");
    CHECK(j["status"] == "optimal");
    CHECK(j["cost"] == 8);
    CHECK(j["map"] == Json::array({0, 1}));

    auto oracle = call({"solve", "--h", h, "--d", d, "--costs", c, "--oracle", "--budget", "1000"});
    CHECK(oracle.code == exit_ok);
    CHECK(parse_json(oracle.out, "out")["cost"] == 8);

    auto path = dir.write("p.json", R"({"n": 3, "arcs": [[0,1],[1,2]]})");
    auto c3 = dir.write("c3.json", R"({"costs": [[0,0],[0,0],[0,0]]})");
    auto none = call({"solve", "--h", h, "--d", path, "--costs", c3});
    CHECK(none.code == exit_negative);
    CHECK(parse_json(none.out, "out")["status"] == "infeasible");

    auto w = dir.write("w.json", R"({"n": 2, "arcs": [[0,1],[1,0],[1,1]]})");
    auto hard = call({"solve", "--h", w, "--d", d, "--costs", c});
    CHECK(hard.code == exit_negative);
    CHECK(parse_json(hard.out, "out")["status"] == "np_hard");

    auto bad = dir.write("bad.json", R"({"costs": [[5,1,0],[1,3,0]]})");
    auto mismatch = call({"solve", "--h", h, "--d", d, "--costs", bad});
    CHECK(mismatch.code == exit_usage);
    CHECK(mismatch.err.find(bad) != string::npos);
}

TEST_CASE("order and verify commands")
{
    Scratch dir;
    auto k3e = dir.write("k.json", dump(to_json(shapes::remove_arc(shapes::complete_reflexive(3), {1, 0}))));
    auto out = dir.path("ord.json");
    CHECK(call({"order", "--h", k3e, "--out", out}).code == exit_ok);
    auto v = call({"verify", "--h", k3e, out});
    CHECK(v.code == exit_ok);
    CHECK(parse_json(v.out, "out")["valid"] == true);

    auto wrong = dir.write("wrong.json", R"({"ordering": [1, 0, 2]})");
    CHECK(call({"verify", "--h", k3e, wrong}).code == exit_negative);

    auto c3 = dir.write("c3.json", dump(to_json(shapes::directed_cycle(3))));
    CHECK(call({"order", "--h", c3}).code == exit_negative);
}

TEST_CASE("emitted certificates re-verify")
{
    Scratch dir;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto h = dir.write("h.json", dump(to_json(random_semicomplete_wpl(seed, 5, 0.4, 0.8))));
        auto cert = dir.path("cert.json");
        REQUIRE(call({"classify", "--h", h, "--out", cert}).code == exit_ok);
        CHECK(call({"verify", "--h", h, cert}).code == exit_ok);
    }

    auto h = dir.write("h.json", R"({"n": 2, "arcs": [[0,1]]})");
    auto d = dir.write("d.json", R"({"n": 2, "arcs": [[0,1]]})");
    auto c = dir.write("c.json", R"({"costs": [[5,1],[1,3]]})");
    auto solution = dir.path("s.json");
    REQUIRE(call({"solve", "--h", h, "--d", d, "--costs", c, "--out", solution}).code == exit_ok);
    CHECK(call({"verify", "--h", h, "--d", d, "--costs", c, solution}).code == exit_ok);
    auto lie = dir.write("lie.json", R"({"map": [0, 1], "cost": 7})");
    CHECK(call({"verify", "--h", h, "--d", d, "--costs", c, lie}).code == exit_negative);
    auto broken = dir.write("broken.json", R"({"map": [1, 0]})");
    CHECK(call({"verify", "--h", h, "--d", d, broken}).code == exit_negative);
}

TEST_CASE("reduce and gen commands")
{
    Scratch dir;
    auto g = dir.write("g.json", R"({"n": 2, "edges": [[0,1]]})");
    auto r = call({"reduce", "--lemma", "rprime", "--g", g});
    CHECK(r.code == exit_ok);
    auto j = parse_json(r.out, "out");
    CHECK(j["lemma"] == "rprime");
    CHECK(j["d"]["n"] == 4);
    CHECK(j["costs"].size() == 4);

    auto gadget = parse_json(call({"reduce", "--lemma", "gadget", "--g", g}).out, "out");
    CHECK(gadget["d"]["n"] == 10);
    CHECK(call({"reduce", "--lemma", "nope", "--g", g}).code == exit_usage);

    auto first = call({"gen", "h", "--seed", "4", "--n", "6", "--sym-prob", "0.3", "--loop-prob", "0.5"});
    auto second = call({"gen", "h", "--seed", "4", "--n", "6", "--sym-prob", "0.3", "--loop-prob", "0.5"});
    CHECK(first.code == exit_ok);
    CHECK(first.out == second.out);
    CHECK(is_semicomplete_wpl(digraph_from_json(parse_json(first.out, "out"), "out")));
    CHECK(call({"gen", "d", "--seed", "4", "--n", "6", "--arc-prob", "0.3"}).code == exit_ok);
}

TEST_CASE("usage errors")
{
    CHECK(call({}).code == exit_usage);
    CHECK(call({"frobnicate"}).code == exit_usage);
    CHECK(call({"classify"}).code == exit_usage);
    CHECK(call({"classify", "--h", "/nonexistent/h.json"}).code == exit_usage);
    CHECK(call({"--help"}).code == exit_ok);
}

TEST_CASE("identical inputs give identical bytes")
{
    Scratch dir;
    auto h = dir.write("h.json", dump(to_json(random_semicomplete_wpl(3, 7, 0.4, 0.9))));
    CHECK(call({"classify", "--h", h}).out == call({"classify", "--h", h}).out);
}
