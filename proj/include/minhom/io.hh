#ifndef MINHOM_IO_HH
#define MINHOM_IO_HH

#include <minhom/classifier.hh>
#include <minhom/core.hh>
#include <minhom/reductions.hh>
#include <minhom/solver.hh>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace minhom
{
    using Json = nlohmann::json;

    /// Malformed input; the message names the source and the field.
    class InputError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Reads a JSON document from `path`, or from stdin when path is "-".
    auto read_json(const std::string & path) -> Json;
    /// Parses JSON text; `source` only labels error messages.
    auto parse_json(const std::string & text, const std::string & source) -> Json;

    /// {"n": N, "arcs": [[u, v], ...]}; repeated arcs are merged.
    auto digraph_from_json(const Json & j, const std::string & source) -> Digraph;
    auto to_json(const Digraph & d) -> Json;

    /// {"n": N, "edges": [[u, v], ...]}.
    auto graph_from_json(const Json & j, const std::string & source) -> Graph;
    auto to_json(const Graph & g) -> Json;

    /// {"costs": [[...], ...]}, null standing for an infinite cost.
    auto costs_from_json(const Json & j, const std::string & source) -> CostMatrix;
    auto to_json(const CostMatrix & costs) -> Json;

    /// {"ordering": [v, ...]}.
    auto ordering_from_json(const Json & j, const std::string & source) -> Ordering;
    auto to_json(const Ordering & ordering) -> Json;

    auto witness_from_json(const Json & j, const std::string & source) -> HardnessWitness;
    auto to_json(const HardnessWitness & witness) -> Json;

    /// A classification with its explanation.
    struct VerdictReport
    {
        Classification verdict;
        std::string reason;
    };

    auto make_report(const Classification & verdict) -> VerdictReport;
    auto report_from_json(const Json & j, const std::string & source) -> VerdictReport;
    auto to_json(const VerdictReport & report) -> Json;

    /// {"status": "optimal", "cost": C, "map": [...]} or {"status": "infeasible"}.
    auto to_json(const std::optional<Homomorphism> & result) -> Json;
    auto to_json(const ReductionInstance & instance) -> Json;

    /// Serialises with two-space indentation and a trailing newline.
    auto dump(const Json & j) -> std::string;
}

#endif
