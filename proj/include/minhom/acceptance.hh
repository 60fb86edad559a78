#ifndef MINHOM_ACCEPTANCE_HH
#define MINHOM_ACCEPTANCE_HH

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace minhom
{
    struct AcceptanceOptions
    {
        /// Multiplies every sample count (1 = full suite).
        double scale = 1.0;
        std::uint64_t seed = 20240601;
    };

    struct CriterionResult
    {
        unsigned number;
        std::string title;
        bool passed;
        std::string detail;
        double seconds;
        double limit_seconds;
    };

    /// "criterion N (title): PASS|FAIL ..." on one line.
    auto format_result(const CriterionResult & result) -> std::string;

    /// Runs criteria 1..7 in order, reporting each as it finishes.
    auto run_acceptance(const AcceptanceOptions & options, const std::function<void(const CriterionResult &)> & report = {})
        -> std::vector<CriterionResult>;
}

#endif
