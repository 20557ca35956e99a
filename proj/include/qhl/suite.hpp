#pragma once

#include "qhl/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qhl {

// The acceptance matrix, shared by `qhl suite` and the acceptance binary.

struct SuiteOptions
{
    std::vector<std::string> examples; // empty: the whole corpus
    std::uint64_t seed = 1;
    std::size_t gauges = 10;
};

struct CriterionResult
{
    int number = 0;
    std::string title;
    VerificationReport report;
    double seconds = 0;
};

/// kZ2, kZ4, kS3, H4, k^Z2_omega, k^Z3_omega, H4_F.
const std::vector<std::string>& suite_corpus();

/// Criteria 1-11. Each criterion only touches the selected examples; a
/// criterion with nothing selected is a single Skipped record.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

} // namespace qhl
