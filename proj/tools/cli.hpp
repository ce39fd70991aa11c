#pragma once

#include <string>
#include <vector>

#include "granred/reduction.hpp"
#include "json.hpp"

namespace granred::cli {

/// JSON form of a reduction trace: keys reduct (attribute names in
/// selection order), gh_full, rounds, minimality_enforced, params (echo of
/// the run's inputs). Key order is fixed so re-emission is byte-identical.
nlohmann::ordered_json reduct_report_json(
    const ReductTrace& trace, const std::vector<std::string>& attribute_names,
    const nlohmann::ordered_json& params);

/// Entry point behind main(): parses argv, dispatches the subcommand, maps
/// errors to exit codes (0 ok, 1 runtime failure, 2 bad configuration).
int run(int argc, const char* const* argv);

}  // namespace granred::cli
