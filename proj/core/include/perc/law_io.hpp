#pragma once

#include <iosfwd>
#include <string>

#include "perc/domination.hpp"
#include "perc/local_law.hpp"

namespace perc {

// JSON law document: {"dim": d, "probs": [...2^(2d) entries...],
// "ordering": "+x,-x,+y,-y,..."}. The ordering string is informative and
// validated against the canonical direction order on read.
std::string law_to_json(const LocalLaw& law);
LocalLaw law_from_json(const std::string& text);

// Compact CSV: header "mask,probability", one row per support mask; missing
// masks read as 0. Probabilities print with enough digits to round-trip.
// CSV carries no dimension, so reading one requires it.
std::string law_to_csv(const LocalLaw& law);
LocalLaw law_from_csv(const std::string& text, int dim);

// Dispatch on extension: .json or .csv. dim_hint is required for CSV and
// cross-checked against JSON when nonnegative.
LocalLaw load_law_file(const std::string& path, int dim_hint = -1);
void save_law_file(const LocalLaw& law, const std::string& path);

std::string domination_report_to_json(const DominationReport& report, int dim);
std::string pairwise_report_to_json(const PairwiseReport& report, int dim);
std::string stochastic_result_to_json(const StochasticResult& result, int dim);

}  // namespace perc
