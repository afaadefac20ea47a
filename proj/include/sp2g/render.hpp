#pragma once

#include <string>

#include "sp2g/classify.hpp"
#include "sp2g/search.hpp"

namespace sp2g {

// Stable JSON document for a classification report:
// {"strongly_real": bool, "sr_obstruction": vec|null, "sr_witness": [[v,a],...],
//  "totally_orthogonal": bool, "transfers": [{"s": bits, "verdict": str,
//  "arf": 0|1|null}], "gauss_check": bool}
// Vectors are '0'/'1' strings, coordinate 0 first; keys are sorted.
std::string report_to_json(const ClassificationReport& report);

// Human table, with the witness table grouped by conjugating element the way
// the worked examples lay it out.
std::string report_to_table(const ClassificationReport& report);

std::string survey_to_json(const SurveyReport& report);
std::string survey_to_table(const SurveyReport& report);

std::string claims_to_table(const ClaimReport& report);
std::string claims_to_json(const ClaimReport& report);

std::string extraspecial_name(const ExtraspecialKind& kind);

}  // namespace sp2g
