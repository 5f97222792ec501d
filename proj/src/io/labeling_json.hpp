#pragma once

#include <string>
#include <utility>

#include "core/labeling.hpp"
#include "core/params.hpp"

namespace ebi {

// JSON document for a labeling:
//
//   {
//     "m": 5, "n": 4, "q": 1, "r": 1,
//     "rows": ["1100", "0110", "1010", "1100", "0110"],
//     "summary": { ... }
//   }
//
// rows[k] is flat A-vertex row k+1 (blocks in order, star rows last); the
// c-th character is the label on the edge to u_{c+1}. The summary block is
// derived data: written when requested, ignored and recomputed on load.
std::string serialize_labeling(const GraphParams& params, const EdgeLabeling& lab,
                               bool include_summary = true);

// Parses and validates a document produced by serialize_labeling. Malformed
// JSON, missing fields, inconsistent q/r, bad row strings, and unbalanced
// labelings all raise ErrorCode::parse_error.
std::pair<GraphParams, EdgeLabeling> parse_labeling(const std::string& text);

}  // namespace ebi
