#pragma once

#include <string>

#include "jsonspace/json_value.hpp"
#include "jsonspace/taxonomy.hpp"

namespace jsonspace {

/// One-line classification, e.g.
/// "Tier 2 Minified ≥ 100 < 1000 bytes, numeric, non-redundant, nested".
std::string taxonomy_headline(const TaxonomyReport& report);

/// Human-readable analysis of one document: a Taxonomy section with the
/// headline and category acronyms, a Summary section with the intermediary
/// figures behind the classification, and a Full Analysis section listing
/// every node of the flattened tree.
std::string analysis_text(const JsonValue& document);

/// The same analysis as a single JSON line.
std::string analysis_json(const JsonValue& document);

/// CSV rendering of one histogram. Numeric metrics emit
/// "lower_bound,count" rows, label metrics "label,count".
std::string histogram_csv(const CorpusHistogram& histogram);

}  // namespace jsonspace
