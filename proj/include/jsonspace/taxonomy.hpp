#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jsonspace/json_value.hpp"
#include "jsonspace/nodes.hpp"

namespace jsonspace {

// Category thresholds, all on minified byte counts or percentages.
inline constexpr std::uint64_t kTier2MinBytes = 100;
inline constexpr std::uint64_t kTier3MinBytes = 1000;
inline constexpr double kRedundantThresholdPct = 25.0;
inline constexpr int kNestedThreshold = 10;

enum class SizeTier { Tier1, Tier2, Tier3 };

/// Short name, e.g. "Tier 2".
std::string_view tier_name(SizeTier tier);
/// Descriptive name, e.g. "Tier 2 Minified ≥ 100 < 1000 bytes" (UTF-8).
std::string_view tier_description(SizeTier tier);

SizeTier size_tier(std::uint64_t minified_bytes);

enum class ContentClass { Textual, Numeric, Boolean };

std::string_view content_class_name(ContentClass c);

/// Count, byte volume and resulting weight for one scalar content class.
struct ClassTally {
  std::uint64_t count = 0;   // scalar values of this class
  std::uint64_t bytes = 0;   // their minified bytes (strings incl. quotes)
  double weight = 0.0;       // see content_weights
};

/// Per-class content weights of one document.
///
/// weight = ((count * 100 / total_nodes) * (bytes * 100 / document_bytes))
///          / 100
///
/// total_nodes counts every node of the flattened tree including the root
/// and the structural nodes; document_bytes is the full minified size. The
/// three weights therefore do not sum to 100; they are prevalence scores,
/// not shares.
struct ContentWeights {
  std::uint64_t total_nodes = 0;
  std::uint64_t document_bytes = 0;
  ClassTally textual;
  ClassTally numeric;
  ClassTally boolean_like;  // true / false / null
};

ContentWeights content_weights(const JsonValue& document);
ContentWeights content_weights(const std::vector<DocumentNode>& nodes);

/// Dominant content classes: every class whose weight equals the maximum.
/// All-zero weights qualify every class. Result is in canonical order
/// (textual, numeric, boolean) and never empty.
std::vector<ContentClass> content_qualifiers(const ContentWeights& weights);

/// Duplicate-value share of the flattened tree.
struct RedundancyStats {
  std::uint64_t total_nodes = 0;
  std::uint64_t unique_nodes = 0;
  double percentage = 0.0;  // (total - unique) * 100 / total
};

RedundancyStats redundancy(const JsonValue& document);
RedundancyStats redundancy(const std::vector<DocumentNode>& nodes);

/// Depth/width profile of one document.
struct NestingProfile {
  int height = 0;  // edges on the longest root-to-leaf path
  /// Scalar bytes aggregated per level (level -> bytes), root level = 1.
  /// Levels holding no scalars are absent.
  std::map<int, std::uint64_t> level_bytes;
  /// Level below the root carrying the most scalar bytes; ties resolve to
  /// the smallest level. Absent when no level >= 2 holds scalars.
  std::optional<int> largest_level;
  /// height * (largest_level - 1); 0 when largest_level is absent.
  int weight = 0;
};

NestingProfile nesting_profile(const JsonValue& document);
NestingProfile nesting_profile(const std::vector<DocumentNode>& nodes);

/// Complete classification of one document.
struct TaxonomyReport {
  std::uint64_t minified_bytes = 0;
  SizeTier tier = SizeTier::Tier1;
  ContentWeights weights;
  std::vector<ContentClass> qualifiers;
  RedundancyStats redundancy;
  bool redundant = false;  // redundancy.percentage >= 25
  NestingProfile nesting;
  bool nested = false;     // nesting.weight >= 10
  /// One acronym per qualifier, e.g. "Tier 2 NNN"; canonical class order.
  std::vector<std::string> categories;
};

/// Category acronym, e.g. "Tier 3 TRN" (tier, content letter, R/N, F/N).
std::string category_acronym(SizeTier tier, ContentClass c, bool redundant,
                             bool nested);

TaxonomyReport classify(const JsonValue& document);

/// Corpus-level distribution of one metric as a histogram. Numeric metrics
/// use fixed-width bins labeled by their inclusive lower bound; label
/// metrics use one bin per label.
struct CorpusHistogram {
  std::string metric;     // "byte_size", "redundancy", "nesting",
                          // "content_type", "category"
  double bin_width = 0;   // 0 for label metrics
  std::vector<std::pair<std::string, std::uint64_t>> bins;
};

/// Histograms over a corpus of per-document reports:
///   byte_size    width 100, contiguous from 0, empty bins included
///   redundancy   width 2.5 over the full 0..100 range (40 bins)
///   nesting      width 5, contiguous from 0, empty bins included
///   content_type one bin per qualifier set, multi-class sets joined by "+"
///   category     one bin per category set, joined by "+", sorted labels
/// Every document lands in exactly one bin per histogram, so each
/// histogram's counts sum to the corpus size.
std::vector<CorpusHistogram> corpus_histograms(
    const std::vector<TaxonomyReport>& reports);

}  // namespace jsonspace
