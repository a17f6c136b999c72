#include "jsonspace/taxonomy.hpp"

#include <algorithm>
#include <cassert>

#include "jsonspace/render.hpp"

namespace jsonspace {

std::string_view tier_name(SizeTier tier) {
  switch (tier) {
    case SizeTier::Tier1:
      return "Tier 1";
    case SizeTier::Tier2:
      return "Tier 2";
    case SizeTier::Tier3:
      return "Tier 3";
  }
  return "Tier 1";
}

std::string_view tier_description(SizeTier tier) {
  switch (tier) {
    case SizeTier::Tier1:
      return "Tier 1 Minified < 100 bytes";
    case SizeTier::Tier2:
      return "Tier 2 Minified ≥ 100 < 1000 bytes";
    case SizeTier::Tier3:
      return "Tier 3 Minified ≥ 1000 bytes";
  }
  return "";
}

SizeTier size_tier(std::uint64_t minified_bytes) {
  if (minified_bytes < kTier2MinBytes) return SizeTier::Tier1;
  if (minified_bytes < kTier3MinBytes) return SizeTier::Tier2;
  return SizeTier::Tier3;
}

std::string_view content_class_name(ContentClass c) {
  switch (c) {
    case ContentClass::Textual:
      return "textual";
    case ContentClass::Numeric:
      return "numeric";
    case ContentClass::Boolean:
      return "boolean";
  }
  return "";
}

ContentWeights content_weights(const std::vector<DocumentNode>& nodes) {
  ContentWeights w;
  w.total_nodes = nodes.size();
  w.document_bytes = nodes.empty() ? 0 : nodes.front().byte_size;
  for (const auto& node : nodes) {
    switch (node.kind) {
      case NodeKind::Textual:
        ++w.textual.count;
        w.textual.bytes += node.byte_size;
        break;
      case NodeKind::Numeric:
        ++w.numeric.count;
        w.numeric.bytes += node.byte_size;
        break;
      case NodeKind::Boolean:
        ++w.boolean_like.count;
        w.boolean_like.bytes += node.byte_size;
        break;
      case NodeKind::Structural:
        break;
    }
  }
  auto weigh = [&](ClassTally& tally) {
    if (w.total_nodes == 0 || w.document_bytes == 0) {
      tally.weight = 0.0;
      return;
    }
    double count_share =
        static_cast<double>(tally.count) * 100.0 / static_cast<double>(w.total_nodes);
    double byte_share = static_cast<double>(tally.bytes) * 100.0 /
                        static_cast<double>(w.document_bytes);
    tally.weight = count_share * byte_share / 100.0;
  };
  weigh(w.textual);
  weigh(w.numeric);
  weigh(w.boolean_like);
  return w;
}

ContentWeights content_weights(const JsonValue& document) {
  return content_weights(enumerate_nodes(document));
}

std::vector<ContentClass> content_qualifiers(const ContentWeights& weights) {
  double top = std::max(
      {weights.textual.weight, weights.numeric.weight, weights.boolean_like.weight});
  std::vector<ContentClass> out;
  if (weights.textual.weight == top) out.push_back(ContentClass::Textual);
  if (weights.numeric.weight == top) out.push_back(ContentClass::Numeric);
  if (weights.boolean_like.weight == top) out.push_back(ContentClass::Boolean);
  return out;
}

RedundancyStats redundancy(const std::vector<DocumentNode>& nodes) {
  RedundancyStats stats;
  stats.total_nodes = nodes.size();
  std::uint64_t duplicates = 0;
  for (const auto& node : nodes)
    if (node.duplicate_of) ++duplicates;
  stats.unique_nodes = stats.total_nodes - duplicates;
  stats.percentage =
      stats.total_nodes == 0
          ? 0.0
          : static_cast<double>(duplicates) * 100.0 /
                static_cast<double>(stats.total_nodes);
  return stats;
}

RedundancyStats redundancy(const JsonValue& document) {
  return redundancy(enumerate_nodes(document));
}

NestingProfile nesting_profile(const std::vector<DocumentNode>& nodes) {
  NestingProfile profile;
  int max_level = 0;
  for (const auto& node : nodes) {
    max_level = std::max(max_level, node.level);
    if (node.kind != NodeKind::Structural)
      profile.level_bytes[node.level] += node.byte_size;
  }
  profile.height = max_level > 0 ? max_level - 1 : 0;

  // The root level never competes; ties go to the shallowest level, which
  // ascending map order gives for free.
  std::uint64_t best = 0;
  for (const auto& [level, bytes] : profile.level_bytes) {
    if (level < 2) continue;
    if (!profile.largest_level || bytes > best) {
      profile.largest_level = level;
      best = bytes;
    }
  }
  if (profile.largest_level)
    profile.weight = profile.height * (*profile.largest_level - 1);
  assert(profile.height > 0 || profile.weight == 0);
  return profile;
}

NestingProfile nesting_profile(const JsonValue& document) {
  return nesting_profile(enumerate_nodes(document));
}

std::string category_acronym(SizeTier tier, ContentClass c, bool redundant,
                             bool nested) {
  std::string out{tier_name(tier)};
  out += ' ';
  switch (c) {
    case ContentClass::Textual:
      out += 'T';
      break;
    case ContentClass::Numeric:
      out += 'N';
      break;
    case ContentClass::Boolean:
      out += 'B';
      break;
  }
  out += redundant ? 'R' : 'N';
  out += nested ? 'N' : 'F';
  return out;
}

TaxonomyReport classify(const JsonValue& document) {
  std::vector<DocumentNode> nodes = enumerate_nodes(document);
  TaxonomyReport report;
  report.minified_bytes = nodes.front().byte_size;
  report.tier = size_tier(report.minified_bytes);
  report.weights = content_weights(nodes);
  report.qualifiers = content_qualifiers(report.weights);
  report.redundancy = redundancy(nodes);
  report.redundant = report.redundancy.percentage >= kRedundantThresholdPct;
  report.nesting = nesting_profile(nodes);
  report.nested = report.nesting.weight >= kNestedThreshold;
  for (ContentClass c : report.qualifiers)
    report.categories.push_back(
        category_acronym(report.tier, c, report.redundant, report.nested));
  return report;
}

namespace {

// Contiguous fixed-width bins from zero through the largest observed
// value, including interior empty bins.
CorpusHistogram ranged_histogram(std::string metric, std::uint64_t width,
                                 const std::vector<std::uint64_t>& values) {
  CorpusHistogram h;
  h.metric = std::move(metric);
  h.bin_width = static_cast<double>(width);
  if (values.empty()) return h;
  std::uint64_t top = *std::max_element(values.begin(), values.end());
  std::size_t bin_count = static_cast<std::size_t>(top / width) + 1;
  std::vector<std::uint64_t> counts(bin_count, 0);
  for (std::uint64_t v : values) ++counts[static_cast<std::size_t>(v / width)];
  for (std::size_t i = 0; i < bin_count; ++i)
    h.bins.emplace_back(std::to_string(i * width), counts[i]);
  return h;
}

CorpusHistogram label_histogram(std::string metric,
                                std::vector<std::string> labels) {
  CorpusHistogram h;
  h.metric = std::move(metric);
  std::sort(labels.begin(), labels.end());
  for (const auto& label : labels) {
    if (!h.bins.empty() && h.bins.back().first == label)
      ++h.bins.back().second;
    else
      h.bins.emplace_back(label, 1);
  }
  return h;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += '+';
    out += part;
  }
  return out;
}

}  // namespace

std::vector<CorpusHistogram> corpus_histograms(
    const std::vector<TaxonomyReport>& reports) {
  std::vector<std::uint64_t> sizes, nestings;
  sizes.reserve(reports.size());
  nestings.reserve(reports.size());
  for (const auto& r : reports) {
    sizes.push_back(r.minified_bytes);
    nestings.push_back(static_cast<std::uint64_t>(r.nesting.weight));
  }

  // Redundancy spans a fixed 0..100 domain, so its 40 bins are always
  // present no matter what the corpus holds.
  CorpusHistogram red;
  red.metric = "redundancy";
  red.bin_width = 2.5;
  std::vector<std::uint64_t> red_counts(40, 0);
  for (const auto& r : reports) {
    auto bin = static_cast<std::size_t>(r.redundancy.percentage / 2.5);
    ++red_counts[std::min<std::size_t>(bin, 39)];
  }
  for (std::size_t i = 0; i < red_counts.size(); ++i)
    red.bins.emplace_back(fixed1(static_cast<double>(i) * 2.5), red_counts[i]);

  std::vector<std::string> content_labels, category_labels;
  for (const auto& r : reports) {
    std::vector<std::string> names;
    for (ContentClass c : r.qualifiers)
      names.emplace_back(content_class_name(c));
    content_labels.push_back(join(names));
    category_labels.push_back(join(r.categories));
  }

  std::vector<CorpusHistogram> out;
  out.push_back(ranged_histogram("byte_size", 100, sizes));
  out.push_back(std::move(red));
  out.push_back(ranged_histogram("nesting", 5, nestings));
  out.push_back(label_histogram("content_type", std::move(content_labels)));
  out.push_back(label_histogram("category", std::move(category_labels)));
  return out;
}

}  // namespace jsonspace
