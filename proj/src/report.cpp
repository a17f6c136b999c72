#include "jsonspace/report.hpp"

#include <algorithm>

#include "jsonspace/minify.hpp"
#include "jsonspace/nodes.hpp"
#include "jsonspace/render.hpp"

namespace jsonspace {

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& separator) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += separator;
    out += part;
  }
  return out;
}

std::vector<std::string> qualifier_names(const TaxonomyReport& report) {
  std::vector<std::string> names;
  for (ContentClass c : report.qualifiers)
    names.emplace_back(content_class_name(c));
  return names;
}

std::string section(const std::string& title, char underline) {
  return title + "\n" + std::string(title.size(), underline) + "\n";
}

std::string pad_right(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string pad_left(std::string text, std::size_t width) {
  if (text.size() < width) text.insert(0, width - text.size(), ' ');
  return text;
}

}  // namespace

std::string taxonomy_headline(const TaxonomyReport& report) {
  std::string line{tier_description(report.tier)};
  line += ", " + join(qualifier_names(report), ", ");
  line += report.redundant ? ", redundant" : ", non-redundant";
  line += report.nested ? ", nested" : ", flat";
  return line;
}

std::string analysis_text(const JsonValue& document) {
  TaxonomyReport report = classify(document);
  std::vector<DocumentNode> nodes = enumerate_nodes(document);

  std::string out = section("Taxonomy", '=');
  out += taxonomy_headline(report) + "\n";
  out += "Categories: " + join(report.categories, ", ") + "\n";

  out += "\n" + section("Summary", '=');
  out += "Minified bytes: " + std::to_string(report.minified_bytes) + "\n";
  out += "Nodes: " + std::to_string(report.weights.total_nodes) + "\n";
  out += "Class    Count  Bytes  Weight\n";
  auto tally_line = [&](std::string_view name, const ClassTally& tally) {
    out += pad_right(std::string(name), 7);
    out += pad_left(std::to_string(tally.count), 7);
    out += pad_left(std::to_string(tally.bytes), 7);
    out += pad_left(fixed2_truncated(tally.weight), 8);
    out += "\n";
  };
  tally_line("textual", report.weights.textual);
  tally_line("numeric", report.weights.numeric);
  tally_line("boolean", report.weights.boolean_like);
  out += "Qualifiers: " + join(qualifier_names(report), ", ") + "\n";
  out += "Redundancy: " + fixed2_truncated(report.redundancy.percentage) +
         "% (" + std::to_string(report.redundancy.unique_nodes) +
         " unique of " + std::to_string(report.redundancy.total_nodes) +
         " nodes) -> " + (report.redundant ? "redundant" : "non-redundant") +
         "\n";
  out += "Height: " + std::to_string(report.nesting.height) + "\n";
  out += "Level bytes:";
  for (const auto& [level, bytes] : report.nesting.level_bytes)
    out += " " + std::to_string(level) + ":" + std::to_string(bytes);
  out += "\n";
  out += "Largest level: ";
  out += report.nesting.largest_level
             ? std::to_string(*report.nesting.largest_level)
             : std::string("none");
  out += "\n";
  out += "Nesting weight: " + std::to_string(report.nesting.weight) +
         " -> " + (report.nested ? "nested" : "flat") + "\n";

  out += "\n" + section("Full Analysis", '=');
  std::size_t pointer_width = 7;
  for (const auto& node : nodes)
    pointer_width = std::max(pointer_width, node.pointer.size());
  out += pad_right("Pointer", pointer_width) + "  " + pad_right("Type", 10) +
         "  Level  Bytes  Same as\n";
  for (const auto& node : nodes) {
    out += pad_right(node.pointer, pointer_width);
    out += "  " + pad_right(std::string(node_kind_name(node.kind)), 10);
    out += "  " + pad_left(std::to_string(node.level), 5);
    out += "  " + pad_left(std::to_string(node.byte_size), 5);
    if (node.duplicate_of) out += "  " + nodes[*node.duplicate_of].pointer;
    out += "\n";
  }
  return out;
}

std::string analysis_json(const JsonValue& document) {
  TaxonomyReport report = classify(document);
  std::vector<DocumentNode> nodes = enumerate_nodes(document);

  JsonObject root;
  root.emplace_back("minified_bytes",
                    JsonValue(static_cast<std::int64_t>(report.minified_bytes)));
  root.emplace_back("tier", JsonValue(std::string(tier_name(report.tier))));
  root.emplace_back("taxonomy", JsonValue(taxonomy_headline(report)));

  JsonArray categories;
  for (const auto& acronym : report.categories) categories.emplace_back(acronym);
  root.emplace_back("categories", JsonValue(std::move(categories)));

  JsonArray qualifiers;
  for (const auto& name : qualifier_names(report)) qualifiers.emplace_back(name);
  root.emplace_back("qualifiers", JsonValue(std::move(qualifiers)));

  JsonObject weights;
  auto tally_json = [](const ClassTally& tally) {
    JsonObject t;
    t.emplace_back("count", JsonValue(static_cast<std::int64_t>(tally.count)));
    t.emplace_back("bytes", JsonValue(static_cast<std::int64_t>(tally.bytes)));
    t.emplace_back("weight", JsonValue(tally.weight));
    return JsonValue(std::move(t));
  };
  weights.emplace_back("textual", tally_json(report.weights.textual));
  weights.emplace_back("numeric", tally_json(report.weights.numeric));
  weights.emplace_back("boolean", tally_json(report.weights.boolean_like));
  root.emplace_back("weights", JsonValue(std::move(weights)));

  JsonObject redundancy;
  redundancy.emplace_back(
      "total_nodes",
      JsonValue(static_cast<std::int64_t>(report.redundancy.total_nodes)));
  redundancy.emplace_back(
      "unique_nodes",
      JsonValue(static_cast<std::int64_t>(report.redundancy.unique_nodes)));
  redundancy.emplace_back("percentage",
                          JsonValue(report.redundancy.percentage));
  redundancy.emplace_back("redundant", JsonValue(report.redundant));
  root.emplace_back("redundancy", JsonValue(std::move(redundancy)));

  JsonObject nesting;
  nesting.emplace_back("height", JsonValue(report.nesting.height));
  JsonObject level_bytes;
  for (const auto& [level, bytes] : report.nesting.level_bytes)
    level_bytes.emplace_back(std::to_string(level),
                             JsonValue(static_cast<std::int64_t>(bytes)));
  nesting.emplace_back("level_bytes", JsonValue(std::move(level_bytes)));
  nesting.emplace_back("largest_level",
                       report.nesting.largest_level
                           ? JsonValue(*report.nesting.largest_level)
                           : JsonValue(nullptr));
  nesting.emplace_back("weight", JsonValue(report.nesting.weight));
  nesting.emplace_back("nested", JsonValue(report.nested));
  root.emplace_back("nesting", JsonValue(std::move(nesting)));

  JsonArray node_rows;
  for (const auto& node : nodes) {
    JsonObject row;
    row.emplace_back("pointer", JsonValue(node.pointer));
    row.emplace_back("type", JsonValue(std::string(node_kind_name(node.kind))));
    row.emplace_back("level", JsonValue(node.level));
    row.emplace_back("bytes",
                     JsonValue(static_cast<std::int64_t>(node.byte_size)));
    if (node.duplicate_of)
      row.emplace_back("same_as", JsonValue(nodes[*node.duplicate_of].pointer));
    node_rows.emplace_back(std::move(row));
  }
  root.emplace_back("nodes", JsonValue(std::move(node_rows)));

  return minify(JsonValue(std::move(root))) + "\n";
}

std::string histogram_csv(const CorpusHistogram& histogram) {
  std::string out =
      histogram.bin_width > 0 ? "lower_bound,count\n" : "label,count\n";
  for (const auto& [label, count] : histogram.bins) {
    bool quote = label.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      out += '"';
      for (char c : label) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    } else {
      out += label;
    }
    out += "," + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace jsonspace
