#include "jsonspace/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "jsonspace/minify.hpp"
#include "jsonspace/parse.hpp"
#include "jsonspace/render.hpp"

namespace jsonspace {

GroupStats group_stats(const std::vector<double>& sample) {
  if (sample.empty())
    throw std::invalid_argument("group_stats needs a non-empty sample");
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  GroupStats s;
  s.count = sorted.size();
  double n = static_cast<double>(sorted.size());
  s.average = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
  std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1 ? sorted[mid]
                                    : (sorted[mid - 1] + sorted[mid]) / 2.0;
  s.range = sorted.back() - sorted.front();
  double accum = 0.0;
  for (double v : sorted) accum += (v - s.average) * (v - s.average);
  s.stddev = std::sqrt(accum / n);  // population convention
  return s;
}

GroupStats group_stats(const std::vector<std::uint64_t>& sample) {
  std::vector<double> values(sample.begin(), sample.end());
  return group_stats(values);
}

std::string_view codec_group_name(CodecGroup group) {
  switch (group) {
    case CodecGroup::SchemaDriven:
      return "schema-driven";
    case CodecGroup::SchemaLess:
      return "schema-less";
    case CodecGroup::Baseline:
      return "baseline";
  }
  return "";
}

CodecGroup codec_group(const CodecDescriptor& descriptor) {
  if (descriptor.name == kJsonBaselineName) return CodecGroup::Baseline;
  return descriptor.schema_driven ? CodecGroup::SchemaDriven
                                  : CodecGroup::SchemaLess;
}

double size_reduction_pct(std::uint64_t json_size, std::uint64_t binary_size) {
  if (json_size == 0)
    throw std::invalid_argument("size reduction needs a nonzero baseline");
  return (1.0 - static_cast<double>(binary_size) /
                    static_cast<double>(json_size)) *
         100.0;
}

std::string size_reduction_ratio(std::uint64_t json_size,
                                 std::uint64_t binary_size) {
  if (binary_size == 0)
    throw std::invalid_argument("size reduction ratio needs a nonzero divisor");
  return ratio_text(json_size, binary_size);
}

const BenchRow& BenchMatrix::row(std::size_t document,
                                 std::size_t codec) const {
  return rows.at(document * codecs.size() + codec);
}

namespace {

std::string roundtrip_note(const RoundTripReport& roundtrip) {
  std::string note = "round-trip failed";
  if (roundtrip.failure) {
    note += ": " + *roundtrip.failure;
  } else if (roundtrip.mismatch) {
    note += ": first divergence at " + roundtrip.mismatch->pointer +
            " (expected " + roundtrip.mismatch->expected + ", got " +
            roundtrip.mismatch->actual + ")";
  }
  return note;
}

BenchRow run_row(const BenchDocument& document, std::size_t document_index,
                 std::size_t codec_index, const Codec* codec,
                 const std::vector<Compressor>& compressors,
                 const std::vector<bool>& column_available,
                 std::size_t column_count) {
  BenchRow row;
  row.document = document_index;
  row.codec = codec_index;
  row.cells.resize(column_count);

  Bytes encoded;
  if (codec == nullptr) {
    // JSON baseline: its "encoding" is the minified text, verified through
    // our own parser so the baseline plays by the same rules as everyone.
    row.roundtrip.codec = kJsonBaselineName;
    std::string text = minify(document.value);
    encoded.assign(text.begin(), text.end());
    row.roundtrip.encoded_size = encoded.size();
    try {
      JsonValue back = parse(text);
      row.roundtrip.mismatch = first_divergence(document.value, back);
      row.roundtrip.ok = !row.roundtrip.mismatch.has_value();
    } catch (const std::exception& e) {
      row.roundtrip.ok = false;
      row.roundtrip.failure = e.what();
    }
  } else {
    row.roundtrip.codec = codec->name();
    try {
      encoded = codec->encode(document.value);
      row.roundtrip.encoded_size = encoded.size();
      JsonValue decoded = codec->decode(encoded);
      row.roundtrip.mismatch = first_divergence(document.value, decoded);
      row.roundtrip.ok = !row.roundtrip.mismatch.has_value();
    } catch (const std::exception& e) {
      row.roundtrip.ok = false;
      row.roundtrip.failure = e.what();
    }
  }

  if (!row.roundtrip.ok) {
    std::string note = roundtrip_note(row.roundtrip);
    for (auto& cell : row.cells) cell.note = note;
    return row;
  }

  row.cells[0].size = encoded.size();
  for (std::size_t i = 0; i < compressors.size(); ++i) {
    BenchCell& cell = row.cells[i + 1];
    if (!column_available[i + 1]) {
      cell.note = "unavailable";
      continue;
    }
    try {
      cell.size = compressors[i].compress(encoded).size();
    } catch (const std::exception& e) {
      cell.note = std::string("compress error: ") + e.what();
    }
  }
  return row;
}

}  // namespace

BenchMatrix run_matrix(const std::vector<BenchDocument>& documents,
                       const std::vector<Codec>& codecs,
                       const std::vector<Compressor>& compressors,
                       const BenchOptions& options) {
  BenchMatrix matrix;
  for (const auto& document : documents)
    matrix.documents.push_back(document.id);

  // Row order within a document: schema-driven, then the JSON baseline,
  // then schema-less, preserving registry order inside each band.
  std::vector<const Codec*> bound;
  for (const auto& codec : codecs) {
    if (codec.descriptor().schema_driven) {
      matrix.codecs.push_back(codec.descriptor());
      bound.push_back(&codec);
    }
  }
  CodecDescriptor baseline;
  baseline.name = kJsonBaselineName;
  baseline.builtin = true;
  matrix.codecs.push_back(baseline);
  bound.push_back(nullptr);
  for (const auto& codec : codecs) {
    if (!codec.descriptor().schema_driven) {
      matrix.codecs.push_back(codec.descriptor());
      bound.push_back(&codec);
    }
  }

  matrix.columns.push_back("uncompressed");
  matrix.column_available.push_back(true);
  for (const auto& compressor : compressors) {
    matrix.columns.push_back(compressor.name());
    matrix.column_available.push_back(compressor.available());
  }

  matrix.rows.resize(documents.size() * matrix.codecs.size());
  std::atomic<std::size_t> next{0};
  const std::size_t total = matrix.rows.size();
  auto work = [&] {
    while (true) {
      std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      std::size_t document_index = task / matrix.codecs.size();
      std::size_t codec_index = task % matrix.codecs.size();
      matrix.rows[task] = run_row(
          documents[document_index], document_index, codec_index,
          bound[codec_index], compressors, matrix.column_available,
          matrix.columns.size());
    }
  };

  unsigned jobs = options.jobs ? options.jobs
                               : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(
      std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }

  matrix.all_roundtrips_ok = true;
  for (const auto& row : matrix.rows)
    if (!row.roundtrip.ok) matrix.all_roundtrips_ok = false;
  return matrix;
}

std::vector<StatsEntry> matrix_stats(const BenchMatrix& matrix) {
  std::vector<StatsEntry> out;
  for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
    for (std::size_t col = 0; col < matrix.columns.size(); ++col) {
      for (CodecGroup group :
           {CodecGroup::SchemaDriven, CodecGroup::SchemaLess}) {
        std::vector<std::uint64_t> sizes;
        for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci) {
          if (codec_group(matrix.codecs[ci]) != group) continue;
          const BenchCell& cell = matrix.row(di, ci).cells[col];
          if (cell.size) sizes.push_back(*cell.size);
        }
        if (sizes.empty()) continue;
        StatsEntry entry;
        entry.document = di;
        entry.column = matrix.columns[col];
        entry.group = group;
        entry.stats = group_stats(sizes);
        out.push_back(std::move(entry));
      }
    }
  }
  return out;
}

std::vector<ReductionSummary> reduction_summaries(const BenchMatrix& matrix) {
  std::size_t baseline_index = matrix.codecs.size();
  for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci)
    if (matrix.codecs[ci].name == kJsonBaselineName) baseline_index = ci;
  std::vector<ReductionSummary> out;
  if (baseline_index == matrix.codecs.size()) return out;

  for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci) {
    if (ci == baseline_index) continue;
    std::vector<double> reductions;
    std::size_t negatives = 0;
    for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
      const BenchCell& json_cell = matrix.row(di, baseline_index).cells[0];
      const BenchCell& codec_cell = matrix.row(di, ci).cells[0];
      if (!json_cell.size || !codec_cell.size) continue;
      double pct = size_reduction_pct(*json_cell.size, *codec_cell.size);
      reductions.push_back(pct);
      if (pct < 0) ++negatives;
    }
    if (reductions.empty()) continue;
    GroupStats stats = group_stats(reductions);
    ReductionSummary summary;
    summary.codec = matrix.codecs[ci].name;
    summary.cases = reductions.size();
    summary.maximum = *std::max_element(reductions.begin(), reductions.end());
    summary.minimum = *std::min_element(reductions.begin(), reductions.end());
    summary.range = stats.range;
    summary.median = stats.median;
    summary.average = stats.average;
    summary.negative_cases = negatives;
    out.push_back(std::move(summary));
  }
  return out;
}

namespace {

// Stats print in the tables' 1-decimal style, with integral values kept
// bare ("39", not "39.0").
std::string stat1(double value) {
  std::string text = fixed1(value);
  if (text.size() >= 2 && text.compare(text.size() - 2, 2, ".0") == 0)
    text.resize(text.size() - 2);
  if (text == "-0") text = "0";
  return text;
}

std::string negative_share(std::size_t negatives, std::size_t cases) {
  double pct = cases == 0
                   ? 0.0
                   : static_cast<double>(negatives) * 100.0 /
                         static_cast<double>(cases);
  return std::to_string(negatives) + " / " + std::to_string(cases) + " (" +
         fixed1(pct) + "%)";
}

std::string csv_field(std::string_view text) {
  bool needs_quotes =
      text.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_csv(const BenchMatrix& matrix) {
  std::string out;
  out += "# compressed sizes depend on local tool versions\n";
  for (std::size_t col = 1; col < matrix.columns.size(); ++col)
    if (!matrix.column_available[col])
      out += "# column " + matrix.columns[col] + " skipped: tool unavailable\n";

  out += "# raw sizes (bytes)\n";
  out += "document,codec,group";
  for (const auto& column : matrix.columns) out += "," + csv_field(column);
  out += "\n";
  for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
    for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci) {
      const BenchRow& row = matrix.row(di, ci);
      out += csv_field(matrix.documents[di]);
      out += "," + csv_field(matrix.codecs[ci].name);
      out += "," + std::string(codec_group_name(codec_group(matrix.codecs[ci])));
      for (const auto& cell : row.cells)
        out += "," + (cell.size ? std::to_string(*cell.size) : std::string());
      out += "\n";
    }
  }

  bool any_failure = false;
  for (const auto& row : matrix.rows)
    if (!row.roundtrip.ok) any_failure = true;
  if (any_failure) {
    out += "# round-trip failures\n";
    out += "document,codec,detail\n";
    for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
      for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci) {
        const BenchRow& row = matrix.row(di, ci);
        if (row.roundtrip.ok) continue;
        out += csv_field(matrix.documents[di]) + "," +
               csv_field(matrix.codecs[ci].name) + "," +
               csv_field(roundtrip_note(row.roundtrip)) + "\n";
      }
    }
  }

  out += "# group statistics\n";
  out += "document,group,column,count,average,median,range,stddev\n";
  for (const auto& entry : matrix_stats(matrix)) {
    out += csv_field(matrix.documents[entry.document]);
    out += ",";
    out += codec_group_name(entry.group);
    out += "," + csv_field(entry.column);
    out += "," + std::to_string(entry.stats.count);
    out += "," + stat1(entry.stats.average);
    out += "," + stat1(entry.stats.median);
    out += "," + stat1(entry.stats.range);
    out += "," + stat1(entry.stats.stddev);
    out += "\n";
  }

  out += "# size reductions vs JSON, uncompressed\n";
  out += "codec,cases,maximum,minimum,range,median,average,negative_share\n";
  for (const auto& summary : reduction_summaries(matrix)) {
    out += csv_field(summary.codec);
    out += "," + std::to_string(summary.cases);
    out += "," + stat1(summary.maximum);
    out += "," + stat1(summary.minimum);
    out += "," + stat1(summary.range);
    out += "," + stat1(summary.median);
    out += "," + stat1(summary.average);
    out += "," + csv_field(negative_share(summary.negative_cases, summary.cases));
    out += "\n";
  }
  return out;
}

std::string emit_markdown(const BenchMatrix& matrix) {
  std::string out = "# Serialization benchmark\n\n";
  out += "Compressed sizes depend on local tool versions.\n";

  for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
    out += "\n## Raw sizes: " + matrix.documents[di] + "\n\n";
    out += "| Codec | Group |";
    for (const auto& column : matrix.columns) out += " " + column + " |";
    out += "\n|---|---|";
    for (std::size_t col = 0; col < matrix.columns.size(); ++col)
      out += "---|";
    out += "\n";
    for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci) {
      const BenchRow& row = matrix.row(di, ci);
      out += "| " + matrix.codecs[ci].name + " | ";
      out += codec_group_name(codec_group(matrix.codecs[ci]));
      out += " |";
      for (std::size_t col = 0; col < row.cells.size(); ++col) {
        const BenchCell& cell = row.cells[col];
        if (cell.size)
          out += " " + std::to_string(*cell.size) + " |";
        else if (!matrix.column_available[col])
          out += " skipped |";
        else
          out += " failed |";
      }
      out += "\n";
    }
  }

  std::vector<StatsEntry> stats = matrix_stats(matrix);
  bool has_schema_driven = false, has_schema_less = false;
  for (const auto& entry : stats) {
    if (entry.group == CodecGroup::SchemaDriven) has_schema_driven = true;
    if (entry.group == CodecGroup::SchemaLess) has_schema_less = true;
  }
  std::vector<CodecGroup> groups;
  if (has_schema_driven) groups.push_back(CodecGroup::SchemaDriven);
  if (has_schema_less) groups.push_back(CodecGroup::SchemaLess);

  if (!groups.empty()) {
    for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
      out += "\n## Statistics: " + matrix.documents[di] + "\n\n";
      out += "| Column |";
      for (CodecGroup group : groups) {
        std::string label{codec_group_name(group)};
        out += " " + label + " Average | " + label + " Median | " + label +
               " Range | " + label + " Std.dev |";
      }
      out += "\n|---|";
      for (std::size_t i = 0; i < groups.size() * 4; ++i) out += "---|";
      out += "\n";
      for (const auto& column : matrix.columns) {
        std::string line = "| " + column + " |";
        bool any = false;
        for (CodecGroup group : groups) {
          const StatsEntry* found = nullptr;
          for (const auto& entry : stats) {
            if (entry.document == di && entry.column == column &&
                entry.group == group)
              found = &entry;
          }
          if (found) {
            any = true;
            line += " " + stat1(found->stats.average) + " | " +
                    stat1(found->stats.median) + " | " +
                    stat1(found->stats.range) + " | " +
                    stat1(found->stats.stddev) + " |";
          } else {
            line += " - | - | - | - |";
          }
        }
        if (any) out += line + "\n";
      }
    }
  }

  std::vector<ReductionSummary> reductions = reduction_summaries(matrix);
  if (!reductions.empty()) {
    out += "\n## Size reductions vs JSON, uncompressed\n\n";
    out += "| Codec | Cases | Maximum | Minimum | Range | Median | Average "
           "| Larger than JSON |\n";
    out += "|---|---|---|---|---|---|---|---|\n";
    for (const auto& summary : reductions) {
      out += "| " + summary.codec + " | " + std::to_string(summary.cases) +
             " | " + stat1(summary.maximum) + "% | " +
             stat1(summary.minimum) + "% | " + stat1(summary.range) +
             "% | " + stat1(summary.median) + "% | " +
             stat1(summary.average) + "% | " +
             negative_share(summary.negative_cases, summary.cases) + " |\n";
    }
  }

  bool any_failure = false;
  for (const auto& row : matrix.rows)
    if (!row.roundtrip.ok) any_failure = true;
  if (any_failure) {
    out += "\n## Round-trip failures\n\n";
    out += "| Document | Codec | Detail |\n|---|---|---|\n";
    for (std::size_t di = 0; di < matrix.documents.size(); ++di) {
      for (std::size_t ci = 0; ci < matrix.codecs.size(); ++ci) {
        const BenchRow& row = matrix.row(di, ci);
        if (row.roundtrip.ok) continue;
        out += "| " + matrix.documents[di] + " | " +
               matrix.codecs[ci].name + " | " +
               roundtrip_note(row.roundtrip) + " |\n";
      }
    }
  }
  return out;
}

std::string emit_json(const BenchMatrix& matrix) {
  JsonObject root;
  root.emplace_back("environment_dependent_compressed_sizes", JsonValue(true));

  JsonArray documents;
  for (const auto& id : matrix.documents) documents.emplace_back(id);
  root.emplace_back("documents", JsonValue(std::move(documents)));

  JsonArray columns;
  for (const auto& column : matrix.columns) columns.emplace_back(column);
  root.emplace_back("columns", JsonValue(std::move(columns)));

  JsonArray availability;
  for (bool available : matrix.column_available)
    availability.emplace_back(available);
  root.emplace_back("column_available", JsonValue(std::move(availability)));

  JsonArray codecs;
  for (const auto& descriptor : matrix.codecs) {
    JsonObject c;
    c.emplace_back("name", JsonValue(descriptor.name));
    c.emplace_back("builtin", JsonValue(descriptor.builtin));
    c.emplace_back("schema_driven", JsonValue(descriptor.schema_driven));
    c.emplace_back("sequential", JsonValue(descriptor.sequential));
    c.emplace_back("group",
                   JsonValue(std::string(
                       codec_group_name(codec_group(descriptor)))));
    codecs.emplace_back(std::move(c));
  }
  root.emplace_back("codecs", JsonValue(std::move(codecs)));

  JsonArray rows;
  for (const auto& row : matrix.rows) {
    JsonObject r;
    r.emplace_back("document", JsonValue(matrix.documents[row.document]));
    r.emplace_back("codec", JsonValue(matrix.codecs[row.codec].name));
    r.emplace_back("roundtrip_ok", JsonValue(row.roundtrip.ok));
    if (!row.roundtrip.ok)
      r.emplace_back("detail", JsonValue(roundtrip_note(row.roundtrip)));
    JsonObject cells;
    for (std::size_t col = 0; col < row.cells.size(); ++col) {
      const BenchCell& cell = row.cells[col];
      JsonObject c;
      if (cell.size)
        c.emplace_back("size",
                       JsonValue(static_cast<std::int64_t>(*cell.size)));
      else
        c.emplace_back("note", JsonValue(cell.note));
      cells.emplace_back(matrix.columns[col], JsonValue(std::move(c)));
    }
    r.emplace_back("cells", JsonValue(std::move(cells)));
    rows.emplace_back(std::move(r));
  }
  root.emplace_back("rows", JsonValue(std::move(rows)));

  JsonArray stats;
  for (const auto& entry : matrix_stats(matrix)) {
    JsonObject s;
    s.emplace_back("document", JsonValue(matrix.documents[entry.document]));
    s.emplace_back("group",
                   JsonValue(std::string(codec_group_name(entry.group))));
    s.emplace_back("column", JsonValue(entry.column));
    s.emplace_back("count",
                   JsonValue(static_cast<std::int64_t>(entry.stats.count)));
    s.emplace_back("average", JsonValue(entry.stats.average));
    s.emplace_back("median", JsonValue(entry.stats.median));
    s.emplace_back("range", JsonValue(entry.stats.range));
    s.emplace_back("stddev", JsonValue(entry.stats.stddev));
    stats.emplace_back(std::move(s));
  }
  root.emplace_back("stats", JsonValue(std::move(stats)));

  JsonArray reductions;
  for (const auto& summary : reduction_summaries(matrix)) {
    JsonObject s;
    s.emplace_back("codec", JsonValue(summary.codec));
    s.emplace_back("cases",
                   JsonValue(static_cast<std::int64_t>(summary.cases)));
    s.emplace_back("maximum", JsonValue(summary.maximum));
    s.emplace_back("minimum", JsonValue(summary.minimum));
    s.emplace_back("range", JsonValue(summary.range));
    s.emplace_back("median", JsonValue(summary.median));
    s.emplace_back("average", JsonValue(summary.average));
    s.emplace_back("negative_cases",
                   JsonValue(static_cast<std::int64_t>(summary.negative_cases)));
    reductions.emplace_back(std::move(s));
  }
  root.emplace_back("reductions", JsonValue(std::move(reductions)));

  return minify(JsonValue(std::move(root))) + "\n";
}

}  // namespace

std::string emit_report(const BenchMatrix& matrix, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv:
      return emit_csv(matrix);
    case ReportFormat::Markdown:
      return emit_markdown(matrix);
    case ReportFormat::Json:
      return emit_json(matrix);
  }
  return "";
}

}  // namespace jsonspace
