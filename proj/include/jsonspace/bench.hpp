#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsonspace/codec.hpp"
#include "jsonspace/compress.hpp"
#include "jsonspace/json_value.hpp"

namespace jsonspace {

/// One input document for a benchmark run.
struct BenchDocument {
  std::string id;  // display name, usually the file stem
  JsonValue value;
};

/// Name of the pseudo-codec row holding the minified JSON baseline.
inline constexpr const char* kJsonBaselineName = "JSON";

/// One measured cell: a (document, codec) encoding passed through one
/// compression column. `size` is present only for verified measurements;
/// an empty cell carries the reason in `note` ("unavailable", "round-trip
/// failed: ...", "codec error: ...", "compress error: ...").
struct BenchCell {
  std::optional<std::uint64_t> size;
  std::string note;
};

/// One (document, codec) row: the round-trip verdict plus one cell per
/// column. Cells of a row whose round trip failed are all empty; nothing
/// unverified ever reaches a statistic.
struct BenchRow {
  std::size_t document = 0;  // index into BenchMatrix::documents
  std::size_t codec = 0;     // index into BenchMatrix::codecs
  RoundTripReport roundtrip;
  std::vector<BenchCell> cells;  // parallel to BenchMatrix::columns
};

/// Full benchmark result. Rows are grouped per document in a fixed order:
/// schema-driven codecs first, then the JSON baseline, then self-describing
/// codecs, each in registry order. Column 0 is always "uncompressed".
struct BenchMatrix {
  std::vector<std::string> documents;
  std::vector<CodecDescriptor> codecs;  // includes the JSON baseline entry
  std::vector<std::string> columns;     // "uncompressed" + compressor names
  std::vector<bool> column_available;   // parallel to columns
  std::vector<BenchRow> rows;           // documents.size() * codecs.size()
  bool all_roundtrips_ok = true;

  const BenchRow& row(std::size_t document, std::size_t codec) const;
};

struct BenchOptions {
  /// Worker threads; 0 means hardware concurrency. Results are identical
  /// regardless of the worker count, only wall time changes.
  unsigned jobs = 0;
};

/// Runs the full document x codec x column matrix on a bounded worker
/// pool; rows are independent work items and land in fixed slots, so the
/// result does not depend on scheduling. Compressor availability is probed
/// once; unavailable columns yield skipped cells rather than fabricated
/// numbers.
BenchMatrix run_matrix(const std::vector<BenchDocument>& documents,
                       const std::vector<Codec>& codecs,
                       const std::vector<Compressor>& compressors,
                       const BenchOptions& options = {});

/// Five-number descriptive summary of a sample.
struct GroupStats {
  std::size_t count = 0;
  double average = 0;  // arithmetic mean
  double median = 0;   // midpoint; even counts average the two central values
  double range = 0;    // max - min
  double stddev = 0;   // population standard deviation (divide by n)
};

/// Throws std::invalid_argument on an empty sample.
GroupStats group_stats(const std::vector<double>& sample);
GroupStats group_stats(const std::vector<std::uint64_t>& sample);

/// Codec family used for statistics grouping.
enum class CodecGroup { SchemaDriven, SchemaLess, Baseline };

std::string_view codec_group_name(CodecGroup group);
CodecGroup codec_group(const CodecDescriptor& descriptor);

/// Stats over the measured cells of one (document, column, group). The
/// JSON baseline belongs to no group and is never aggregated.
struct StatsEntry {
  std::size_t document = 0;
  std::string column;
  CodecGroup group = CodecGroup::SchemaLess;
  GroupStats stats;
};

/// Per-document, per-column stats for both codec groups, in document then
/// column then group order. Groups with no measured cell are omitted.
std::vector<StatsEntry> matrix_stats(const BenchMatrix& matrix);

/// Space saving of a binary encoding against the JSON baseline, in
/// percent: (json - binary) * 100 / json. Negative when the binary form
/// is larger.
double size_reduction_pct(std::uint64_t json_size, std::uint64_t binary_size);

/// Same comparison as a multiplier, truncated toward zero to one decimal:
/// (34, 9) -> "3.7x". Integral multipliers drop the ".0".
std::string size_reduction_ratio(std::uint64_t json_size,
                                 std::uint64_t binary_size);

/// Per-codec summary of uncompressed size reductions across all documents
/// whose round trip succeeded for that codec.
struct ReductionSummary {
  std::string codec;
  std::size_t cases = 0;           // documents measured
  double maximum = 0;              // best reduction seen
  double minimum = 0;
  double range = 0;
  double median = 0;
  double average = 0;
  std::size_t negative_cases = 0;  // binary came out larger than JSON
};

std::vector<ReductionSummary> reduction_summaries(const BenchMatrix& matrix);

enum class ReportFormat { Csv, Markdown, Json };

/// Renders the matrix, its statistics and the reduction summaries. Output
/// is a pure function of the matrix: no timestamps, no locale, no host
/// details, so identical runs yield byte-identical reports.
std::string emit_report(const BenchMatrix& matrix, ReportFormat format);

}  // namespace jsonspace
