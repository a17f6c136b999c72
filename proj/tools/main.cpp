#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jsonspace/bench.hpp"
#include "jsonspace/codec.hpp"
#include "jsonspace/compress.hpp"
#include "jsonspace/json_value.hpp"
#include "jsonspace/parse.hpp"
#include "jsonspace/report.hpp"
#include "jsonspace/taxonomy.hpp"

namespace {

using namespace jsonspace;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;   // some inputs failed, others were processed
constexpr int kExitParse = 2;     // an input or configuration did not parse
constexpr int kExitRoundTrip = 3; // a codec failed round-trip verification

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

JsonValue load_document(const std::string& path) { return parse(slurp(path)); }

int run_analyze(const std::string& path, const std::string& format) {
  JsonValue value;
  try {
    value = load_document(path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  }
  std::cout << (format == "json" ? analysis_json(value) : analysis_text(value));
  return kExitOk;
}

int run_classify(const std::vector<std::string>& paths) {
  bool partial = false;
  std::vector<TaxonomyReport> reports;
  for (const auto& path : paths) {
    try {
      TaxonomyReport report = classify(load_document(path));
      std::string label;
      for (const auto& acronym : report.categories) {
        if (!label.empty()) label += ", ";
        label += acronym;
      }
      std::cout << path << ": " << label << "\n";
      reports.push_back(std::move(report));
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      partial = true;
    }
  }
  if (!reports.empty()) {
    std::cout << "\nDistribution:\n";
    for (const auto& histogram : corpus_histograms(reports)) {
      if (histogram.metric != "category") continue;
      for (const auto& [label, count] : histogram.bins)
        std::cout << label << ": " << count << "\n";
    }
  }
  return partial ? kExitPartial : kExitOk;
}

int run_corpus(const std::string& dir, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".json")
      paths.push_back(it->path().string());
  }
  if (ec) {
    std::cerr << "error: cannot read " << dir << ": " << ec.message() << "\n";
    return kExitPartial;
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    std::cerr << "error: no .json files in " << dir << "\n";
    return kExitPartial;
  }

  bool partial = false;
  std::vector<TaxonomyReport> reports;
  for (const auto& path : paths) {
    try {
      reports.push_back(classify(load_document(path)));
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      partial = true;
    }
  }
  if (reports.empty()) return kExitPartial;

  for (const auto& histogram : corpus_histograms(reports)) {
    if (histogram.metric == "content_type") {
      std::cout << histogram_csv(histogram);
      continue;
    }
    fs::path file = fs::path(out_dir) / (histogram.metric + ".csv");
    std::ofstream out(file, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << file.string() << "\n";
      partial = true;
      continue;
    }
    out << histogram_csv(histogram);
    std::cerr << "wrote " << file.string() << "\n";
  }
  return partial ? kExitPartial : kExitOk;
}

struct BenchCli {
  std::vector<std::string> paths;
  std::vector<std::string> codec_names;
  std::vector<std::string> compressor_names;
  std::string format = "csv";
  std::string registry_path;
  std::string output_path;
  unsigned jobs = 0;
  unsigned timeout_ms = 30000;
};

int run_bench(const BenchCli& cli) {
  std::vector<BenchDocument> documents;
  for (const auto& path : cli.paths) {
    try {
      documents.push_back({path, load_document(path)});
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      return kExitParse;
    }
  }

  std::vector<Codec> codec_pool = builtin_codecs();
  std::vector<CompressorDescriptor> compressor_pool = {
      identity_descriptor(), gzip_descriptor(), lz4_descriptor(),
      xz_descriptor()};
  std::vector<std::string> registry_codecs;
  std::vector<std::string> registry_compressors;
  if (!cli.registry_path.empty()) {
    try {
      JsonValue registry = load_document(cli.registry_path);
      ExternalCodecOptions options;
      options.timeout = std::chrono::milliseconds(cli.timeout_ms);
      for (auto& codec : codecs_from_registry(registry, options)) {
        registry_codecs.push_back(codec.name());
        codec_pool.push_back(std::move(codec));
      }
      for (auto& descriptor : compressors_from_registry(registry)) {
        auto hit = std::find_if(
            compressor_pool.begin(), compressor_pool.end(),
            [&](const auto& d) { return d.name == descriptor.name; });
        if (hit == compressor_pool.end()) {
          registry_compressors.push_back(descriptor.name);
          compressor_pool.push_back(std::move(descriptor));
        } else {
          *hit = std::move(descriptor);
        }
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << cli.registry_path << ": " << e.what() << "\n";
      return kExitParse;
    }
  }

  std::vector<std::string> codec_selection = cli.codec_names;
  if (codec_selection.empty()) {
    codec_selection = {"cbor", "msgpack", "ubjson"};
    codec_selection.insert(codec_selection.end(), registry_codecs.begin(),
                           registry_codecs.end());
  }
  std::vector<Codec> codecs;
  for (const auto& name : codec_selection) {
    auto hit = std::find_if(codec_pool.begin(), codec_pool.end(),
                            [&](const Codec& c) { return c.name() == name; });
    if (hit == codec_pool.end()) {
      std::cerr << "error: unknown codec " << name << "\n";
      return kExitParse;
    }
    codecs.push_back(*hit);
  }

  std::vector<std::string> compressor_selection = cli.compressor_names;
  if (compressor_selection.empty()) {
    compressor_selection = {"identity"};
    compressor_selection.insert(compressor_selection.end(),
                                registry_compressors.begin(),
                                registry_compressors.end());
  }
  std::vector<Compressor> compressors;
  for (const auto& name : compressor_selection) {
    auto hit = std::find_if(
        compressor_pool.begin(), compressor_pool.end(),
        [&](const auto& d) { return d.name == name; });
    if (hit == compressor_pool.end()) {
      std::cerr << "error: unknown compressor " << name << "\n";
      return kExitParse;
    }
    compressors.emplace_back(*hit,
                             std::chrono::milliseconds(cli.timeout_ms));
  }

  BenchOptions options;
  options.jobs = cli.jobs;
  BenchMatrix matrix = run_matrix(documents, codecs, compressors, options);

  ReportFormat format = ReportFormat::Csv;
  if (cli.format == "markdown") format = ReportFormat::Markdown;
  if (cli.format == "json") format = ReportFormat::Json;
  std::string report = emit_report(matrix, format);

  if (cli.output_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(cli.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << cli.output_path << "\n";
      return kExitPartial;
    }
    out << report;
  }
  return matrix.all_roundtrips_ok ? kExitOk : kExitRoundTrip;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"JSON taxonomy analyzer and serialization size benchmark"};
  app.require_subcommand(1);

  std::string analyze_path;
  std::string analyze_format = "text";
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Classify one document and print the full node analysis");
  analyze_cmd->add_option("file", analyze_path, "JSON file, or - for stdin")
      ->required();
  analyze_cmd->add_option("--format", analyze_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> classify_paths;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Print one category line per file plus the distribution");
  classify_cmd->add_option("files", classify_paths, "JSON files")->required();

  std::string corpus_dir;
  std::string corpus_out = ".";
  auto* corpus_cmd = app.add_subcommand(
      "corpus", "Histogram a directory of .json files");
  corpus_cmd->add_option("dir", corpus_dir, "directory of .json files")
      ->required();
  corpus_cmd->add_option("--out", corpus_out, "directory for the CSV files");

  BenchCli bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Measure encoded and compressed sizes against minified JSON");
  bench_cmd->add_option("files", bench.paths, "JSON files, or - for stdin")
      ->required();
  bench_cmd
      ->add_option("--codecs", bench.codec_names,
                   "codec names (default: all built-ins plus registry)")
      ->delimiter(',');
  bench_cmd
      ->add_option("--compressors", bench.compressor_names,
                   "compressor names (default: identity plus registry)")
      ->delimiter(',');
  bench_cmd->add_option("--format", bench.format, "csv, markdown or json")
      ->check(CLI::IsMember({"csv", "markdown", "json"}));
  bench_cmd->add_option("--registry", bench.registry_path,
                        "JSON registry of external codecs and compressors");
  bench_cmd->add_option("--output", bench.output_path,
                        "report file (default: stdout)");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads (0 = auto)");
  bench_cmd->add_option("--timeout", bench.timeout_ms,
                        "external tool timeout in milliseconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(analyze_path, analyze_format);
    if (*classify_cmd) return run_classify(classify_paths);
    if (*corpus_cmd) return run_corpus(corpus_dir, corpus_out);
    if (*bench_cmd) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  }
  return kExitOk;
}
