#ifndef DOCCLUSTER_CLI_HPP
#define DOCCLUSTER_CLI_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "doccluster/clustering.hpp"
#include "doccluster/corpus_io.hpp"
#include "doccluster/domain_dictionary.hpp"

namespace doccluster {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitConfig = 2,
  kExitIngestion = 3,
};

struct RunConfig {
  std::filesystem::path input_dir;
  std::optional<std::filesystem::path> dictionary_path;
  /// Defaults to the built-in English list.
  std::optional<std::filesystem::path> stopwords_path;
  Granularity granularity = Granularity::feature;
  std::optional<std::size_t> k;
  bool auto_k = false;
  std::size_t k_min = 2;
  /// Defaults to the corpus size.
  std::optional<std::size_t> k_max;
  bool stemming = true;
  bool dictionary_only = false;
  std::size_t max_iters = kDefaultMaxIters;
  /// "-" writes to stdout.
  std::string output_path = "-";
  ReportFormat format = ReportFormat::json;
  Granularity label_level = Granularity::parent_category;
  std::vector<std::string> extensions{".txt"};

  /// Throws ConfigError on an inconsistent flag set. Checks that need the
  /// corpus size happen in run().
  void validate() const;
};

/// Runs the whole pipeline: ingest, term tables, projection, tf-idf,
/// normalization, clustering, labeling, report. Warnings and errors go to
/// `diag`; the report goes to `config.output_path` (or `out` for "-").
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Parses argv into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& diag);

}  // namespace doccluster

#endif  // DOCCLUSTER_CLI_HPP
