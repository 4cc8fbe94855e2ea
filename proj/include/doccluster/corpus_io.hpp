#ifndef DOCCLUSTER_CORPUS_IO_HPP
#define DOCCLUSTER_CORPUS_IO_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doccluster/clustering.hpp"
#include "doccluster/domain_dictionary.hpp"
#include "doccluster/vector_space.hpp"

namespace doccluster {

struct RawDocument {
  /// Path relative to the input root, '/'-separated.
  std::string doc_id;
  std::string text;
};

using WarningSink = std::function<void(const std::string&)>;

/// Replaces every invalid UTF-8 sequence with U+FFFD. Returns the number of
/// replacements made.
std::size_t sanitize_utf8(std::string& text);

/// Reads every regular file under `root` (recursively) whose extension is in
/// `extensions`, sorted by doc_id. Empty files are kept. Invalid UTF-8 is
/// replaced and reported through `warn`.
///
/// Throws NotADirectory, NoDocumentsFound, or IngestionError on read failure.
std::vector<RawDocument> ingest_directory(const std::filesystem::path& root,
                                          const std::vector<std::string>& extensions = {".txt"},
                                          const WarningSink& warn = {});

/// Reads a whole file. Throws IngestionError.
std::string read_text_file(const std::filesystem::path& path);

struct ReportCluster {
  std::string label;
  std::vector<std::string> documents;
  std::vector<std::pair<std::string, double>> top_terms;
  std::size_t size() const { return documents.size(); }
};

struct ClusterReport {
  Granularity granularity = Granularity::feature;
  std::size_t k_initial = 0;
  bool converged = false;
  std::size_t iterations = 0;
  double variance = 0.0;
  std::vector<ReportCluster> clusters;
  std::vector<std::string> flagged_empty;
  std::optional<std::vector<std::pair<std::size_t, double>>> k_curve;
};

enum class ReportFormat { json, csv };

inline constexpr std::size_t kMaxTopTerms = 10;

/// Assembles a report from a finished model. Documents are sorted within each
/// cluster and top terms are the heaviest mean dimensions (ties by name).
ClusterReport build_report(const CorpusMatrix& corpus, const ClusterModel& model,
                           std::optional<std::vector<std::pair<std::size_t, double>>> k_curve =
                               std::nullopt);

/// Canonical serialization: sorted keys, floats fixed at 6 decimals, LF
/// line endings. Identical reports give identical bytes.
std::string write_report(const ClusterReport& report, ReportFormat format);

/// Parses a JSON report produced by write_report. Throws IngestionError.
ClusterReport read_report_json(std::string_view text);

}  // namespace doccluster

#endif  // DOCCLUSTER_CORPUS_IO_HPP
