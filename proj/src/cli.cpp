#include "doccluster/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "doccluster/error.hpp"
#include "doccluster/text_pipeline.hpp"
#include "doccluster/vector_space.hpp"

namespace doccluster {

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes: 0 ok, 1 runtime error, 2 configuration error, 3 ingestion error "
    "(unreadable corpus, dictionary or stop-word file).";

}  // namespace

void RunConfig::validate() const {
  if (input_dir.empty()) throw ConfigError("--input-dir is required");
  if (k.has_value() == auto_k) throw ConfigError("exactly one of --k and --auto-k is required");
  if (k && *k < 2) throw ConfigError("--k must be at least 2");
  if (auto_k) {
    if (k_min < 2) throw ConfigError("--k-min must be at least 2");
    if (k_max && *k_max < k_min) throw ConfigError("--k-max must not be below --k-min");
  }
  if (granularity != Granularity::feature && !dictionary_path)
    throw ConfigError("--granularity " + std::string(to_string(granularity)) +
                      " requires --dictionary");
  if (dictionary_only && !dictionary_path)
    throw ConfigError("--dictionary-only requires --dictionary");
  if (max_iters < 1) throw ConfigError("--max-iters must be at least 1");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const auto warn = [&](const std::string& msg) { diag << "warning: " << msg << '\n'; };
  try {
    config.validate();

    const auto docs = ingest_directory(config.input_dir, config.extensions, warn);
    const auto stoplist = config.stopwords_path
                              ? StopList::parse(read_text_file(*config.stopwords_path))
                              : StopList::english();
    const auto dict = config.dictionary_path
                          ? DomainDictionary::load(read_text_file(*config.dictionary_path),
                                                   config.stemming)
                          : DomainDictionary{};

    std::vector<DocumentVector> raw;
    raw.reserve(docs.size());
    for (const auto& doc : docs) {
      auto table = build_term_table(doc.text, stoplist, config.stemming, doc.doc_id);
      if (config.dictionary_only && config.granularity == Granularity::feature)
        table = filter_to_dictionary(table, dict);
      raw.push_back(to_raw_vector(project_vector(table, dict, config.granularity),
                                  config.granularity));
    }
    const auto corpus = normalize_corpus(weigh_corpus(make_corpus(std::move(raw))));
    const auto n = corpus.vectors.size();

    ClusterModel model;
    std::optional<std::vector<std::pair<std::size_t, double>>> curve;
    if (config.auto_k) {
      const auto k_max = config.k_max.value_or(n);
      if (config.k_min > n || k_max > n)
        throw KOutOfRange(static_cast<long long>(config.k_min), static_cast<long long>(k_max),
                          static_cast<long long>(n));
      diag << "auto-k: running " << (k_max - config.k_min + 1) << " clustering passes (k = "
           << config.k_min << ".." << k_max << ")\n";
      auto selection = select_k(corpus, config.k_min, k_max, config.max_iters);
      model = std::move(selection.model);
      curve = std::move(selection.curve);
    } else {
      model = kmeans(corpus, *config.k, config.max_iters);
    }
    model.labels = label_clusters(corpus, model, dict, config.label_level);

    for (const auto& v : corpus.vectors)
      if (v.flagged_empty) warn(v.doc_id + ": empty vector after weighting");
    if (!model.converged)
      warn("k-means stopped after " + std::to_string(model.iterations) +
           " iterations without converging");

    const auto bytes = write_report(build_report(corpus, model, std::move(curve)), config.format);
    if (config.output_path == "-") {
      out << bytes;
      out.flush();
    } else {
      std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw Error("cannot write " + config.output_path);
      file << bytes;
      if (!file.flush()) throw Error("cannot write " + config.output_path);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IngestionError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitIngestion;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& diag) {
  CLI::App app{"Cluster a directory of flat text files with tf-idf vectors and k-means."};
  app.footer(kExitCodeHelp);

  RunConfig config;
  std::string input_dir;
  std::string dictionary;
  std::string stopwords;
  std::size_t k = 0;
  std::size_t k_max = 0;
  std::string format = "json";

  std::string granularity = "feature";
  std::string label_level = "parent_category";
  const std::vector<std::string> granularities{"feature", "subcategory", "parent_category"};

  app.add_option("--input-dir", input_dir, "Directory of documents")->required();
  auto* dict_opt = app.add_option("--dictionary", dictionary, "Domain dictionary file");
  auto* stop_opt =
      app.add_option("--stopwords", stopwords, "Stop-word file (default: built-in English list)");
  app.add_option("--granularity", granularity, "feature | subcategory | parent_category")
      ->check(CLI::IsMember(granularities));
  auto* k_opt = app.add_option("--k", k, "Number of initial bins");
  auto* auto_opt = app.add_flag("--auto-k", config.auto_k, "Pick k with the lowest E(k)");
  app.add_option("--k-min", config.k_min, "Smallest k tried with --auto-k")->needs(auto_opt);
  auto* kmax_opt = app.add_option("--k-max", k_max, "Largest k tried with --auto-k (default: N)")
                       ->needs(auto_opt);
  k_opt->excludes(auto_opt);
  app.add_flag("--stemming,!--no-stemming", config.stemming, "Inflectional stemming (default on)");
  app.add_flag("--dictionary-only", config.dictionary_only,
               "Keep only dictionary terms at feature granularity");
  app.add_option("--max-iters", config.max_iters, "k-means iteration cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", config.output_path, "Report path, '-' for stdout");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--label-level", label_level, "Category level used for cluster labels")
      ->check(CLI::IsMember(granularities));
  app.add_option("--extensions", config.extensions, "File extensions to ingest")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, diag);
    return code == 0 ? kExitOk : kExitConfig;
  }

  config.input_dir = input_dir;
  config.granularity = *parse_granularity(granularity);
  config.label_level = *parse_granularity(label_level);
  if (*dict_opt) config.dictionary_path = dictionary;
  if (*stop_opt) config.stopwords_path = stopwords;
  if (*k_opt) config.k = k;
  if (*kmax_opt) config.k_max = k_max;
  config.format = format == "csv" ? ReportFormat::csv : ReportFormat::json;
  return run(config, out, diag);
}

}  // namespace doccluster
