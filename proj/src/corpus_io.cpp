#include "doccluster/corpus_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "doccluster/error.hpp"

namespace doccluster {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kReplacement = "\xEF\xBF\xBD";

// Length of the valid UTF-8 sequence starting at s[i], or 0 if invalid.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return 1;
  std::size_t len;
  unsigned char lo = 0x80, hi = 0xBF;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    len = 2;
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    len = 3;
    if (b0 == 0xE0) lo = 0xA0;
    if (b0 == 0xED) hi = 0x9F;
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    len = 4;
    if (b0 == 0xF0) lo = 0x90;
    if (b0 == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t j = 1; j < len; ++j) {
    const auto b = static_cast<unsigned char>(s[i + j]);
    const auto l = j == 1 ? lo : static_cast<unsigned char>(0x80);
    const auto h = j == 1 ? hi : static_cast<unsigned char>(0xBF);
    if (b < l || b > h) return 0;
  }
  return len;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string quote(const std::string& s) {
  return nlohmann::json(s).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::size_t sanitize_utf8(std::string& text) {
  std::size_t replaced = 0;
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto len = utf8_sequence_length(text, i);
    if (len == 0) {
      if (replaced == 0) {
        out.reserve(text.size() + 8);
        out.assign(text, 0, i);
      }
      out += kReplacement;
      ++replaced;
      ++i;
      continue;
    }
    if (replaced > 0) out.append(text, i, len);
    i += len;
  }
  if (replaced > 0) text = std::move(out);
  return replaced;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IngestionError("error reading " + path.string());
  return text;
}

std::vector<RawDocument> ingest_directory(const fs::path& root,
                                          const std::vector<std::string>& extensions,
                                          const WarningSink& warn) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw NotADirectory(root.string());

  const std::set<std::string> wanted(extensions.begin(), extensions.end());
  std::vector<RawDocument> docs;
  for (auto it = fs::recursive_directory_iterator(root, ec); !ec && it != fs::end(it);
       it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    const auto& path = it->path();
    if (!wanted.empty() && !wanted.contains(path.extension().string())) continue;

    RawDocument doc;
    doc.doc_id = path.lexically_relative(root).generic_string();
    doc.text = read_text_file(path);
    if (const auto n = sanitize_utf8(doc.text); n > 0 && warn)
      warn(doc.doc_id + ": replaced " + std::to_string(n) + " invalid UTF-8 byte(s)");
    docs.push_back(std::move(doc));
  }
  if (ec) throw IngestionError("cannot list " + root.string() + ": " + ec.message());
  if (docs.empty()) throw NoDocumentsFound(root.string());

  std::sort(docs.begin(), docs.end(),
            [](const RawDocument& a, const RawDocument& b) { return a.doc_id < b.doc_id; });
  return docs;
}

ClusterReport build_report(const CorpusMatrix& corpus, const ClusterModel& model,
                           std::optional<std::vector<std::pair<std::size_t, double>>> k_curve) {
  ClusterReport report;
  report.granularity =
      corpus.vectors.empty() ? Granularity::feature : corpus.vectors.front().granularity;
  report.k_initial = model.k_initial;
  report.converged = model.converged;
  report.iterations = model.iterations;
  report.variance = model.variance;
  report.k_curve = std::move(k_curve);

  auto members = model.members();
  for (std::size_t c = 0; c < model.cluster_count(); ++c) {
    ReportCluster cluster;
    const auto label = model.labels.find(c);
    cluster.label = label == model.labels.end() ? "cluster " + std::to_string(c) : label->second;
    cluster.documents = std::move(members[c]);
    std::sort(cluster.documents.begin(), cluster.documents.end());

    std::vector<std::pair<std::string, double>> terms(model.means[c].entries.begin(),
                                                      model.means[c].entries.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (terms.size() > kMaxTopTerms) terms.resize(kMaxTopTerms);
    cluster.top_terms = std::move(terms);
    report.clusters.push_back(std::move(cluster));
  }
  for (const auto& v : corpus.vectors)
    if (v.flagged_empty) report.flagged_empty.push_back(v.doc_id);
  std::sort(report.flagged_empty.begin(), report.flagged_empty.end());
  return report;
}

std::string write_report(const ClusterReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "cluster,doc_id\n";
    for (const auto& c : report.clusters)
      for (const auto& d : c.documents) out << csv_field(c.label) << ',' << csv_field(d) << '\n';
    return out.str();
  }

  out << "{\n  \"clusters\": [";
  for (std::size_t i = 0; i < report.clusters.size(); ++i) {
    const auto& c = report.clusters[i];
    out << (i ? ",\n" : "\n") << "    {\n      \"documents\": [";
    for (std::size_t j = 0; j < c.documents.size(); ++j)
      out << (j ? ", " : "") << quote(c.documents[j]);
    out << "],\n      \"label\": " << quote(c.label) << ",\n      \"size\": " << c.size()
        << ",\n      \"top_terms\": [";
    for (std::size_t j = 0; j < c.top_terms.size(); ++j)
      out << (j ? ", " : "") << '[' << quote(c.top_terms[j].first) << ", "
          << format_double(c.top_terms[j].second) << ']';
    out << "]\n    }";
  }
  out << (report.clusters.empty() ? "],\n" : "\n  ],\n");
  out << "  \"converged\": " << (report.converged ? "true" : "false") << ",\n";
  out << "  \"flagged_empty\": [";
  for (std::size_t j = 0; j < report.flagged_empty.size(); ++j)
    out << (j ? ", " : "") << quote(report.flagged_empty[j]);
  out << "],\n";
  out << "  \"granularity\": " << quote(std::string(to_string(report.granularity))) << ",\n";
  out << "  \"iterations\": " << report.iterations << ",\n";
  out << "  \"k_curve\": ";
  if (report.k_curve) {
    out << '[';
    for (std::size_t j = 0; j < report.k_curve->size(); ++j)
      out << (j ? ", " : "") << '[' << (*report.k_curve)[j].first << ", "
          << format_double((*report.k_curve)[j].second) << ']';
    out << ']';
  } else {
    out << "null";
  }
  out << ",\n";
  out << "  \"k_initial\": " << report.k_initial << ",\n";
  out << "  \"variance\": " << format_double(report.variance) << "\n}\n";
  return out.str();
}

ClusterReport read_report_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ClusterReport r;
    const auto g = parse_granularity(j.at("granularity").get<std::string>());
    if (!g) throw IngestionError("unknown granularity in report");
    r.granularity = *g;
    r.k_initial = j.at("k_initial").get<std::size_t>();
    r.converged = j.at("converged").get<bool>();
    r.iterations = j.at("iterations").get<std::size_t>();
    r.variance = j.at("variance").get<double>();
    for (const auto& c : j.at("clusters")) {
      ReportCluster cluster;
      cluster.label = c.at("label").get<std::string>();
      cluster.documents = c.at("documents").get<std::vector<std::string>>();
      for (const auto& t : c.at("top_terms"))
        cluster.top_terms.emplace_back(t.at(0).get<std::string>(), t.at(1).get<double>());
      if (c.at("size").get<std::size_t>() != cluster.documents.size())
        throw IngestionError("cluster size does not match its document list");
      r.clusters.push_back(std::move(cluster));
    }
    r.flagged_empty = j.at("flagged_empty").get<std::vector<std::string>>();
    if (!j.at("k_curve").is_null()) {
      std::vector<std::pair<std::size_t, double>> curve;
      for (const auto& p : j.at("k_curve"))
        curve.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<double>());
      r.k_curve = std::move(curve);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace doccluster
