#include "doccluster/vector_space.hpp"

#include <algorithm>
#include <cmath>

#include "doccluster/error.hpp"

namespace doccluster {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::raw:
      return "raw";
    case Stage::tfidf:
      return "tfidf";
    case Stage::unit:
      return "unit";
  }
  return "raw";
}

double DocumentVector::weight(std::string_view dimension) const {
  const auto it = entries.find(dimension);
  return it == entries.end() ? 0.0 : it->second;
}

DocumentVector to_raw_vector(const TermTable& table, Granularity g) {
  DocumentVector v;
  v.doc_id = table.doc_id;
  v.granularity = g;
  v.stage = Stage::raw;
  for (const auto& [term, freq] : table.entries)
    if (freq > 0) v.entries.emplace(term, static_cast<double>(freq));
  v.flagged_empty = v.entries.empty();
  return v;
}

CorpusMatrix make_corpus(std::vector<DocumentVector> vectors) {
  std::stable_sort(vectors.begin(), vectors.end(),
                   [](const DocumentVector& a, const DocumentVector& b) { return a.doc_id < b.doc_id; });
  CorpusMatrix corpus;
  corpus.n_docs = vectors.size();
  for (const auto& v : vectors)
    for (const auto& [dim, w] : v.entries) ++corpus.df[dim];
  corpus.vectors = std::move(vectors);
  return corpus;
}

double tf_idf_weight(double tf, std::int64_t df, std::int64_t n_docs) {
  if (df < 1 || df > n_docs) throw DfOutOfRange(df, n_docs);
  return tf * std::log2(static_cast<double>(n_docs) / static_cast<double>(df));
}

CorpusMatrix weigh_corpus(const CorpusMatrix& raw) {
  if (raw.vectors.empty()) throw EmptyCorpus();
  const auto n = static_cast<std::int64_t>(raw.vectors.size());

  std::map<std::string, std::int64_t, std::less<>> df;
  for (const auto& v : raw.vectors)
    for (const auto& [dim, w] : v.entries) ++df[dim];

  CorpusMatrix out;
  out.n_docs = raw.vectors.size();
  out.vectors.reserve(raw.vectors.size());
  for (const auto& v : raw.vectors) {
    DocumentVector w;
    w.doc_id = v.doc_id;
    w.granularity = v.granularity;
    w.stage = Stage::tfidf;
    for (const auto& [dim, tf] : v.entries) {
      const auto d = df.at(dim);
      if (d == n) continue;
      w.entries.emplace_hint(w.entries.end(), dim, tf_idf_weight(tf, d, n));
    }
    w.flagged_empty = w.entries.empty();
    out.vectors.push_back(std::move(w));
  }
  for (const auto& [dim, d] : df)
    if (d < n) out.df.emplace_hint(out.df.end(), dim, d);
  return out;
}

double norm(const DocumentVector& v) {
  double sum = 0.0;
  for (const auto& [dim, w] : v.entries) sum += w * w;
  return std::sqrt(sum);
}

Normalized normalize(const DocumentVector& v) {
  Normalized out;
  out.vector.doc_id = v.doc_id;
  out.vector.granularity = v.granularity;
  out.vector.stage = Stage::unit;
  out.norm = norm(v);
  if (out.norm == 0.0) {
    out.vector.flagged_empty = true;
    return out;
  }
  for (const auto& [dim, w] : v.entries) {
    const double x = w / out.norm;
    if (x != 0.0) out.vector.entries.emplace_hint(out.vector.entries.end(), dim, x);
  }
  return out;
}

CorpusMatrix normalize_corpus(const CorpusMatrix& weighted) {
  CorpusMatrix out;
  out.n_docs = weighted.n_docs;
  out.df = weighted.df;
  out.vectors.reserve(weighted.vectors.size());
  for (const auto& v : weighted.vectors) out.vectors.push_back(normalize(v).vector);
  return out;
}

double dot(const DocumentVector& a, const DocumentVector& b) {
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double cosine(const DocumentVector& a, const DocumentVector& b) {
  if (a.flagged_empty || b.flagged_empty || a.entries.empty() || b.entries.empty()) return 0.0;
  const double d = dot(a, b);
  if (a.stage == Stage::unit && b.stage == Stage::unit) return d;
  const double na = a.stage == Stage::unit ? 1.0 : norm(a);
  const double nb = b.stage == Stage::unit ? 1.0 : norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return d / (na * nb);
}

DocumentVector mean_vector(std::span<const DocumentVector* const> vs) {
  if (vs.empty()) throw EmptyInput();
  DocumentVector out;
  out.granularity = vs.front()->granularity;
  out.stage = vs.front()->stage == Stage::unit ? Stage::tfidf : vs.front()->stage;
  if (vs.size() == 1) out.doc_id = vs.front()->doc_id;
  for (const auto* v : vs)
    for (const auto& [dim, w] : v->entries) out.entries[dim] += w;
  const auto count = static_cast<double>(vs.size());
  for (auto it = out.entries.begin(); it != out.entries.end();) {
    it->second /= count;
    it = it->second == 0.0 ? out.entries.erase(it) : std::next(it);
  }
  out.flagged_empty = out.entries.empty();
  return out;
}

DocumentVector mean_vector(std::span<const DocumentVector> vs) {
  std::vector<const DocumentVector*> ptrs;
  ptrs.reserve(vs.size());
  for (const auto& v : vs) ptrs.push_back(&v);
  return mean_vector(std::span<const DocumentVector* const>(ptrs));
}

double squared_distance(const DocumentVector& a, const DocumentVector& b) {
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    double diff;
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      diff = ia->second;
      ++ia;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      diff = ib->second;
      ++ib;
    } else {
      diff = ia->second - ib->second;
      ++ia;
      ++ib;
    }
    sum += diff * diff;
  }
  return sum;
}

}  // namespace doccluster
