#ifndef DOCCLUSTER_VECTOR_SPACE_HPP
#define DOCCLUSTER_VECTOR_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doccluster/domain_dictionary.hpp"
#include "doccluster/text_pipeline.hpp"

namespace doccluster {

/// Weighting stage of a document vector.
///   raw    - integer term frequencies
///   tfidf  - tf * log2(N / df) weights, or any other unnormalized weights
///   unit   - tfidf divided by its Euclidean norm
enum class Stage { raw, tfidf, unit };

std::string_view to_string(Stage s);

/// Sparse dimension -> weight map. Keys are kept sorted, so every summation
/// over dimensions runs in the same order and results are bit-reproducible.
/// Zero weights are never stored.
struct DocumentVector {
  std::string doc_id;
  Granularity granularity = Granularity::feature;
  Stage stage = Stage::raw;
  std::map<std::string, double, std::less<>> entries;
  /// Set when weighting or normalization left the vector with no dimensions.
  bool flagged_empty = false;

  double weight(std::string_view dimension) const;
  bool operator==(const DocumentVector&) const = default;
};

/// A corpus of vectors sharing one granularity and stage, ordered by doc_id,
/// with document frequencies for every dimension present.
struct CorpusMatrix {
  std::vector<DocumentVector> vectors;
  std::size_t n_docs = 0;
  std::map<std::string, std::int64_t, std::less<>> df;
};

DocumentVector to_raw_vector(const TermTable& table, Granularity g);

/// Sorts vectors by doc_id and counts document frequencies.
CorpusMatrix make_corpus(std::vector<DocumentVector> vectors);

/// tf * log2(n_docs / df). Throws DfOutOfRange unless 1 <= df <= n_docs.
double tf_idf_weight(double tf, std::int64_t df, std::int64_t n_docs);

/// Replaces raw counts by tf-idf weights. Dimensions present in every
/// document weigh zero everywhere and are removed from all vectors and from
/// the df table. Vectors left with no dimensions are flagged empty.
/// Throws EmptyCorpus when there are no vectors.
CorpusMatrix weigh_corpus(const CorpusMatrix& raw);

/// Euclidean norm, summed in key order.
double norm(const DocumentVector& v);

struct Normalized {
  DocumentVector vector;
  double norm = 0.0;
};

/// Divides by the Euclidean norm. A zero vector comes back flagged empty with
/// norm 0.
Normalized normalize(const DocumentVector& v);

/// Normalizes every vector of a tf-idf corpus.
CorpusMatrix normalize_corpus(const CorpusMatrix& weighted);

/// Dot product over shared dimensions, walked in key order.
double dot(const DocumentVector& a, const DocumentVector& b);

/// Cosine similarity. Unit vectors are multiplied directly; any other stage is
/// divided by both norms. Flagged-empty or zero vectors score 0.
double cosine(const DocumentVector& a, const DocumentVector& b);

/// Component-wise mean; absent dimensions count as zero. The mean of unit
/// vectors is not unit, so it is tagged `tfidf`. Throws EmptyInput.
DocumentVector mean_vector(std::span<const DocumentVector> vs);
DocumentVector mean_vector(std::span<const DocumentVector* const> vs);

/// Squared Euclidean distance over the union of dimensions.
double squared_distance(const DocumentVector& a, const DocumentVector& b);

}  // namespace doccluster

#endif  // DOCCLUSTER_VECTOR_SPACE_HPP
