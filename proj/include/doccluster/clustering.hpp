#ifndef DOCCLUSTER_CLUSTERING_HPP
#define DOCCLUSTER_CLUSTERING_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doccluster/domain_dictionary.hpp"
#include "doccluster/vector_space.hpp"

namespace doccluster {

inline constexpr std::size_t kDefaultMaxIters = 100;

/// Result of one k-Means run over a unit-normalized corpus.
///
/// Clusters are indexed 0..cluster_count()-1 with no gaps and no empty
/// cluster. `assignment[i]` is the cluster of `corpus.vectors[i]`.
struct ClusterModel {
  std::size_t k_initial = 0;
  std::vector<std::string> doc_ids;
  std::vector<std::size_t> assignment;
  /// Plain average of member vectors; used for E(k) and reporting.
  std::vector<DocumentVector> means;
  /// `means` renormalized to unit length; used for similarity.
  std::vector<DocumentVector> unit_means;
  double variance = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::map<std::size_t, std::string> labels;

  std::size_t cluster_count() const { return means.size(); }
  /// doc_id -> cluster index.
  std::map<std::string, std::size_t> assignments() const;
  /// Member doc_ids of each cluster, in corpus order.
  std::vector<std::vector<std::string>> members() const;
};

/// Seeds k bins: documents are ranked by cosine similarity to the corpus mean
/// (descending, ties by doc_id) and the ranking is cut into k contiguous
/// slices whose sizes differ by at most one, larger slices first.
/// Throws KOutOfRange unless 2 <= k <= N.
std::vector<std::vector<std::string>> initial_bins(const CorpusMatrix& corpus, std::size_t k);

/// Index of the most similar mean for `doc`; ties go to the lowest index.
std::size_t nearest_mean(const DocumentVector& doc, const std::vector<DocumentVector>& unit_means);

/// Batch k-Means from initial_bins. Each pass recomputes bin means, moves
/// every document to its most similar mean at once, and drops bins left
/// empty. Stops when nothing moves (converged) or after `max_iters` passes.
ClusterModel kmeans(const CorpusMatrix& corpus, std::size_t k,
                    std::size_t max_iters = kDefaultMaxIters);

/// Mean squared Euclidean distance from each document to its raw cluster mean.
double variance(const CorpusMatrix& corpus, const ClusterModel& model);

struct KSelection {
  std::size_t best_k = 0;
  ClusterModel model;
  std::vector<std::pair<std::size_t, double>> curve;
};

/// Runs kmeans for every k in [k_min, k_max] and keeps the lowest E(k),
/// preferring the smaller k on ties.
KSelection select_k(const CorpusMatrix& corpus, std::size_t k_min, std::size_t k_max,
                    std::size_t max_iters = kDefaultMaxIters);

/// Names each cluster after the dictionary category (at `level`) holding the
/// most mean weight, ties to the lexicographically smallest name. Clusters
/// with no covered dimension fall back to their heaviest dimension.
std::map<std::size_t, std::string> label_clusters(const CorpusMatrix& corpus,
                                                  const ClusterModel& model,
                                                  const DomainDictionary& dict,
                                                  Granularity level);

}  // namespace doccluster

#endif  // DOCCLUSTER_CLUSTERING_HPP
