#include "doccluster/clustering.hpp"

#include <algorithm>
#include <numeric>

#include "doccluster/error.hpp"

namespace doccluster {

namespace {

void check_k(std::size_t k, std::size_t n) {
  if (k < 2 || k > n) throw KOutOfRange(static_cast<long long>(k), static_cast<long long>(n));
}

// Per-cluster raw and unit means for an assignment over `count` clusters.
void compute_means(const CorpusMatrix& corpus, const std::vector<std::size_t>& assignment,
                   std::size_t count, std::vector<DocumentVector>& means,
                   std::vector<DocumentVector>& unit_means) {
  std::vector<std::vector<const DocumentVector*>> groups(count);
  for (std::size_t i = 0; i < assignment.size(); ++i)
    groups[assignment[i]].push_back(&corpus.vectors[i]);
  means.clear();
  unit_means.clear();
  for (const auto& g : groups) {
    means.push_back(mean_vector(std::span<const DocumentVector* const>(g)));
    unit_means.push_back(normalize(means.back()).vector);
  }
}

// Renumbers clusters so that indices are contiguous, keeping relative order.
// Returns the new cluster count.
std::size_t compact(std::vector<std::size_t>& assignment, std::size_t count) {
  std::vector<bool> used(count, false);
  for (auto c : assignment) used[c] = true;
  std::vector<std::size_t> remap(count, 0);
  std::size_t next = 0;
  for (std::size_t c = 0; c < count; ++c)
    if (used[c]) remap[c] = next++;
  for (auto& c : assignment) c = remap[c];
  return next;
}

}  // namespace

std::map<std::string, std::size_t> ClusterModel::assignments() const {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < doc_ids.size(); ++i) out.emplace(doc_ids[i], assignment[i]);
  return out;
}

std::vector<std::vector<std::string>> ClusterModel::members() const {
  std::vector<std::vector<std::string>> out(cluster_count());
  for (std::size_t i = 0; i < doc_ids.size(); ++i) out[assignment[i]].push_back(doc_ids[i]);
  return out;
}

std::vector<std::vector<std::string>> initial_bins(const CorpusMatrix& corpus, std::size_t k) {
  const auto n = corpus.vectors.size();
  check_k(k, n);

  const auto global = mean_vector(std::span<const DocumentVector>(corpus.vectors));
  std::vector<std::pair<double, std::size_t>> ranked;
  ranked.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ranked.emplace_back(cosine(corpus.vectors[i], global), i);
  std::stable_sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return corpus.vectors[a.second].doc_id < corpus.vectors[b.second].doc_id;
  });

  std::vector<std::vector<std::string>> bins(k);
  const auto base = n / k;
  const auto extra = n % k;
  std::size_t pos = 0;
  for (std::size_t b = 0; b < k; ++b) {
    const auto size = base + (b < extra ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j, ++pos)
      bins[b].push_back(corpus.vectors[ranked[pos].second].doc_id);
  }
  return bins;
}

std::size_t nearest_mean(const DocumentVector& doc, const std::vector<DocumentVector>& unit_means) {
  std::size_t best = 0;
  double best_sim = -1.0;
  for (std::size_t c = 0; c < unit_means.size(); ++c) {
    const double sim = cosine(doc, unit_means[c]);
    if (sim > best_sim) {
      best_sim = sim;
      best = c;
    }
  }
  return best;
}

ClusterModel kmeans(const CorpusMatrix& corpus, std::size_t k, std::size_t max_iters) {
  const auto n = corpus.vectors.size();
  check_k(k, n);
  if (max_iters == 0) throw ConfigError("max_iters must be at least 1");

  std::map<std::string, std::size_t, std::less<>> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of.emplace(corpus.vectors[i].doc_id, i);
  if (index_of.size() != n) throw Error("duplicate doc_id in corpus");

  ClusterModel model;
  model.k_initial = k;
  model.assignment.assign(n, 0);
  {
    const auto bins = initial_bins(corpus, k);
    for (std::size_t b = 0; b < bins.size(); ++b)
      for (const auto& id : bins[b]) model.assignment[index_of.at(id)] = b;
  }
  std::size_t count = k;

  std::vector<std::size_t> next(n);
  while (model.iterations < max_iters) {
    ++model.iterations;
    compute_means(corpus, model.assignment, count, model.means, model.unit_means);
    for (std::size_t i = 0; i < n; ++i) next[i] = nearest_mean(corpus.vectors[i], model.unit_means);
    if (next == model.assignment) {
      model.converged = true;
      break;
    }
    model.assignment = next;
    count = compact(model.assignment, count);
  }
  if (!model.converged)
    compute_means(corpus, model.assignment, count, model.means, model.unit_means);

  model.doc_ids.reserve(n);
  for (const auto& v : corpus.vectors) model.doc_ids.push_back(v.doc_id);
  model.variance = variance(corpus, model);
  return model;
}

double variance(const CorpusMatrix& corpus, const ClusterModel& model) {
  const auto n = corpus.vectors.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += squared_distance(corpus.vectors[i], model.means[model.assignment[i]]);
  return sum / static_cast<double>(n);
}

KSelection select_k(const CorpusMatrix& corpus, std::size_t k_min, std::size_t k_max,
                    std::size_t max_iters) {
  const auto n = corpus.vectors.size();
  if (k_min < 2 || k_min > k_max || k_max > n)
    throw KOutOfRange(static_cast<long long>(k_min), static_cast<long long>(k_max),
                      static_cast<long long>(n));

  KSelection result;
  bool have_best = false;
  for (auto k = k_min; k <= k_max; ++k) {
    auto model = kmeans(corpus, k, max_iters);
    result.curve.emplace_back(k, model.variance);
    if (!have_best || model.variance < result.model.variance) {
      result.best_k = k;
      result.model = std::move(model);
      have_best = true;
    }
  }
  return result;
}

std::map<std::size_t, std::string> label_clusters(const CorpusMatrix& corpus,
                                                  const ClusterModel& model,
                                                  const DomainDictionary& dict,
                                                  Granularity level) {
  const auto space = corpus.vectors.empty() ? Granularity::feature
                                            : corpus.vectors.front().granularity;
  std::map<std::size_t, std::string> labels;
  for (std::size_t c = 0; c < model.cluster_count(); ++c) {
    const auto& mean = model.means[c];

    std::map<std::string, double> mass;
    if (level != Granularity::feature) {
      for (const auto& [dim, w] : mean.entries)
        if (auto cat = dict.category_of(dim, space, level)) mass[*cat] += w;
    }
    // Strict '>' over key-ordered maps keeps the smallest name on ties.
    const auto heaviest = [](const auto& weights) {
      std::string best;
      double best_w = -1.0;
      for (const auto& [name, w] : weights) {
        if (w > best_w) {
          best_w = w;
          best = name;
        }
      }
      return best;
    };
    if (!mass.empty()) {
      labels.emplace(c, heaviest(mass));
    } else if (!mean.entries.empty()) {
      labels.emplace(c, heaviest(mean.entries));
    } else {
      labels.emplace(c, "unlabeled");
    }
  }
  return labels;
}

}  // namespace doccluster
