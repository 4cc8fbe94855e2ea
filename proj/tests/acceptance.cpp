// Acceptance suite: one line per criterion, non-zero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doccluster/cli.hpp"
#include "doccluster/clustering.hpp"
#include "doccluster/corpus_io.hpp"
#include "doccluster/text_pipeline.hpp"
#include "doccluster/vector_space.hpp"
#include "test_support.hpp"

using namespace doccluster;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  if (!out.pass) ++failures;
  std::printf("[%s] %2d. %s%s%s\n", out.pass ? "PASS" : "FAIL", id, title,
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
}

DocumentVector random_vector(std::mt19937_64& rng, const std::string& id, int dims) {
  std::uniform_int_distribution<int> count(1, 30);
  std::uniform_int_distribution<int> dim(0, dims - 1);
  std::uniform_real_distribution<double> weight(1e-3, 100.0);
  std::map<std::string, double> e;
  for (int j = count(rng); j > 0; --j) e["t" + std::to_string(dim(rng))] = weight(rng);
  return testing::vec(id, e);
}

double eq3_norm(const DocumentVector& v) {
  double s = 0;
  for (const auto& kv : v.entries) s += kv.second * kv.second;
  return std::sqrt(s);
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() /
           ("doccluster_acc_" + tag + "_" + std::to_string(std::random_device{}()));
  fs::create_directories(p);
  return p;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"doccluster"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
  criterion(1, "tf-idf worked example (N=3): 35.094 and 47.547 within 0.01", [] {
    Outcome o;
    const double computer = tf_idf_weight(60, 2, 3);
    const double java = tf_idf_weight(30, 1, 3);
    o.require(std::abs(computer - 35.094) <= 0.01, "w_computer = " + std::to_string(computer));
    o.require(std::abs(java - 47.547) <= 0.01, "w_java = " + std::to_string(java));
    // Same values through the corpus path.
    const auto w = weigh_corpus(make_corpus(
        {testing::vec("doc1", {{"computer", 60}, {"java", 30}}, Stage::raw),
         testing::vec("doc2", {{"computer", 55}, {"pascal", 20}}, Stage::raw),
         testing::vec("doc3", {{"graphic", 24}, {"database", 99}}, Stage::raw)}));
    o.require(std::abs(w.vectors[0].weight("computer") - 35.094) <= 0.01, "corpus computer");
    o.require(std::abs(w.vectors[0].weight("java") - 47.547) <= 0.01, "corpus java");
    return o;
  });

  criterion(2, "unit norm: 1,000 random vectors re-measure to 1 +/- 1e-9", [] {
    Outcome o;
    std::mt19937_64 rng(2);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto u = normalize(random_vector(rng, "v", 200)).vector;
      worst = std::max(worst, std::abs(eq3_norm(u) - 1.0));
      o.require(u.stage == Stage::unit && !u.flagged_empty, "vector " + std::to_string(i));
    }
    o.require(worst <= 1e-9, "worst deviation " + std::to_string(worst));
    return o;
  });

  criterion(3, "cosine: symmetry, self = 1, disjoint = 0, bounds on 1,000 pairs", [] {
    Outcome o;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
      const auto a = normalize(random_vector(rng, "a", 60)).vector;
      const auto b = normalize(random_vector(rng, "b", 60)).vector;
      const double ab = cosine(a, b);
      o.require(ab == cosine(b, a), "asymmetric pair " + std::to_string(i));
      o.require(ab >= 0.0 && ab <= 1.0 + 1e-9, "out of bounds " + std::to_string(ab));
      o.require(std::abs(cosine(a, a) - 1.0) <= 1e-9, "self similarity");

      DocumentVector shifted = b;
      shifted.entries.clear();
      for (const auto& [k, w] : b.entries) shifted.entries.emplace("x" + k, w);
      o.require(cosine(a, shifted) == 0.0, "disjoint support");
    }
    return o;
  });

  criterion(4, "JAVA vs PASCAL: feature cosine = 0, subcategory cosine > 0.9", [] {
    Outcome o;
    const auto dict =
        DomainDictionary::load(read_text_file(testing::data_file("cs.dict")), true);
    const auto feature = testing::unit_corpus_from_dir(testing::fixture("java_pascal"),
                                                       Granularity::feature, dict);
    const auto sub = testing::unit_corpus_from_dir(testing::fixture("java_pascal"),
                                                   Granularity::subcategory, dict);
    const auto find = [](const CorpusMatrix& c, const std::string& id) -> const DocumentVector& {
      return *std::find_if(c.vectors.begin(), c.vectors.end(),
                           [&](const auto& v) { return v.doc_id == id; });
    };
    const double f = cosine(find(feature, "java.txt"), find(feature, "pascal.txt"));
    const double s = cosine(find(sub, "java.txt"), find(sub, "pascal.txt"));
    o.require(f == 0.0, "feature cosine " + std::to_string(f));
    o.require(s > 0.9, "subcategory cosine " + std::to_string(s));
    o.detail = "feature " + std::to_string(f) + ", subcategory " + std::to_string(s);
    if (!o.pass) o.detail = "FAILED: " + o.detail;
    return o;
  });

  criterion(5, "E(k) matches dense brute force to 1e-9 on 100 random corpora", [] {
    Outcome o;
    std::mt19937_64 rng(5);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
      const auto docs = testing::random_raw_corpus(rng, 2, 10, 20);
      const auto corpus = normalize_corpus(weigh_corpus(testing::raw_corpus(docs)));
      std::uniform_int_distribution<std::size_t> pick(2, corpus.vectors.size());
      const auto model = kmeans(corpus, pick(rng));
      std::vector<oracle::Sparse> sparse;
      for (const auto& v : corpus.vectors) sparse.push_back(testing::to_sparse(v));
      worst = std::max(worst, std::abs(variance(corpus, model) -
                                       oracle::variance(sparse, model.assignment)));
    }
    o.require(worst <= 1e-9, "worst difference " + std::to_string(worst));
    return o;
  });

  criterion(6, "two-topic fixture, k=2: exact topic partition, converged within 10 iterations, < 1 s", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto corpus = testing::unit_corpus_from_dir(testing::fixture("two_topic"));
    const auto model = kmeans(corpus, 2);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(corpus.vectors.size() == 10, "fixture size");
    o.require(model.converged, "not converged");
    o.require(model.iterations <= 10, "iterations " + std::to_string(model.iterations));
    o.require(model.cluster_count() == 2, "clusters " + std::to_string(model.cluster_count()));
    for (const auto& members : model.members()) {
      const bool db = members.front().starts_with("db");
      for (const auto& id : members) o.require(id.starts_with("db") == db, "mixed cluster");
    }
    o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    return o;
  });

  criterion(7, "empty-bin shrinkage: k_initial = N ends with fewer clusters", [] {
    Outcome o;
    const auto corpus = testing::unit_corpus_from_dir(testing::fixture("cs_corpus"));
    const auto n = corpus.vectors.size();
    const auto model = kmeans(corpus, n);
    o.require(model.cluster_count() < n, "clusters " + std::to_string(model.cluster_count()));
    const auto dict =
        DomainDictionary::load(read_text_file(testing::data_file("cs.dict")), true);
    const auto parents = testing::unit_corpus_from_dir(testing::fixture("cs_corpus"),
                                                       Granularity::parent_category, dict);
    const auto coarse = kmeans(parents, n);
    o.require(coarse.cluster_count() < n, "parent clusters " + std::to_string(coarse.cluster_count()));
    if (o.pass)
      o.detail = "N = " + std::to_string(n) + ": feature " + std::to_string(model.cluster_count()) +
                 " clusters, parent_category " + std::to_string(coarse.cluster_count());
    return o;
  });

  criterion(8, "termination, partition and fixed point on 100 random corpora", [] {
    Outcome o;
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
      const auto docs = testing::random_raw_corpus(rng, 2, 10, 20);
      const auto corpus = normalize_corpus(weigh_corpus(testing::raw_corpus(docs)));
      std::uniform_int_distribution<std::size_t> pick(2, corpus.vectors.size());
      const std::size_t max_iters = 1 + t % 20;
      const auto model = kmeans(corpus, pick(rng), max_iters);
      o.require(model.iterations <= max_iters, "exceeded max_iters");
      o.require(model.assignment.size() == corpus.vectors.size(), "assignment size");
      std::vector<std::size_t> sizes(model.cluster_count(), 0);
      for (auto c : model.assignment) {
        o.require(c < model.cluster_count(), "index out of range");
        if (c < sizes.size()) ++sizes[c];
      }
      for (auto s : sizes) o.require(s > 0, "empty cluster");
      if (model.converged) {
        for (std::size_t i = 0; i < corpus.vectors.size(); ++i)
          o.require(nearest_mean(corpus.vectors[i], model.unit_means) == model.assignment[i],
                    "converged model is not a fixed point");
      }
    }
    return o;
  });

  criterion(9, "stemmer idempotence and hash-table counting on fixtures + 1,000 streams", [] {
    Outcome o;
    std::vector<std::string> fixture_tokens;
    for (const auto& dir : {"two_topic", "two_topic_small", "java_pascal", "cs_corpus"})
      for (const auto& doc : ingest_directory(testing::fixture(dir))) {
        for (const auto& t : tokenize(doc.text)) fixture_tokens.push_back(t);
        const auto table = build_term_table(doc.text, StopList::english(), true);
        std::vector<std::string> kept;
        for (const auto& t : tokenize(doc.text))
          if (!StopList::english().contains(t)) kept.push_back(stem(t));
        const auto expected = oracle::recount(kept);
        o.require(std::equal(table.entries.begin(), table.entries.end(), expected.begin(),
                             expected.end(),
                             [](const auto& a, const auto& b) {
                               return a.first == b.first && a.second == b.second;
                             }),
                  "count mismatch in " + doc.doc_id);
      }
    for (const auto& t : tokenize(read_text_file(testing::data_file("cs.dict"))))
      fixture_tokens.push_back(t);
    for (const auto& t : fixture_tokens) o.require(stem(stem(t)) == stem(t), "not idempotent: " + t);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> len(0, 80), pick(0, fixture_tokens.size() - 1);
    std::uniform_int_distribution<int> letter('a', 'z'), wlen(1, 12);
    std::bernoulli_distribution synthetic(0.3);
    for (int s = 0; s < 1000; ++s) {
      std::vector<std::string> stream;
      for (auto n = len(rng); n > 0; --n) {
        if (synthetic(rng)) {
          std::string w;
          for (int c = wlen(rng); c > 0; --c) w.push_back(static_cast<char>(letter(rng)));
          stream.push_back(w);
        } else {
          stream.push_back(fixture_tokens[pick(rng)]);
        }
      }
      std::string text;
      for (const auto& w : stream) text += w + " ";
      const auto table = build_term_table(text, StopList{}, false);
      const auto expected = oracle::recount(stream);
      o.require(table.entries.size() == expected.size(), "distinct count");
      for (const auto& [term, f] : table.entries)
        o.require(expected.count(term) && expected.at(term) == f, "count of " + term);
      for (const auto& w : stream) o.require(stem(stem(w)) == stem(w), "not idempotent: " + w);
    }
    return o;
  });

  criterion(10, "end-to-end determinism: repeated and ingestion-shuffled CLI runs are byte-identical", [] {
    Outcome o;
    const auto work = temp_dir("e2e");
    const auto source = testing::fixture("cs_corpus");
    const auto dict = testing::data_file("cs.dict").string();
    const std::vector<std::string> common{"--dictionary", dict, "--granularity", "subcategory",
                                          "--auto-k"};
    const auto run_to = [&](const fs::path& input, const fs::path& out) {
      auto args = common;
      args.insert(args.end(), {"--input-dir", input.string(), "--output", out.string()});
      return run_cli(args);
    };
    o.require(run_to(source, work / "a.json") == kExitOk, "first run failed");
    o.require(run_to(source, work / "b.json") == kExitOk, "second run failed");
    const auto a = read_all(work / "a.json");
    o.require(!a.empty() && a == read_all(work / "b.json"), "repeat runs differ");

    // Copy the corpus file by file in shuffled order into a fresh directory.
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(source)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::shuffle(files.begin(), files.end(), std::mt19937_64(10));
    std::reverse(files.begin(), files.end());
    const auto shuffled = work / "shuffled";
    fs::create_directories(shuffled);
    for (const auto& f : files) fs::copy_file(f, shuffled / f.filename());
    o.require(run_to(shuffled, work / "c.json") == kExitOk, "shuffled run failed");
    o.require(a == read_all(work / "c.json"), "shuffled ingestion changed the report");

    fs::remove_all(work);
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures == 0 ? 0 : 1;
}
