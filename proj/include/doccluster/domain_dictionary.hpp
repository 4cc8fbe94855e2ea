#ifndef DOCCLUSTER_DOMAIN_DICTIONARY_HPP
#define DOCCLUSTER_DOMAIN_DICTIONARY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "doccluster/text_pipeline.hpp"

namespace doccluster {

/// Dimension space a document vector lives in.
enum class Granularity { feature, subcategory, parent_category };

std::string_view to_string(Granularity g);
/// Accepts "feature", "subcategory", "parent_category".
std::optional<Granularity> parse_granularity(std::string_view name);

/// Root-first category names ending with the term itself.
struct CategoryPath {
  std::vector<std::string> segments;

  const std::string& term() const { return segments.back(); }
  const std::string& subcategory() const { return segments[segments.size() - 2]; }
  const std::string& parent_category() const { return segments.front(); }
  std::string joined() const;

  auto operator<=>(const CategoryPath&) const = default;
};

struct TermCategories {
  std::string subcategory;
  std::string parent_category;

  bool operator==(const TermCategories&) const = default;
};

/// Hierarchical term taxonomy. Each term belongs to exactly one path; its
/// subcategory is the immediate parent in that path and its parent category
/// is the root. Immutable once loaded.
class DomainDictionary {
 public:
  DomainDictionary() = default;

  /// Parses one '/'-separated path per line. Segments are trimmed and
  /// lowercased; the final segment must be a single token. When `stem_terms`
  /// is set, terms are run through the standard stemmer so they line up with
  /// stemmed documents.
  ///
  /// Throws MalformedLine for paths with fewer than two segments, empty
  /// segments, or multi-token terms; DuplicateTerm when a term lands in two
  /// different paths.
  static DomainDictionary load(std::string_view text, bool stem_terms = false);

  std::optional<TermCategories> map_term(std::string_view term) const;

  /// Category of `dimension` at `level`, where `dimension` is a dimension of a
  /// vector at granularity `space`. Returns nullopt when the dimension is not
  /// covered, or when `level` is finer than `space` and cannot be recovered
  /// (a parent category has no single subcategory, so the parent is returned
  /// instead).
  std::optional<std::string> category_of(std::string_view dimension, Granularity space,
                                         Granularity level) const;

  bool empty() const { return term_index_.empty(); }
  std::size_t term_count() const { return term_index_.size(); }
  /// Number of distinct subcategories.
  std::size_t subcategory_count() const { return subcategory_parents_.size(); }
  const std::set<CategoryPath>& paths() const { return paths_; }
  const std::map<std::string, TermCategories, std::less<>>& term_index() const {
    return term_index_;
  }

 private:
  std::set<CategoryPath> paths_;
  std::map<std::string, TermCategories, std::less<>> term_index_;
  std::map<std::string, std::set<std::string>, std::less<>> subcategory_parents_;
  std::set<std::string, std::less<>> parent_categories_;
};

/// Re-expresses a term table at granularity `g`. Subcategory and parent
/// projections sum the frequencies of all covered terms per category and drop
/// terms missing from the dictionary. `feature` returns the table unchanged.
TermTable project_vector(const TermTable& table, const DomainDictionary& dict, Granularity g);

/// Drops terms the dictionary does not cover (local-dictionary reduction).
TermTable filter_to_dictionary(const TermTable& table, const DomainDictionary& dict);

}  // namespace doccluster

#endif  // DOCCLUSTER_DOMAIN_DICTIONARY_HPP
