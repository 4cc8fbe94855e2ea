#ifndef DOCCLUSTER_TEXT_PIPELINE_HPP
#define DOCCLUSTER_TEXT_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace doccluster {

/// Tokens longer than this are truncated.
inline constexpr std::size_t kMaxTokenLength = 64;

/// Sparse term -> occurrence count for one document.
struct TermTable {
  std::string doc_id;
  std::map<std::string, std::int64_t> entries;

  std::int64_t total() const;
  bool operator==(const TermTable&) const = default;
};

/// Exact-match set of lowercase surface forms, applied before stemming.
class StopList {
 public:
  StopList() = default;
  explicit StopList(std::set<std::string> words);

  /// Parses the stop-word file format: one word per line, '#' comments and
  /// blank lines skipped, case-insensitive.
  static StopList parse(std::string_view text);
  /// The shipped default list.
  static const StopList& english();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

/// Splits text into lowercase tokens. A token is a maximal run of ASCII
/// letters and digits, where single hyphens or apostrophes between two
/// alphanumerics stay inside the token. Everything else separates tokens.
std::vector<std::string> tokenize(std::string_view text);

/// Rule-based inflectional stemmer (plural, -ing and -ed suffixes).
///
/// Ordered rules, first match wins, each requiring at least three characters
/// left once the suffix is removed:
///   1. sses -> ss
///   2. ies  -> y
///   3. ied  -> y
///   4. s    -> (removed) unless the word ends in ss, us or is
///   5. ing  -> (removed), then undouble a final doubled consonant (not l/s/z),
///              else restore a silent e for listed consonant-vowel-consonant stems
///   6. ed   -> as rule 5; not applied to -eed endings
/// Rules 5 and 6 also need a vowel in the remaining stem. Rules are applied
/// until none matches, so stemming is idempotent (meetings -> meet).
class InflectionalStemmer {
 public:
  /// `restore_list` holds stems (without the 'e') that regain a silent e.
  explicit InflectionalStemmer(std::set<std::string> restore_list = {});

  static InflectionalStemmer parse_restore_list(std::string_view text);
  /// Stemmer using the shipped restore-list fixture.
  static const InflectionalStemmer& standard();

  std::string stem(std::string_view token) const;

 private:
  bool apply_one(std::string& word) const;
  void finish_suffix_strip(std::string& word) const;

  std::set<std::string, std::less<>> restore_list_;
};

/// Stems with the standard stemmer.
std::string stem(std::string_view token);

/// tokenize -> drop stop words -> optionally stem -> count.
TermTable build_term_table(std::string_view text, const StopList& stoplist,
                           bool stemming, std::string doc_id = {});

}  // namespace doccluster

#endif  // DOCCLUSTER_TEXT_PIPELINE_HPP
