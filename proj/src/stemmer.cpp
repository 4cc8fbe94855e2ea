#include <string>
#include <utility>

#include "doccluster/text_pipeline.hpp"

namespace doccluster {

namespace fixtures {
extern const char* const default_restore_list_text;
}

namespace {

constexpr std::size_t kMinStem = 3;

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }
bool is_alnum(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }
bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

// Remaining stem after dropping `suffix_len` characters must be long enough
// and end in an alphanumeric, so no rule exposes a trailing joiner.
bool stem_ok(std::string_view word, std::size_t suffix_len) {
  if (word.size() < suffix_len + kMinStem) return false;
  return is_alnum(word[word.size() - suffix_len - 1]);
}

bool has_vowel(std::string_view stem) {
  for (char c : stem)
    if (is_vowel(c) || c == 'y') return true;
  return false;
}

// consonant, single vowel, consonant at the end of the stem.
bool ends_cvc(std::string_view s) {
  const auto n = s.size();
  if (n < 2) return false;
  if (!is_consonant(s[n - 1]) || !is_vowel(s[n - 2])) return false;
  return n == 2 || !is_vowel(s[n - 3]);
}

}  // namespace

InflectionalStemmer::InflectionalStemmer(std::set<std::string> restore_list)
    : restore_list_(restore_list.begin(), restore_list.end()) {}

InflectionalStemmer InflectionalStemmer::parse_restore_list(std::string_view text) {
  const auto parsed = StopList::parse(text);
  return InflectionalStemmer({parsed.words().begin(), parsed.words().end()});
}

const InflectionalStemmer& InflectionalStemmer::standard() {
  static const InflectionalStemmer stemmer = parse_restore_list(fixtures::default_restore_list_text);
  return stemmer;
}

void InflectionalStemmer::finish_suffix_strip(std::string& word) const {
  const auto n = word.size();
  const char last = word[n - 1];
  if (n >= 2 && last == word[n - 2] && is_consonant(last) && last != 'l' && last != 's' &&
      last != 'z') {
    word.pop_back();
    return;
  }
  if (ends_cvc(word) && restore_list_.contains(word)) word.push_back('e');
}

bool InflectionalStemmer::apply_one(std::string& word) const {
  if (ends_with(word, "sses")) {
    if (!stem_ok(word, 2)) return false;
    word.resize(word.size() - 2);
    return true;
  }
  if (ends_with(word, "ies") || ends_with(word, "ied")) {
    if (!stem_ok(word, 3)) return false;
    word.resize(word.size() - 3);
    word.push_back('y');
    return true;
  }
  if (ends_with(word, "s")) {
    if (ends_with(word, "ss") || ends_with(word, "us") || ends_with(word, "is")) return false;
    if (!stem_ok(word, 1)) return false;
    word.pop_back();
    return true;
  }
  if (ends_with(word, "ing")) {
    if (!stem_ok(word, 3) || !has_vowel(std::string_view(word).substr(0, word.size() - 3)))
      return false;
    word.resize(word.size() - 3);
    finish_suffix_strip(word);
    return true;
  }
  if (ends_with(word, "ed") && !ends_with(word, "eed")) {
    if (!stem_ok(word, 2) || !has_vowel(std::string_view(word).substr(0, word.size() - 2)))
      return false;
    word.resize(word.size() - 2);
    finish_suffix_strip(word);
    return true;
  }
  return false;
}

std::string InflectionalStemmer::stem(std::string_view token) const {
  std::string word(token);
  // Every rule shortens the word, so this terminates.
  while (apply_one(word)) {
  }
  return word;
}

std::string stem(std::string_view token) { return InflectionalStemmer::standard().stem(token); }

}  // namespace doccluster
