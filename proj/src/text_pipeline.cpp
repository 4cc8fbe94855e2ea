#include "doccluster/text_pipeline.hpp"

#include <numeric>
#include <utility>

namespace doccluster {

namespace fixtures {
extern const char* const default_stopwords_text;
}

namespace {

bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_joiner(char c) { return c == '-' || c == '\''; }

char to_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::int64_t TermTable::total() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0},
                         [](std::int64_t acc, const auto& kv) { return acc + kv.second; });
}

StopList::StopList(std::set<std::string> words) {
  for (const auto& w : words) {
    std::string lower;
    lower.reserve(w.size());
    for (char c : w) lower.push_back(to_lower(c));
    words_.insert(std::move(lower));
  }
}

StopList StopList::parse(std::string_view text) {
  std::set<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') words.emplace(line);
    pos = end + 1;
  }
  return StopList(std::move(words));
}

const StopList& StopList::english() {
  static const StopList list = parse(fixtures::default_stopwords_text);
  return list;
}

bool StopList::contains(std::string_view word) const { return words_.find(word) != words_.end(); }

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&] {
    if (current.empty()) return;
    if (current.size() > kMaxTokenLength) {
      current.resize(kMaxTokenLength);
      while (!current.empty() && is_joiner(current.back())) current.pop_back();
    }
    tokens.push_back(std::move(current));
    current.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_alnum(c)) {
      current.push_back(to_lower(c));
    } else if (is_joiner(c) && !current.empty() && i + 1 < text.size() && is_alnum(text[i + 1])) {
      // `current` ends in an alphanumeric here, so joiners never double up.
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

TermTable build_term_table(std::string_view text, const StopList& stoplist, bool stemming,
                           std::string doc_id) {
  TermTable table;
  table.doc_id = std::move(doc_id);
  const auto& stemmer = InflectionalStemmer::standard();
  for (auto& token : tokenize(text)) {
    if (stoplist.contains(token)) continue;
    if (stemming) token = stemmer.stem(token);
    ++table.entries[std::move(token)];
  }
  return table;
}

}  // namespace doccluster
