#include "doccluster/domain_dictionary.hpp"

#include <utility>

#include "doccluster/error.hpp"

namespace doccluster {

namespace {

std::string trim_lower(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  std::string out;
  for (char c : s.substr(first, last - first + 1))
    out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
  return out;
}

}  // namespace

std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::feature:
      return "feature";
    case Granularity::subcategory:
      return "subcategory";
    case Granularity::parent_category:
      return "parent_category";
  }
  return "feature";
}

std::optional<Granularity> parse_granularity(std::string_view name) {
  if (name == "feature") return Granularity::feature;
  if (name == "subcategory") return Granularity::subcategory;
  if (name == "parent_category") return Granularity::parent_category;
  return std::nullopt;
}

std::string CategoryPath::joined() const {
  std::string out;
  for (const auto& s : segments) {
    if (!out.empty()) out.push_back('/');
    out += s;
  }
  return out;
}

DomainDictionary DomainDictionary::load(std::string_view text, bool stem_terms) {
  DomainDictionary dict;
  std::map<std::string, CategoryPath> owner;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto line = trim_lower(raw);
    if (line.empty() || line.front() == '#') continue;

    CategoryPath path;
    std::size_t seg_start = 0;
    while (true) {
      const auto slash = line.find('/', seg_start);
      auto segment = trim_lower(std::string_view(line).substr(
          seg_start, slash == std::string::npos ? std::string::npos : slash - seg_start));
      if (segment.empty()) throw MalformedLine(line_no, "empty path segment");
      path.segments.push_back(std::move(segment));
      if (slash == std::string::npos) break;
      seg_start = slash + 1;
    }
    if (path.segments.size() < 2)
      throw MalformedLine(line_no, "expected at least one category and a term");

    const auto tokens = tokenize(path.segments.back());
    if (tokens.size() != 1 || tokens.front() != path.segments.back())
      throw MalformedLine(line_no, "term '" + path.segments.back() + "' is not a single token");
    if (stem_terms) path.segments.back() = stem(path.segments.back());

    const auto& term = path.term();
    if (auto it = owner.find(term); it != owner.end()) {
      if (it->second == path) continue;
      throw DuplicateTerm(term, it->second.joined(), path.joined());
    }
    owner.emplace(term, path);
    dict.term_index_.emplace(term, TermCategories{path.subcategory(), path.parent_category()});
    dict.subcategory_parents_[path.subcategory()].insert(path.parent_category());
    dict.parent_categories_.insert(path.parent_category());
    dict.paths_.insert(std::move(path));
  }
  return dict;
}

std::optional<TermCategories> DomainDictionary::map_term(std::string_view term) const {
  if (auto it = term_index_.find(term); it != term_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> DomainDictionary::category_of(std::string_view dimension,
                                                         Granularity space,
                                                         Granularity level) const {
  switch (space) {
    case Granularity::feature: {
      if (level == Granularity::feature) return std::string(dimension);
      const auto cats = map_term(dimension);
      if (!cats) return std::nullopt;
      return level == Granularity::subcategory ? cats->subcategory : cats->parent_category;
    }
    case Granularity::subcategory: {
      const auto it = subcategory_parents_.find(dimension);
      if (it == subcategory_parents_.end()) return std::nullopt;
      // A subcategory name reused under several roots resolves to the
      // lexicographically first root.
      if (level == Granularity::parent_category) return *it->second.begin();
      return std::string(dimension);
    }
    case Granularity::parent_category:
      if (!parent_categories_.contains(dimension)) return std::nullopt;
      return std::string(dimension);
  }
  return std::nullopt;
}

TermTable project_vector(const TermTable& table, const DomainDictionary& dict, Granularity g) {
  if (g == Granularity::feature) return table;
  TermTable out;
  out.doc_id = table.doc_id;
  for (const auto& [term, freq] : table.entries) {
    const auto cats = dict.map_term(term);
    if (!cats) continue;
    out.entries[g == Granularity::subcategory ? cats->subcategory : cats->parent_category] += freq;
  }
  return out;
}

TermTable filter_to_dictionary(const TermTable& table, const DomainDictionary& dict) {
  TermTable out;
  out.doc_id = table.doc_id;
  for (const auto& [term, freq] : table.entries)
    if (dict.map_term(term)) out.entries.emplace(term, freq);
  return out;
}

}  // namespace doccluster
