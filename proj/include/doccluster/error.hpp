#ifndef DOCCLUSTER_ERROR_HPP
#define DOCCLUSTER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doccluster {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad flag combination, k outside 2..N).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Corpus or fixture files could not be read or parsed.
class IngestionError : public Error {
 public:
  using Error::Error;
};

class NotADirectory : public IngestionError {
 public:
  explicit NotADirectory(const std::string& path)
      : IngestionError("not a directory: " + path) {}
};

class NoDocumentsFound : public IngestionError {
 public:
  explicit NoDocumentsFound(const std::string& path)
      : IngestionError("no documents found under: " + path) {}
};

class MalformedLine : public IngestionError {
 public:
  MalformedLine(std::size_t line, const std::string& why)
      : IngestionError("dictionary line " + std::to_string(line) + ": " + why),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateTerm : public IngestionError {
 public:
  DuplicateTerm(const std::string& term, const std::string& first_path,
                const std::string& second_path)
      : IngestionError("term '" + term + "' appears in both '" + first_path +
                       "' and '" + second_path + "'"),
        term_(term) {}
  const std::string& term() const noexcept { return term_; }

 private:
  std::string term_;
};

class DfOutOfRange : public Error {
 public:
  DfOutOfRange(long long df, long long n_docs)
      : Error("document frequency " + std::to_string(df) +
              " outside [1, " + std::to_string(n_docs) + "]") {}
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus has no documents") {}
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("mean of an empty vector list") {}
};

class KOutOfRange : public ConfigError {
 public:
  KOutOfRange(long long k, long long n_docs)
      : ConfigError("k = " + std::to_string(k) + " outside [2, " +
                    std::to_string(n_docs) + "]") {}
  KOutOfRange(long long k_min, long long k_max, long long n_docs)
      : ConfigError("k range [" + std::to_string(k_min) + ", " +
                    std::to_string(k_max) + "] not within [2, " +
                    std::to_string(n_docs) + "]") {}
};

}  // namespace doccluster

#endif  // DOCCLUSTER_ERROR_HPP
