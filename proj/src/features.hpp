#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stump {

// Sparse feature vector: (feature index, weight) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

double l2_norm(const SparseVector& v);

// Split on whitespace runs; empty tokens never appear.  Cleaned tweets are
// already single-spaced, but the tokenizer tolerates arbitrary whitespace.
std::vector<std::string> tokenize(std::string_view text);

// Contiguous n-grams of exactly `order` tokens, joined by single spaces, in
// positional order.  Returns an empty list when there are fewer tokens than
// `order`; throws std::invalid_argument unless 1 <= order <= 4.
std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        std::size_t order);

inline constexpr std::uint32_t kMaxNgramOrder = 4;

struct TfidfOptions {
  std::uint32_t order = 1;   // n-gram order (1..4 in the experiment grid)
  std::uint32_t min_df = 1;  // drop terms seen in fewer documents
  // When true the vocabulary is the union of n-gram orders 1..order instead
  // of order alone.
  bool cumulative = false;
};

struct TfidfTerm {
  std::string term;
  std::uint32_t index = 0;  // dense feature index, 0..vocab_size-1
  std::uint32_t df = 0;     // number of fitting documents containing the term
  double idf = 0.0;         // ln((1 + n_docs) / (1 + df)) + 1
};

// TF-IDF vectoriser over space-joined n-grams.
//
// Fitting assigns indices in first-seen order (document order, then n-gram
// position; for cumulative vocabularies lower orders come first within a
// document).  Transforming weights raw term counts by the stored idf and
// L2-normalises the result; unknown terms are counted but contribute nothing.
class TfidfModel {
 public:
  TfidfModel() = default;

  static TfidfModel fit(const std::vector<std::string>& documents,
                        const TfidfOptions& options);

  // `oov_count`, when non-null, receives the number of n-gram occurrences in
  // `text` that are missing from the vocabulary.
  SparseVector transform(std::string_view text,
                         std::size_t* oov_count = nullptr) const;

  std::uint32_t order() const { return options_.order; }
  bool cumulative() const { return options_.cumulative; }
  std::uint64_t n_docs() const { return n_docs_; }
  std::size_t vocab_size() const { return terms_.size(); }
  const std::vector<TfidfTerm>& terms() const { return terms_; }

  // Index of `term`, or -1 when absent.
  std::int64_t term_index(std::string_view term) const;

  // JSON object {"order", "n_docs", "terms": [{"term","index","df","idf"}]}
  // (+ "cumulative": true only for cumulative vocabularies).  Doubles are
  // written shortest-round-trip, so save -> load -> save is byte-identical.
  std::string to_json() const;
  static TfidfModel from_json(std::string_view json_text);

  void save(const std::string& path) const;
  static TfidfModel load(const std::string& path);

 private:
  void rebuild_lookup();
  std::vector<std::string> document_terms(std::string_view text) const;

  TfidfOptions options_;
  std::uint64_t n_docs_ = 0;
  std::vector<TfidfTerm> terms_;                          // sorted by index
  std::unordered_map<std::string, std::uint32_t> lookup_;  // term -> index
};

}  // namespace stump
