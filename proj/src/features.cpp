#include "features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "error.hpp"

namespace stump {

namespace {
using ordered_json = nlohmann::ordered_json;
}  // namespace

double l2_norm(const SparseVector& v) {
  double sum = 0.0;
  for (const auto& [index, weight] : v) {
    (void)index;
    sum += weight * weight;
  }
  return std::sqrt(sum);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        std::size_t order) {
  if (order < 1 || order > kMaxNgramOrder) {
    throw std::invalid_argument("extract_ngrams: order must be in 1..4");
  }
  std::vector<std::string> grams;
  if (tokens.size() < order) return grams;
  grams.reserve(tokens.size() - order + 1);
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (std::size_t k = 1; k < order; ++k) {
      gram.push_back(' ');
      gram += tokens[i + k];
    }
    grams.push_back(std::move(gram));
  }
  return grams;
}

std::vector<std::string> TfidfModel::document_terms(
    std::string_view text) const {
  const std::vector<std::string> tokens = tokenize(text);
  std::vector<std::string> terms;
  const std::uint32_t lowest = options_.cumulative ? 1 : options_.order;
  for (std::uint32_t n = lowest; n <= options_.order; ++n) {
    std::vector<std::string> grams = extract_ngrams(tokens, n);
    terms.insert(terms.end(), std::make_move_iterator(grams.begin()),
                 std::make_move_iterator(grams.end()));
  }
  return terms;
}

TfidfModel TfidfModel::fit(const std::vector<std::string>& documents,
                           const TfidfOptions& options) {
  if (options.order < 1 || options.order > kMaxNgramOrder) {
    throw std::invalid_argument("TfidfModel::fit: order must be in 1..4");
  }
  TfidfModel model;
  model.options_ = options;
  model.n_docs_ = documents.size();

  std::unordered_map<std::string, std::uint32_t> df;
  std::vector<std::string> first_seen;  // insertion order of new terms
  for (const std::string& doc : documents) {
    std::unordered_set<std::string> seen_here;
    for (std::string& term : model.document_terms(doc)) {
      if (!seen_here.insert(term).second) continue;
      auto [it, inserted] = df.emplace(std::move(term), 1u);
      if (inserted) {
        first_seen.push_back(it->first);
      } else {
        ++it->second;
      }
    }
  }

  model.terms_.reserve(first_seen.size());
  for (const std::string& term : first_seen) {
    const std::uint32_t count = df.at(term);
    if (count < options.min_df) continue;
    TfidfTerm entry;
    entry.term = term;
    entry.index = static_cast<std::uint32_t>(model.terms_.size());
    entry.df = count;
    entry.idf = std::log((1.0 + static_cast<double>(model.n_docs_)) /
                         (1.0 + static_cast<double>(count))) +
                1.0;
    model.terms_.push_back(std::move(entry));
  }
  model.rebuild_lookup();
  return model;
}

SparseVector TfidfModel::transform(std::string_view text,
                                   std::size_t* oov_count) const {
  std::unordered_map<std::uint32_t, double> counts;
  std::size_t oov = 0;
  for (const std::string& term : document_terms(text)) {
    auto it = lookup_.find(term);
    if (it == lookup_.end()) {
      ++oov;
    } else {
      counts[it->second] += 1.0;
    }
  }
  if (oov_count != nullptr) *oov_count = oov;

  SparseVector vec;
  vec.reserve(counts.size());
  for (const auto& [index, count] : counts) {
    vec.emplace_back(index, count * terms_[index].idf);
  }
  std::sort(vec.begin(), vec.end());
  const double norm = l2_norm(vec);
  if (norm > 0.0) {
    for (auto& [index, weight] : vec) {
      (void)index;
      weight /= norm;
    }
  }
  return vec;
}

std::int64_t TfidfModel::term_index(std::string_view term) const {
  auto it = lookup_.find(std::string(term));
  return it == lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

void TfidfModel::rebuild_lookup() {
  lookup_.clear();
  lookup_.reserve(terms_.size());
  for (const TfidfTerm& entry : terms_) {
    lookup_.emplace(entry.term, entry.index);
  }
}

std::string TfidfModel::to_json() const {
  ordered_json doc;
  doc["order"] = options_.order;
  if (options_.cumulative) doc["cumulative"] = true;
  doc["n_docs"] = n_docs_;
  ordered_json terms = ordered_json::array();
  for (const TfidfTerm& entry : terms_) {
    ordered_json t;
    t["term"] = entry.term;
    t["index"] = entry.index;
    t["df"] = entry.df;
    t["idf"] = entry.idf;
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

TfidfModel TfidfModel::from_json(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("vectorizer: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("n_docs") ||
      !doc.contains("terms") || !doc["terms"].is_array() ||
      !doc["order"].is_number_unsigned() ||
      !doc["n_docs"].is_number_unsigned()) {
    throw ParseError("vectorizer: missing or malformed order/n_docs/terms");
  }
  TfidfModel model;
  model.options_.order = doc["order"].get<std::uint32_t>();
  if (model.options_.order < 1 || model.options_.order > kMaxNgramOrder) {
    throw ParseError("vectorizer: order must be in 1..4");
  }
  if (doc.contains("cumulative")) {
    if (!doc["cumulative"].is_boolean()) {
      throw ParseError("vectorizer: cumulative must be a boolean");
    }
    model.options_.cumulative = doc["cumulative"].get<bool>();
  }
  model.n_docs_ = doc["n_docs"].get<std::uint64_t>();
  const auto& terms = doc["terms"];
  model.terms_.resize(terms.size());
  std::vector<bool> filled(terms.size(), false);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("term") || !t.contains("index") ||
        !t.contains("df") || !t.contains("idf") || !t["term"].is_string() ||
        !t["index"].is_number_unsigned() || !t["df"].is_number_unsigned() ||
        !t["idf"].is_number()) {
      throw ParseError("vectorizer: malformed term entry");
    }
    TfidfTerm entry;
    entry.term = t["term"].get<std::string>();
    entry.index = t["index"].get<std::uint32_t>();
    entry.df = t["df"].get<std::uint32_t>();
    entry.idf = t["idf"].get<double>();
    if (entry.index >= model.terms_.size() || filled[entry.index]) {
      throw ParseError("vectorizer: term indices must be a permutation of 0..n-1");
    }
    filled[entry.index] = true;
    model.terms_[entry.index] = std::move(entry);
  }
  model.rebuild_lookup();
  if (model.lookup_.size() != model.terms_.size()) {
    throw ParseError("vectorizer: duplicate terms");
  }
  return model;
}

void TfidfModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << to_json();
  if (!out.flush()) throw IoError("failed to write: " + path);
}

TfidfModel TfidfModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace stump
