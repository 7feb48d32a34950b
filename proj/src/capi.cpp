// C ABI wrapper around the C++ core.  Exceptions are converted to ss_status
// codes and a per-thread message; handles are heap-allocated wrappers around
// the core value types.

#include "stumpspeech.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "experiment.hpp"
#include "features.hpp"
#include "forest.hpp"
#include "linear.hpp"
#include "model_io.hpp"
#include "naive_bayes.hpp"
#include "normalize.hpp"
#include "synthetic.hpp"

struct ss_corpus {
  stump::Corpus value;
};

struct ss_tfidf {
  stump::TfidfModel value;
};

struct ss_model {
  stump::TrainedModel value;
};

namespace {

using nlohmann::json;

thread_local std::string t_last_error;

ss_status fail(ss_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.  `body` may also
// return a non-OK status directly after setting the message via fail().
template <typename Body>
ss_status guarded(Body&& body) noexcept {
  try {
    t_last_error.clear();
    return body();
  } catch (const stump::IoError& e) {
    return fail(SS_ERR_IO, e.what());
  } catch (const stump::ParseError& e) {
    return fail(SS_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SS_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SS_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(std::string_view text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size());
  out[text.size()] = '\0';
  return out;
}

template <typename T>
T* dup_array(const std::vector<T>& values) {
  T* out = static_cast<T*>(std::malloc(sizeof(T) * std::max<std::size_t>(
                                                       values.size(), 1)));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, values.data(), sizeof(T) * values.size());
  return out;
}

bool null_arg(const void* p) { return p == nullptr; }

ss_status null_error(const char* what) {
  return fail(SS_ERR_INVALID, std::string(what) + " must not be NULL");
}

stump::CorpusFormat parse_format(const char* format) {
  return stump::corpus_format_from_string(format);
}

json parse_options_object(const char* options_json) {
  if (options_json == nullptr || *options_json == '\0') {
    return json::object();
  }
  json j = json::parse(options_json, nullptr, false);
  if (j.is_discarded()) {
    throw stump::ParseError("options: not valid JSON");
  }
  if (!j.is_object()) {
    throw stump::ParseError("options: expected a JSON object");
  }
  return j;
}

double option_number(const json& j, const char* key, double fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) {
    throw stump::ParseError(std::string("options: \"") + key +
                            "\" must be a number");
  }
  return it->get<double>();
}

std::uint64_t option_uint(const json& j, const char* key,
                          std::uint64_t fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned()) {
    throw stump::ParseError(std::string("options: \"") + key +
                            "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

bool option_bool(const json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) {
    throw stump::ParseError(std::string("options: \"") + key +
                            "\" must be a boolean");
  }
  return it->get<bool>();
}

const std::vector<std::string>& train_option_keys() {
  static const std::vector<std::string> kKeys = {
      "seed",   "alpha",     "learning_rate", "l2",
      "logistic_epochs",     "lambda",        "svm_epochs",
      "trees",  "max_depth", "min_leaf",      "mtry",
      "threads"};
  return kKeys;
}

const std::vector<std::string>& grid_option_keys() {
  static const std::vector<std::string> kKeys = [] {
    std::vector<std::string> keys = train_option_keys();
    keys.insert(keys.end(), {"algorithms", "orders", "test_fraction", "min_df",
                             "cumulative"});
    return keys;
  }();
  return kKeys;
}

void reject_unknown_keys(const json& j, const std::vector<std::string>& known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool found = false;
    for (const auto& key : known) {
      if (it.key() == key) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw stump::ParseError("options: unknown key \"" + it.key() + "\"");
    }
  }
}

struct TrainOptions {
  std::uint64_t seed = 42;
  stump::NaiveBayesConfig nb{};
  stump::LogisticConfig logistic{};
  stump::SvmConfig svm{};
  stump::ForestConfig forest{};
};

TrainOptions parse_train_hyperparameters(const json& j) {
  TrainOptions opt;
  opt.seed = option_uint(j, "seed", opt.seed);
  opt.nb.alpha = option_number(j, "alpha", opt.nb.alpha);
  opt.logistic.learning_rate =
      option_number(j, "learning_rate", opt.logistic.learning_rate);
  opt.logistic.l2 = option_number(j, "l2", opt.logistic.l2);
  opt.logistic.epochs = static_cast<std::uint32_t>(
      option_uint(j, "logistic_epochs", opt.logistic.epochs));
  opt.svm.lambda = option_number(j, "lambda", opt.svm.lambda);
  opt.svm.epochs =
      static_cast<std::uint32_t>(option_uint(j, "svm_epochs", opt.svm.epochs));
  opt.forest.n_trees =
      static_cast<std::uint32_t>(option_uint(j, "trees", opt.forest.n_trees));
  opt.forest.max_depth = static_cast<std::uint32_t>(
      option_uint(j, "max_depth", opt.forest.max_depth));
  opt.forest.min_leaf = static_cast<std::uint32_t>(
      option_uint(j, "min_leaf", opt.forest.min_leaf));
  opt.forest.mtry =
      static_cast<std::uint32_t>(option_uint(j, "mtry", opt.forest.mtry));
  opt.forest.n_threads =
      static_cast<std::uint32_t>(option_uint(j, "threads", opt.forest.n_threads));
  opt.svm.seed = opt.seed;
  opt.forest.seed = opt.seed;
  return opt;
}

TrainOptions parse_train_options(const char* options_json) {
  json j = parse_options_object(options_json);
  reject_unknown_keys(j, train_option_keys());
  return parse_train_hyperparameters(j);
}

stump::GridOptions parse_grid_options(const char* options_json) {
  json j = parse_options_object(options_json);
  reject_unknown_keys(j, grid_option_keys());
  TrainOptions hyper = parse_train_hyperparameters(j);

  stump::GridOptions grid;
  grid.seed = hyper.seed;
  grid.nb = hyper.nb;
  grid.logistic = hyper.logistic;
  grid.svm = hyper.svm;
  grid.forest = hyper.forest;
  grid.test_fraction = option_number(j, "test_fraction", grid.test_fraction);
  grid.min_df =
      static_cast<std::uint32_t>(option_uint(j, "min_df", grid.min_df));
  grid.cumulative = option_bool(j, "cumulative", grid.cumulative);

  if (auto it = j.find("algorithms"); it != j.end()) {
    if (!it->is_array()) {
      throw stump::ParseError("options: \"algorithms\" must be an array");
    }
    grid.algorithms.clear();
    for (const auto& entry : *it) {
      if (!entry.is_string()) {
        throw stump::ParseError(
            "options: \"algorithms\" entries must be strings");
      }
      grid.algorithms.push_back(entry.get<std::string>());
    }
  }
  if (auto it = j.find("orders"); it != j.end()) {
    if (!it->is_array()) {
      throw stump::ParseError("options: \"orders\" must be an array");
    }
    grid.orders.clear();
    for (const auto& entry : *it) {
      if (!entry.is_number_unsigned()) {
        throw stump::ParseError(
            "options: \"orders\" entries must be non-negative integers");
      }
      grid.orders.push_back(entry.get<std::uint32_t>());
    }
  }
  return grid;
}

std::vector<std::string> normalized_corpus_texts(const stump::Corpus& corpus) {
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (const auto& tweet : corpus.items()) {
    texts.push_back(stump::normalize(tweet.text));
  }
  return texts;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw stump::IoError("cannot open " + path + " for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw stump::IoError("failed while writing " + path);
  }
}

std::string csv_field(const std::string& value) {
  bool needs_quotes = value.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct Prediction {
  int class_code = 0;
  double score = 0.0;
  bool all_oov = false;
};

Prediction predict_one(const stump::TrainedModel& model,
                       const stump::TfidfModel& vectorizer,
                       const std::string& text) {
  std::size_t oov = 0;
  stump::SparseVector x =
      vectorizer.transform(stump::normalize(text), &oov);
  std::vector<double> scores = stump::model_scores(model, x);
  const std::vector<int>& classes = stump::model_classes(model);
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  Prediction p;
  p.class_code = classes[best];
  p.score = scores[best];
  p.all_oov = x.empty();
  return p;
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "1.0.0"; }

const char* ss_last_error(void) { return t_last_error.c_str(); }

void ss_free(void* ptr) { std::free(ptr); }

/* ------------------------------------------------------------------ corpus */

ss_status ss_corpus_load(const char* path, const char* format,
                         ss_corpus** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(path)) return null_error("path");
    if (null_arg(format)) return null_error("format");
    if (null_arg(out)) return null_error("out");
    stump::Corpus corpus = stump::load_corpus(path, parse_format(format));
    *out = new ss_corpus{std::move(corpus)};
    return SS_OK;
  });
}

ss_status ss_corpus_save(const ss_corpus* corpus, const char* path,
                         const char* format) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(path)) return null_error("path");
    if (null_arg(format)) return null_error("format");
    stump::save_corpus(corpus->value, path, parse_format(format));
    return SS_OK;
  });
}

ss_status ss_corpus_synthetic(uint64_t seed,
                              const uint32_t counts[SS_NUM_CLASSES],
                              ss_corpus** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(out)) return null_error("out");
    std::array<std::uint32_t, stump::kNumClasses> wanted =
        stump::kReferenceClassCounts;
    if (counts != nullptr) {
      for (int c = 0; c < stump::kNumClasses; ++c) wanted[c] = counts[c];
    }
    stump::Corpus corpus = stump::generate_synthetic_corpus(seed, wanted);
    *out = new ss_corpus{std::move(corpus)};
    return SS_OK;
  });
}

ss_status ss_corpus_size(const ss_corpus* corpus, size_t* out) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(out)) return null_error("out");
    *out = corpus->value.size();
    return SS_OK;
  });
}

ss_status ss_corpus_get(const ss_corpus* corpus, size_t index, char** id,
                        char** text, int* label) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (index >= corpus->value.size()) {
      return fail(SS_ERR_INVALID,
                  "index " + std::to_string(index) + " out of range for " +
                      std::to_string(corpus->value.size()) + " tweets");
    }
    const stump::LabeledTweet& tweet = corpus->value[index];
    char* id_copy = nullptr;
    if (id != nullptr) id_copy = dup_string(tweet.id);
    if (text != nullptr) {
      try {
        *text = dup_string(tweet.text);
      } catch (...) {
        std::free(id_copy);
        throw;
      }
    }
    if (id != nullptr) *id = id_copy;
    if (label != nullptr) *label = stump::class_code(tweet.label);
    return SS_OK;
  });
}

ss_status ss_corpus_counts(const ss_corpus* corpus,
                           int64_t counts[SS_NUM_CLASSES], int64_t* total) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(counts)) return null_error("counts");
    stump::ClassDistribution dist = stump::class_distribution(corpus->value);
    for (int c = 0; c < stump::kNumClasses; ++c) counts[c] = dist.counts[c];
    if (total != nullptr) *total = dist.total;
    return SS_OK;
  });
}

ss_status ss_corpus_stats_text(const ss_corpus* corpus, char** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(out)) return null_error("out");
    *out = dup_string(
        stump::format_distribution(stump::class_distribution(corpus->value)));
    return SS_OK;
  });
}

void ss_corpus_free(ss_corpus* corpus) { delete corpus; }

/* -------------------------------------------------------------- annotation */

ss_status ss_resolve_label(const int* parties, const int* stances, size_t n,
                           int relevant, int* out_class) {
  return guarded([&]() -> ss_status {
    if (null_arg(out_class)) return null_error("out_class");
    if (n > 0 && (parties == nullptr || stances == nullptr)) {
      return null_error("parties/stances (with n > 0)");
    }
    std::vector<stump::StanceAssertion> assertions;
    assertions.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (parties[i] < 1 || parties[i] > 3) {
        return fail(SS_ERR_INVALID, "party codes must be 1, 2, or 3; got " +
                                        std::to_string(parties[i]));
      }
      if (stances[i] != 0 && stances[i] != 1) {
        return fail(SS_ERR_INVALID,
                    "stance codes must be 0 (support) or 1 (oppose); got " +
                        std::to_string(stances[i]));
      }
      assertions.push_back(stump::StanceAssertion{
          static_cast<stump::Party>(parties[i]),
          stances[i] == 0 ? stump::Stance::Support : stump::Stance::Oppose});
    }
    stump::SentimentClass label = stump::resolve_label(
        std::span<const stump::StanceAssertion>(assertions), relevant != 0);
    *out_class = stump::class_code(label);
    return SS_OK;
  });
}

ss_status ss_agreement_rate(const int* labels_a, const int* labels_b, size_t n,
                            double* out) {
  return guarded([&]() -> ss_status {
    if (null_arg(labels_a)) return null_error("labels_a");
    if (null_arg(labels_b)) return null_error("labels_b");
    if (null_arg(out)) return null_error("out");
    std::vector<stump::SentimentClass> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = stump::class_from_code(labels_a[i]);
      b[i] = stump::class_from_code(labels_b[i]);
    }
    *out = stump::agreement_rate(std::span<const stump::SentimentClass>(a),
                                 std::span<const stump::SentimentClass>(b));
    return SS_OK;
  });
}

/* ---------------------------------------------------------------- cleaning */

ss_status ss_normalize(const char* text, char** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(text)) return null_error("text");
    if (null_arg(out)) return null_error("out");
    *out = dup_string(stump::normalize(text));
    return SS_OK;
  });
}

ss_status ss_clean_file(const char* in_path, const char* out_path,
                        const char* format) {
  return guarded([&]() -> ss_status {
    if (null_arg(in_path)) return null_error("in_path");
    if (null_arg(out_path)) return null_error("out_path");
    if (null_arg(format)) return null_error("format");
    stump::CorpusFormat fmt = parse_format(format);
    stump::Corpus raw = stump::load_corpus(in_path, fmt);
    stump::Corpus cleaned;
    for (const auto& tweet : raw.items()) {
      cleaned.add(stump::LabeledTweet{tweet.id, stump::normalize(tweet.text),
                                      tweet.label});
    }
    stump::save_corpus(cleaned, out_path, fmt);
    return SS_OK;
  });
}

/* ---------------------------------------------------------------- features */

ss_status ss_tfidf_fit(const ss_corpus* corpus, uint32_t order,
                       uint32_t min_df, int cumulative, ss_tfidf** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(out)) return null_error("out");
    stump::TfidfOptions options;
    options.order = order;
    options.min_df = min_df;
    options.cumulative = cumulative != 0;
    stump::TfidfModel model =
        stump::TfidfModel::fit(normalized_corpus_texts(corpus->value), options);
    *out = new ss_tfidf{std::move(model)};
    return SS_OK;
  });
}

ss_status ss_tfidf_save(const ss_tfidf* vectorizer, const char* path) {
  return guarded([&]() -> ss_status {
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(path)) return null_error("path");
    vectorizer->value.save(path);
    return SS_OK;
  });
}

ss_status ss_tfidf_load(const char* path, ss_tfidf** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(path)) return null_error("path");
    if (null_arg(out)) return null_error("out");
    *out = new ss_tfidf{stump::TfidfModel::load(path)};
    return SS_OK;
  });
}

ss_status ss_tfidf_order(const ss_tfidf* vectorizer, uint32_t* out) {
  return guarded([&]() -> ss_status {
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(out)) return null_error("out");
    *out = vectorizer->value.order();
    return SS_OK;
  });
}

ss_status ss_tfidf_vocab_size(const ss_tfidf* vectorizer, size_t* out) {
  return guarded([&]() -> ss_status {
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(out)) return null_error("out");
    *out = vectorizer->value.vocab_size();
    return SS_OK;
  });
}

ss_status ss_tfidf_transform(const ss_tfidf* vectorizer, const char* text,
                             uint32_t** indices, double** weights, size_t* n,
                             size_t* oov) {
  return guarded([&]() -> ss_status {
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(text)) return null_error("text");
    if (null_arg(indices)) return null_error("indices");
    if (null_arg(weights)) return null_error("weights");
    if (null_arg(n)) return null_error("n");
    std::size_t oov_count = 0;
    stump::SparseVector x =
        vectorizer->value.transform(stump::normalize(text), &oov_count);
    std::vector<uint32_t> idx(x.size());
    std::vector<double> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      idx[i] = x[i].first;
      w[i] = x[i].second;
    }
    uint32_t* idx_out = dup_array(idx);
    double* w_out = nullptr;
    try {
      w_out = dup_array(w);
    } catch (...) {
      std::free(idx_out);
      throw;
    }
    *indices = idx_out;
    *weights = w_out;
    *n = x.size();
    if (oov != nullptr) *oov = oov_count;
    return SS_OK;
  });
}

void ss_tfidf_free(ss_tfidf* vectorizer) { delete vectorizer; }

/* ---------------------------------------------------------------- training */

ss_status ss_train(const ss_corpus* corpus, const ss_tfidf* vectorizer,
                   const char* algorithm, const char* options_json,
                   ss_model** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(algorithm)) return null_error("algorithm");
    if (null_arg(out)) return null_error("out");
    std::string name = algorithm;
    if (!stump::is_known_algorithm(name)) {
      return fail(SS_ERR_INVALID,
                  "unknown algorithm \"" + name +
                      "\"; expected one of forest, naive_bayes, svm, logistic");
    }
    TrainOptions opt = parse_train_options(options_json);
    stump::Dataset data =
        stump::build_dataset(normalized_corpus_texts(corpus->value),
                             stump::corpus_labels(corpus->value),
                             vectorizer->value);
    stump::TrainedModel model;
    if (name == "naive_bayes") {
      model = stump::train_naive_bayes(data, opt.nb);
    } else if (name == "logistic") {
      model = stump::train_logistic(data, opt.logistic);
    } else if (name == "svm") {
      model = stump::train_svm(data, opt.svm);
    } else {
      model = stump::train_forest(data, opt.forest);
    }
    *out = new ss_model{std::move(model)};
    return SS_OK;
  });
}

ss_status ss_model_save(const ss_model* model, const char* path) {
  return guarded([&]() -> ss_status {
    if (null_arg(model)) return null_error("model");
    if (null_arg(path)) return null_error("path");
    stump::save_model(model->value, path);
    return SS_OK;
  });
}

ss_status ss_model_load(const char* path, ss_model** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(path)) return null_error("path");
    if (null_arg(out)) return null_error("out");
    *out = new ss_model{stump::load_model(path)};
    return SS_OK;
  });
}

ss_status ss_model_kind(const ss_model* model, char** out) {
  return guarded([&]() -> ss_status {
    if (null_arg(model)) return null_error("model");
    if (null_arg(out)) return null_error("out");
    *out = dup_string(stump::model_kind(model->value));
    return SS_OK;
  });
}

ss_status ss_model_dim(const ss_model* model, size_t* out) {
  return guarded([&]() -> ss_status {
    if (null_arg(model)) return null_error("model");
    if (null_arg(out)) return null_error("out");
    *out = stump::model_dim(model->value);
    return SS_OK;
  });
}

ss_status ss_predict(const ss_model* model, const ss_tfidf* vectorizer,
                     const char* text, int* out_class, double* out_score,
                     int* out_all_oov) {
  return guarded([&]() -> ss_status {
    if (null_arg(model)) return null_error("model");
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(text)) return null_error("text");
    if (null_arg(out_class)) return null_error("out_class");
    if (stump::model_dim(model->value) != vectorizer->value.vocab_size()) {
      return fail(
          SS_ERR_STATE,
          "model dimension " + std::to_string(stump::model_dim(model->value)) +
              " does not match vectorizer vocabulary size " +
              std::to_string(vectorizer->value.vocab_size()));
    }
    Prediction p = predict_one(model->value, vectorizer->value, text);
    *out_class = p.class_code;
    if (out_score != nullptr) *out_score = p.score;
    if (out_all_oov != nullptr) *out_all_oov = p.all_oov ? 1 : 0;
    return SS_OK;
  });
}

ss_status ss_predict_file(const ss_model* model, const ss_tfidf* vectorizer,
                          const char* in_path, const char* format,
                          const char* out_path) {
  return guarded([&]() -> ss_status {
    if (null_arg(model)) return null_error("model");
    if (null_arg(vectorizer)) return null_error("vectorizer");
    if (null_arg(in_path)) return null_error("in_path");
    if (null_arg(format)) return null_error("format");
    if (null_arg(out_path)) return null_error("out_path");
    if (stump::model_dim(model->value) != vectorizer->value.vocab_size()) {
      return fail(
          SS_ERR_STATE,
          "model dimension " + std::to_string(stump::model_dim(model->value)) +
              " does not match vectorizer vocabulary size " +
              std::to_string(vectorizer->value.vocab_size()));
    }
    stump::Corpus corpus = stump::load_corpus(in_path, parse_format(format));
    std::string out_text = "id,predicted_class,score,oov\n";
    char buffer[64];
    for (const auto& tweet : corpus.items()) {
      Prediction p = predict_one(model->value, vectorizer->value, tweet.text);
      std::snprintf(buffer, sizeof(buffer), ",%d,%.6f,%d\n", p.class_code,
                    p.score, p.all_oov ? 1 : 0);
      out_text += csv_field(tweet.id);
      out_text += buffer;
    }
    write_text_file(out_path, out_text);
    return SS_OK;
  });
}

void ss_model_free(ss_model* model) { delete model; }

/* -------------------------------------------------------------- evaluation */

ss_status ss_evaluate(const int* y_true, const int* y_pred, size_t n,
                      double* precision, double* recall, double* f1) {
  return guarded([&]() -> ss_status {
    if (null_arg(y_true)) return null_error("y_true");
    if (null_arg(y_pred)) return null_error("y_pred");
    std::vector<int> truth(y_true, y_true + n);
    std::vector<int> predicted(y_pred, y_pred + n);
    stump::EvaluationReport report = stump::evaluate(truth, predicted);
    if (precision != nullptr) *precision = report.weighted_precision;
    if (recall != nullptr) *recall = report.weighted_recall;
    if (f1 != nullptr) *f1 = report.weighted_f1;
    return SS_OK;
  });
}

ss_status ss_experiment_run(const ss_corpus* corpus, const char* options_json,
                            const char* out_dir) {
  return guarded([&]() -> ss_status {
    if (null_arg(corpus)) return null_error("corpus");
    if (null_arg(out_dir)) return null_error("out_dir");
    stump::GridOptions options = parse_grid_options(options_json);
    stump::GridResult grid = stump::run_experiment_grid(corpus->value, options);
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw stump::IoError("cannot create directory " + dir.string() + ": " +
                           ec.message());
    }
    write_text_file((dir / "grid.csv").string(), stump::grid_to_csv(grid));
    write_text_file((dir / "grid.txt").string(), stump::grid_to_text(grid));
    return SS_OK;
  });
}

}  // extern "C"
