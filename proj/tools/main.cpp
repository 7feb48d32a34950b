// stumpspeech command-line interface.
//
// Thin orchestration over the C API: parse flags and the optional JSON
// config file, resolve settings (flags win over config; STUMPSPEECH_SEED
// overrides a config seed), call the library, map failures to exit codes.
// Exit codes: 0 success, 1 internal failure, 2 user/config error.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stumpspeech.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

// User or config mistakes detected before the library is involved.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int fail_status(const std::string& action, ss_status status) {
  std::cerr << "stumpspeech: " << action << ": " << ss_last_error() << '\n';
  return status == SS_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

struct HandleDeleter {
  void operator()(ss_corpus* p) const { ss_corpus_free(p); }
  void operator()(ss_tfidf* p) const { ss_tfidf_free(p); }
  void operator()(ss_model* p) const { ss_model_free(p); }
};
using CorpusPtr = std::unique_ptr<ss_corpus, HandleDeleter>;
using TfidfPtr = std::unique_ptr<ss_tfidf, HandleDeleter>;
using ModelPtr = std::unique_ptr<ss_model, HandleDeleter>;

/* ---------------------------------------------------------------- config */

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> kKeys = {
      "corpus",        "format",     "out",        "out_dir",
      "model",         "vectorizer", "algorithm",  "algorithms",
      "order",         "orders",     "min_df",     "cumulative",
      "test_fraction", "seed",       "counts",     "alpha",
      "learning_rate", "l2",         "logistic_epochs",
      "lambda",        "svm_epochs", "trees",      "max_depth",
      "min_leaf",      "mtry",       "threads"};
  return kKeys;
}

json load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json config = json::parse(buffer.str(), nullptr, false);
  if (config.is_discarded()) {
    throw UsageError("config: " + path + " is not valid JSON");
  }
  if (!config.is_object()) {
    throw UsageError("config: " + path + " must contain a JSON object");
  }
  for (auto it = config.begin(); it != config.end(); ++it) {
    bool known = false;
    for (const auto& key : known_config_keys()) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw UsageError("config: unknown key \"" + it.key() + "\"");
  }
  return config;
}

std::optional<std::string> config_string(const json& c, const char* key) {
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  if (!it->is_string()) {
    throw UsageError(std::string("config: \"") + key + "\" must be a string");
  }
  return it->get<std::string>();
}

std::optional<double> config_number(const json& c, const char* key) {
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  if (!it->is_number()) {
    throw UsageError(std::string("config: \"") + key + "\" must be a number");
  }
  return it->get<double>();
}

std::optional<std::uint64_t> config_uint(const json& c, const char* key) {
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  if (!it->is_number_unsigned()) {
    throw UsageError(std::string("config: \"") + key +
                     "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

std::optional<bool> config_bool(const json& c, const char* key) {
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  if (!it->is_boolean()) {
    throw UsageError(std::string("config: \"") + key + "\" must be a boolean");
  }
  return it->get<bool>();
}

std::optional<std::vector<std::string>> config_string_list(const json& c,
                                                           const char* key) {
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  if (!it->is_array()) {
    throw UsageError(std::string("config: \"") + key + "\" must be an array");
  }
  std::vector<std::string> values;
  for (const auto& entry : *it) {
    if (!entry.is_string()) {
      throw UsageError(std::string("config: \"") + key +
                       "\" entries must be strings");
    }
    values.push_back(entry.get<std::string>());
  }
  return values;
}

std::optional<std::vector<std::uint64_t>> config_uint_list(const json& c,
                                                           const char* key) {
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  if (!it->is_array()) {
    throw UsageError(std::string("config: \"") + key + "\" must be an array");
  }
  std::vector<std::uint64_t> values;
  for (const auto& entry : *it) {
    if (!entry.is_number_unsigned()) {
      throw UsageError(std::string("config: \"") + key +
                       "\" entries must be non-negative integers");
    }
    values.push_back(entry.get<std::uint64_t>());
  }
  return values;
}

/* ------------------------------------------------------------- resolution */

bool flag_passed(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

// Values shared by every subcommand; only the options registered on the
// parsed subcommand are ever written, the rest keep their defaults.
struct Args {
  std::string config_path;
  std::string in_path;
  std::string out_path;
  std::string format = "jsonl";
  std::string out_dir = "out";
  std::string model_path;
  std::string vectorizer_path;
  std::string algorithm;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> orders;
  std::vector<std::string> algorithms;
  std::uint64_t min_df = 1;
  bool cumulative = false;
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
  std::vector<std::uint64_t> counts;

  double alpha = 1.0;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  std::uint64_t logistic_epochs = 200;
  double lambda = 1e-4;
  std::uint64_t svm_epochs = 20;
  std::uint64_t trees = 100;
  std::uint64_t max_depth = 20;
  std::uint64_t min_leaf = 1;
  std::uint64_t mtry = 0;
  std::uint64_t threads = 0;
};

json parsed_config(const CLI::App* sub, const Args& args) {
  if (!flag_passed(sub, "--config")) return json::object();
  return load_config(args.config_path);
}

std::optional<std::string> resolve_string(const CLI::App* sub,
                                          const char* flag,
                                          const std::string& flag_value,
                                          const json& config,
                                          const char* key) {
  if (flag_passed(sub, flag)) return flag_value;
  return config_string(config, key);
}

std::string require_string(const CLI::App* sub, const char* flag,
                           const std::string& flag_value, const json& config,
                           const char* key, const char* what) {
  auto value = resolve_string(sub, flag, flag_value, config, key);
  if (!value || value->empty()) {
    throw UsageError(std::string(what) + " is required (" + flag +
                     " or config \"" + key + "\")");
  }
  return *value;
}

std::uint64_t resolve_uint(const CLI::App* sub, const char* flag,
                           std::uint64_t flag_value, const json& config,
                           const char* key, std::uint64_t fallback) {
  if (flag_passed(sub, flag)) return flag_value;
  if (auto v = config_uint(config, key)) return *v;
  return fallback;
}

bool resolve_bool(const CLI::App* sub, const char* flag, bool flag_value,
                  const json& config, const char* key, bool fallback) {
  if (flag_passed(sub, flag)) return flag_value;
  if (auto v = config_bool(config, key)) return *v;
  return fallback;
}

// Precedence: --seed flag, then STUMPSPEECH_SEED, then config, then 42.
std::uint64_t resolve_seed(const CLI::App* sub, const Args& args,
                           const json& config) {
  if (flag_passed(sub, "--seed")) return args.seed;
  if (const char* env = std::getenv("STUMPSPEECH_SEED")) {
    std::string text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc() || ptr != text.data() + text.size() ||
        text.empty()) {
      throw UsageError("STUMPSPEECH_SEED must be a non-negative integer; got \"" +
                       text + "\"");
    }
    return value;
  }
  if (auto v = config_uint(config, "seed")) return *v;
  return 42;
}

// Training hyperparameters as the flat options object the library accepts:
// config values first, then flag overrides, then the resolved seed.
json build_train_options(const CLI::App* sub, const Args& args,
                         const json& config, std::uint64_t seed) {
  json options = json::object();
  const char* number_keys[] = {"alpha", "learning_rate", "l2", "lambda"};
  for (const char* key : number_keys) {
    if (auto v = config_number(config, key)) options[key] = *v;
  }
  const char* uint_keys[] = {"logistic_epochs", "svm_epochs", "trees",
                             "max_depth",       "min_leaf",   "mtry",
                             "threads"};
  for (const char* key : uint_keys) {
    if (auto v = config_uint(config, key)) options[key] = *v;
  }
  if (flag_passed(sub, "--alpha")) options["alpha"] = args.alpha;
  if (flag_passed(sub, "--learning-rate")) {
    options["learning_rate"] = args.learning_rate;
  }
  if (flag_passed(sub, "--l2")) options["l2"] = args.l2;
  if (flag_passed(sub, "--logistic-epochs")) {
    options["logistic_epochs"] = args.logistic_epochs;
  }
  if (flag_passed(sub, "--lambda")) options["lambda"] = args.lambda;
  if (flag_passed(sub, "--svm-epochs")) options["svm_epochs"] = args.svm_epochs;
  if (flag_passed(sub, "--trees")) options["trees"] = args.trees;
  if (flag_passed(sub, "--max-depth")) options["max_depth"] = args.max_depth;
  if (flag_passed(sub, "--min-leaf")) options["min_leaf"] = args.min_leaf;
  if (flag_passed(sub, "--mtry")) options["mtry"] = args.mtry;
  if (flag_passed(sub, "--threads")) options["threads"] = args.threads;
  options["seed"] = seed;
  return options;
}

void register_hyper_flags(CLI::App* cmd, Args& args) {
  cmd->add_option("--alpha", args.alpha, "Naive Bayes additive smoothing");
  cmd->add_option("--learning-rate", args.learning_rate,
                  "Logistic regression learning rate");
  cmd->add_option("--l2", args.l2, "Logistic regression L2 penalty");
  cmd->add_option("--logistic-epochs", args.logistic_epochs,
                  "Logistic regression epochs");
  cmd->add_option("--lambda", args.lambda, "SVM (Pegasos) regularisation");
  cmd->add_option("--svm-epochs", args.svm_epochs, "SVM epochs per class");
  cmd->add_option("--trees", args.trees, "Random forest tree count");
  cmd->add_option("--max-depth", args.max_depth, "Random forest depth limit");
  cmd->add_option("--min-leaf", args.min_leaf,
                  "Random forest minimum samples per leaf");
  cmd->add_option("--mtry", args.mtry,
                  "Features tried per split (0 = sqrt of feature count)");
  cmd->add_option("--threads", args.threads,
                  "Forest training threads (0 = hardware)");
}

CorpusPtr load_corpus_handle(const std::string& path,
                             const std::string& format) {
  ss_corpus* corpus = nullptr;
  ss_status status = ss_corpus_load(path.c_str(), format.c_str(), &corpus);
  if (status != SS_OK) {
    throw UsageError(ss_last_error());
  }
  return CorpusPtr(corpus);
}

/* ------------------------------------------------------------ subcommands */

int run_clean(const CLI::App* sub, const Args& args) {
  json config = parsed_config(sub, args);
  std::string in = require_string(sub, "--in", args.in_path, config, "corpus",
                                  "clean: input path");
  std::string out = require_string(sub, "--out", args.out_path, config, "out",
                                   "clean: output path");
  std::string format =
      resolve_string(sub, "--format", args.format, config, "format")
          .value_or("jsonl");
  ss_status status =
      ss_clean_file(in.c_str(), out.c_str(), format.c_str());
  if (status != SS_OK) return fail_status("clean", status);
  return kExitOk;
}

int run_stats(const CLI::App* sub, const Args& args) {
  json config = parsed_config(sub, args);
  std::string in = require_string(sub, "--in", args.in_path, config, "corpus",
                                  "stats: input path");
  std::string format =
      resolve_string(sub, "--format", args.format, config, "format")
          .value_or("jsonl");
  ss_corpus* corpus = nullptr;
  ss_status status = ss_corpus_load(in.c_str(), format.c_str(), &corpus);
  if (status != SS_OK) return fail_status("stats", status);
  CorpusPtr guard(corpus);

  size_t n = 0;
  status = ss_corpus_size(corpus, &n);
  if (status != SS_OK) return fail_status("stats", status);
  if (n == 0) {
    std::cerr << "stumpspeech: warning: corpus " << in << " is empty\n";
  }
  char* table = nullptr;
  status = ss_corpus_stats_text(corpus, &table);
  if (status != SS_OK) return fail_status("stats", status);
  std::cout << table;
  ss_free(table);
  return kExitOk;
}

int run_synth(const CLI::App* sub, const Args& args) {
  json config = parsed_config(sub, args);
  std::string out = require_string(sub, "--out", args.out_path, config, "out",
                                   "synth: output path");
  std::string format =
      resolve_string(sub, "--format", args.format, config, "format")
          .value_or("jsonl");
  std::uint64_t seed = resolve_seed(sub, args, config);

  std::optional<std::vector<std::uint64_t>> counts;
  if (flag_passed(sub, "--counts")) {
    counts = args.counts;
  } else if (auto v = config_uint_list(config, "counts")) {
    counts = *v;
  }
  uint32_t buffer[SS_NUM_CLASSES];
  const uint32_t* counts_ptr = nullptr;
  if (counts) {
    if (counts->size() != SS_NUM_CLASSES) {
      throw UsageError("synth: counts must list exactly " +
                       std::to_string(SS_NUM_CLASSES) + " values");
    }
    for (int c = 0; c < SS_NUM_CLASSES; ++c) {
      if ((*counts)[c] > UINT32_MAX) {
        throw UsageError("synth: count " + std::to_string((*counts)[c]) +
                         " is out of range");
      }
      buffer[c] = static_cast<uint32_t>((*counts)[c]);
    }
    counts_ptr = buffer;
  }

  ss_corpus* corpus = nullptr;
  ss_status status = ss_corpus_synthetic(seed, counts_ptr, &corpus);
  if (status != SS_OK) return fail_status("synth", status);
  CorpusPtr guard(corpus);
  status = ss_corpus_save(corpus, out.c_str(), format.c_str());
  if (status != SS_OK) return fail_status("synth", status);
  std::cout << "wrote " << out << '\n';
  return kExitOk;
}

int run_train(const CLI::App* sub, const Args& args) {
  json config = parsed_config(sub, args);
  std::string in = require_string(sub, "--in", args.in_path, config, "corpus",
                                  "train: corpus path");
  std::string format =
      resolve_string(sub, "--format", args.format, config, "format")
          .value_or("jsonl");
  std::string algorithm =
      require_string(sub, "--algorithm", args.algorithm, config, "algorithm",
                     "train: algorithm (forest, naive_bayes, svm, logistic)");
  std::string out_dir =
      resolve_string(sub, "--out-dir", args.out_dir, config, "out_dir")
          .value_or("out");
  std::uint64_t order =
      resolve_uint(sub, "--order", args.order, config, "order", 1);
  std::uint64_t min_df =
      resolve_uint(sub, "--min-df", args.min_df, config, "min_df", 1);
  bool cumulative = resolve_bool(sub, "--cumulative", args.cumulative, config,
                                 "cumulative", false);
  std::uint64_t seed = resolve_seed(sub, args, config);
  json options = build_train_options(sub, args, config, seed);

  CorpusPtr corpus;
  try {
    corpus = load_corpus_handle(in, format);
  } catch (const UsageError& e) {
    std::cerr << "stumpspeech: train: " << e.what() << '\n';
    return kExitUsage;
  }

  ss_tfidf* vectorizer = nullptr;
  ss_status status =
      ss_tfidf_fit(corpus.get(), static_cast<uint32_t>(order),
                   static_cast<uint32_t>(min_df), cumulative ? 1 : 0,
                   &vectorizer);
  if (status != SS_OK) return fail_status("train", status);
  TfidfPtr vec_guard(vectorizer);

  ss_model* model = nullptr;
  std::string options_text = options.dump();
  status = ss_train(corpus.get(), vectorizer, algorithm.c_str(),
                    options_text.c_str(), &model);
  if (status != SS_OK) return fail_status("train", status);
  ModelPtr model_guard(model);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "stumpspeech: train: cannot create directory " << out_dir
              << ": " << ec.message() << '\n';
    return kExitUsage;
  }
  std::string vec_path = out_dir + "/vectorizer.json";
  std::string model_path = out_dir + "/model.json";
  status = ss_tfidf_save(vectorizer, vec_path.c_str());
  if (status != SS_OK) return fail_status("train", status);
  status = ss_model_save(model, model_path.c_str());
  if (status != SS_OK) return fail_status("train", status);
  std::cout << "wrote " << vec_path << '\n' << "wrote " << model_path << '\n';
  return kExitOk;
}

int run_predict(const CLI::App* sub, const Args& args) {
  json config = parsed_config(sub, args);
  std::string model_path =
      require_string(sub, "--model", args.model_path, config, "model",
                     "predict: model path");
  std::string vec_path =
      require_string(sub, "--vectorizer", args.vectorizer_path, config,
                     "vectorizer", "predict: vectorizer path");
  std::string in = require_string(sub, "--in", args.in_path, config, "corpus",
                                  "predict: input path");
  std::string out = require_string(sub, "--out", args.out_path, config, "out",
                                   "predict: output path");
  std::string format =
      resolve_string(sub, "--format", args.format, config, "format")
          .value_or("jsonl");

  ss_tfidf* vectorizer = nullptr;
  ss_status status = ss_tfidf_load(vec_path.c_str(), &vectorizer);
  if (status != SS_OK) return fail_status("predict", status);
  TfidfPtr vec_guard(vectorizer);

  ss_model* model = nullptr;
  status = ss_model_load(model_path.c_str(), &model);
  if (status != SS_OK) return fail_status("predict", status);
  ModelPtr model_guard(model);

  status = ss_predict_file(model, vectorizer, in.c_str(), format.c_str(),
                           out.c_str());
  if (status != SS_OK) return fail_status("predict", status);
  std::cout << "wrote " << out << '\n';
  return kExitOk;
}

int run_experiment(const CLI::App* sub, const Args& args) {
  json config = parsed_config(sub, args);
  std::string in = require_string(sub, "--in", args.in_path, config, "corpus",
                                  "experiment: corpus path");
  std::string format =
      resolve_string(sub, "--format", args.format, config, "format")
          .value_or("jsonl");
  std::string out_dir =
      resolve_string(sub, "--out-dir", args.out_dir, config, "out_dir")
          .value_or("out");
  std::uint64_t seed = resolve_seed(sub, args, config);

  json options = build_train_options(sub, args, config, seed);
  if (auto v = config_uint_list(config, "orders")) options["orders"] = *v;
  if (flag_passed(sub, "--orders")) options["orders"] = args.orders;
  if (auto v = config_string_list(config, "algorithms")) {
    options["algorithms"] = *v;
  }
  if (flag_passed(sub, "--algorithms")) options["algorithms"] = args.algorithms;
  if (auto v = config_number(config, "test_fraction")) {
    options["test_fraction"] = *v;
  }
  if (flag_passed(sub, "--test-fraction")) {
    options["test_fraction"] = args.test_fraction;
  }
  if (auto v = config_uint(config, "min_df")) options["min_df"] = *v;
  if (flag_passed(sub, "--min-df")) options["min_df"] = args.min_df;
  if (auto v = config_bool(config, "cumulative")) options["cumulative"] = *v;
  if (flag_passed(sub, "--cumulative")) {
    options["cumulative"] = args.cumulative;
  }

  CorpusPtr corpus;
  try {
    corpus = load_corpus_handle(in, format);
  } catch (const UsageError& e) {
    std::cerr << "stumpspeech: experiment: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string options_text = options.dump();
  ss_status status =
      ss_experiment_run(corpus.get(), options_text.c_str(), out_dir.c_str());
  if (status != SS_OK) return fail_status("experiment", status);

  std::ifstream table(out_dir + "/grid.txt", std::ios::binary);
  if (table) std::cout << table.rdbuf();
  std::cout << "wrote " << out_dir << "/grid.csv\n"
            << "wrote " << out_dir << "/grid.txt\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Political tweet sentiment classification pipeline"};
  app.require_subcommand(1);
  Args args;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", args.config_path,
                    "JSON config file; flags override its values");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "Corpus file format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
  };

  CLI::App* clean = app.add_subcommand(
      "clean", "Rewrite tweet texts through the cleaning pipeline");
  add_config(clean);
  clean->add_option("--in", args.in_path, "Input corpus file");
  clean->add_option("--out", args.out_path, "Output corpus file");
  add_format(clean);

  CLI::App* stats =
      app.add_subcommand("stats", "Print the class distribution table");
  add_config(stats);
  stats->add_option("--in", args.in_path, "Input corpus file");
  add_format(stats);

  CLI::App* synth = app.add_subcommand(
      "synth", "Generate the bundled synthetic corpus");
  add_config(synth);
  synth->add_option("--out", args.out_path, "Output corpus file");
  add_format(synth);
  synth->add_option("--seed", args.seed, "Generation seed");
  synth->add_option("--counts", args.counts,
                    "Per-class tweet counts (8 values)")
      ->expected(SS_NUM_CLASSES);

  CLI::App* train = app.add_subcommand(
      "train", "Fit a vectorizer and train one classifier on a corpus");
  add_config(train);
  train->add_option("--in", args.in_path, "Training corpus file");
  add_format(train);
  train->add_option("--algorithm", args.algorithm,
                    "forest, naive_bayes, svm, or logistic");
  train->add_option("--order", args.order, "N-gram order (1-4)");
  train->add_option("--min-df", args.min_df, "Minimum document frequency");
  train->add_flag("--cumulative,!--no-cumulative", args.cumulative,
                  "Use n-gram orders 1..order instead of order alone");
  train->add_option("--out-dir", args.out_dir,
                    "Directory for model.json and vectorizer.json");
  train->add_option("--seed", args.seed, "Training seed");
  register_hyper_flags(train, args);

  CLI::App* predict = app.add_subcommand(
      "predict", "Label a corpus file with a trained model");
  add_config(predict);
  predict->add_option("--model", args.model_path, "Trained model file");
  predict->add_option("--vectorizer", args.vectorizer_path,
                      "Fitted vectorizer file");
  predict->add_option("--in", args.in_path, "Input corpus file");
  predict->add_option("--out", args.out_path, "Output predictions CSV");
  add_format(predict);

  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run the classifier x n-gram-order evaluation grid");
  add_config(experiment);
  experiment->add_option("--in", args.in_path, "Corpus file");
  add_format(experiment);
  experiment->add_option("--orders", args.orders, "N-gram orders to evaluate");
  experiment->add_option("--algorithms", args.algorithms,
                         "Algorithms to evaluate");
  experiment->add_option("--test-fraction", args.test_fraction,
                         "Held-out fraction in (0,1)");
  experiment->add_option("--min-df", args.min_df,
                         "Minimum document frequency");
  experiment->add_flag("--cumulative,!--no-cumulative", args.cumulative,
                       "Use n-gram orders 1..order instead of order alone");
  experiment->add_option("--out-dir", args.out_dir,
                         "Directory for grid.csv and grid.txt");
  experiment->add_option("--seed", args.seed, "Split/training seed");
  register_hyper_flags(experiment, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (clean->parsed()) return run_clean(clean, args);
    if (stats->parsed()) return run_stats(stats, args);
    if (synth->parsed()) return run_synth(synth, args);
    if (train->parsed()) return run_train(train, args);
    if (predict->parsed()) return run_predict(predict, args);
    if (experiment->parsed()) return run_experiment(experiment, args);
  } catch (const UsageError& e) {
    std::cerr << "stumpspeech: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "stumpspeech: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
