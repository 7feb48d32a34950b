#include "experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dataset.hpp"
#include "eval.hpp"
#include "features.hpp"
#include "model_io.hpp"
#include "normalize.hpp"

namespace stump {

bool is_known_algorithm(const std::string& name) {
  const auto& known = canonical_algorithms();
  return std::find(known.begin(), known.end(), name) != known.end();
}

std::string algorithm_display_name(const std::string& name) {
  if (name == "forest") return "Random Forest";
  if (name == "naive_bayes") return "Naive Bayes";
  if (name == "svm") return "SVM";
  if (name == "logistic") return "Logistic Regression";
  throw std::invalid_argument("unknown algorithm \"" + name + "\"");
}

namespace {

std::vector<std::string> ordered_algorithms(
    const std::vector<std::string>& requested) {
  for (const std::string& name : requested) {
    if (!is_known_algorithm(name)) {
      throw std::invalid_argument("unknown algorithm \"" + name + "\"");
    }
  }
  const std::set<std::string> wanted(requested.begin(), requested.end());
  std::vector<std::string> out;
  for (const std::string& name : canonical_algorithms()) {
    if (wanted.count(name)) out.push_back(name);
  }
  return out;
}

std::vector<std::uint32_t> ordered_orders(
    const std::vector<std::uint32_t>& requested) {
  for (std::uint32_t order : requested) {
    if (order < 1 || order > kMaxNgramOrder) {
      throw std::invalid_argument("n-gram order must be in 1..4");
    }
  }
  std::vector<std::uint32_t> out(requested);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename T>
std::vector<T> select(const std::vector<T>& values,
                      const std::vector<std::size_t>& indices) {
  std::vector<T> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(values.at(i));
  return out;
}

TrainedModel train_cell(const std::string& algorithm, const Dataset& train,
                        const GridOptions& options, std::uint64_t cell_seed) {
  if (algorithm == "forest") {
    ForestConfig config = options.forest;
    config.seed = cell_seed;
    return train_forest(train, config);
  }
  if (algorithm == "naive_bayes") {
    return train_naive_bayes(train, options.nb);
  }
  if (algorithm == "svm") {
    SvmConfig config = options.svm;
    config.seed = cell_seed;
    return train_svm(train, config);
  }
  return train_logistic(train, options.logistic);
}

}  // namespace

GridResult run_experiment_grid(const Corpus& corpus,
                               const GridOptions& options) {
  const std::vector<std::string> algorithms =
      ordered_algorithms(options.algorithms);
  const std::vector<std::uint32_t> orders = ordered_orders(options.orders);
  GridResult grid;
  if (algorithms.empty() || orders.empty()) return grid;

  std::vector<std::string> texts;
  std::vector<int> labels;
  texts.reserve(corpus.size());
  labels.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    texts.push_back(normalize(corpus[i].text));
    labels.push_back(class_code(corpus[i].label));
  }

  const SplitResult split =
      stratified_split(labels, options.test_fraction, options.seed);
  const std::vector<std::string> train_texts = select(texts, split.train);
  const std::vector<int> train_labels = select(labels, split.train);
  const std::vector<std::string> test_texts = select(texts, split.test);
  const std::vector<int> test_labels = select(labels, split.test);

  std::uint64_t cell_index = 0;
  for (const std::string& algorithm : algorithms) {
    for (std::uint32_t order : orders) {
      const auto start = std::chrono::steady_clock::now();

      TfidfOptions tfidf_options;
      tfidf_options.order = order;
      tfidf_options.min_df = options.min_df;
      tfidf_options.cumulative = options.cumulative;
      const TfidfModel tfidf = TfidfModel::fit(train_texts, tfidf_options);
      const Dataset train = build_dataset(train_texts, train_labels, tfidf);
      const Dataset test = build_dataset(test_texts, test_labels, tfidf);

      const TrainedModel model =
          train_cell(algorithm, train, options, options.seed + cell_index);
      std::vector<int> predictions;
      predictions.reserve(test.size());
      for (const SparseVector& row : test.rows) {
        predictions.push_back(model_predict(model, row));
      }
      const EvaluationReport report = evaluate(test_labels, predictions);

      const auto stop = std::chrono::steady_clock::now();
      GridCell cell;
      cell.algorithm = algorithm;
      cell.order = order;
      cell.precision = report.weighted_precision;
      cell.recall = report.weighted_recall;
      cell.f1 = report.weighted_f1;
      cell.seconds = std::chrono::duration<double>(stop - start).count();
      grid.cells.push_back(std::move(cell));
      ++cell_index;
    }
  }
  return grid;
}

std::string grid_to_csv(const GridResult& grid) {
  std::string out = "algorithm,order,precision,recall,f1,seconds\n";
  char line[160];
  for (const GridCell& cell : grid.cells) {
    std::snprintf(line, sizeof(line), "%s,%u,%.6f,%.6f,%.6f,%.3f\n",
                  cell.algorithm.c_str(), cell.order, cell.precision,
                  cell.recall, cell.f1, cell.seconds);
    out += line;
  }
  return out;
}

std::string grid_to_text(const GridResult& grid) {
  std::vector<std::string> algorithms;
  std::vector<std::uint32_t> orders;
  for (const GridCell& cell : grid.cells) {
    if (std::find(algorithms.begin(), algorithms.end(), cell.algorithm) ==
        algorithms.end()) {
      algorithms.push_back(cell.algorithm);
    }
    if (std::find(orders.begin(), orders.end(), cell.order) == orders.end()) {
      orders.push_back(cell.order);
    }
  }
  std::sort(orders.begin(), orders.end());

  auto find_cell = [&grid](const std::string& algorithm,
                           std::uint32_t order) -> const GridCell* {
    for (const GridCell& cell : grid.cells) {
      if (cell.algorithm == algorithm && cell.order == order) return &cell;
    }
    return nullptr;
  };

  constexpr int kNameWidth = 22;
  constexpr int kColWidth = 7;
  auto pad = [](std::string s, int width) {
    if (static_cast<int>(s.size()) < width) {
      s.append(static_cast<std::size_t>(width) - s.size(), ' ');
    }
    return s;
  };
  auto fixed2 = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  std::string out;
  auto finish_line = [&out]() {
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  };

  out += pad("Classifier", kNameWidth);
  for (std::uint32_t order : orders) {
    out += pad("N=" + std::to_string(order), 3 * kColWidth);
  }
  finish_line();
  out += pad("", kNameWidth);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out += pad("P", kColWidth);
    out += pad("R", kColWidth);
    out += pad("F", kColWidth);
  }
  finish_line();
  for (const std::string& algorithm : algorithms) {
    out += pad(algorithm_display_name(algorithm), kNameWidth);
    for (std::uint32_t order : orders) {
      const GridCell* cell = find_cell(algorithm, order);
      if (cell == nullptr) {
        out += pad("-", kColWidth) + pad("-", kColWidth) + pad("-", kColWidth);
      } else {
        out += pad(fixed2(cell->precision), kColWidth);
        out += pad(fixed2(cell->recall), kColWidth);
        out += pad(fixed2(cell->f1), kColWidth);
      }
    }
    finish_line();
  }
  return out;
}

}  // namespace stump
