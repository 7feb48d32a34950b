#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "forest.hpp"
#include "linear.hpp"
#include "naive_bayes.hpp"

namespace stump {

// Canonical algorithm names in report row order.
inline const std::vector<std::string>& canonical_algorithms() {
  static const std::vector<std::string> kNames = {"forest", "naive_bayes",
                                                  "svm", "logistic"};
  return kNames;
}

bool is_known_algorithm(const std::string& name);
// "Random Forest", "Naive Bayes", "SVM", "Logistic Regression".
std::string algorithm_display_name(const std::string& name);

struct GridOptions {
  std::vector<std::string> algorithms = canonical_algorithms();
  std::vector<std::uint32_t> orders = {1, 2, 3, 4};
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
  std::uint32_t min_df = 1;
  bool cumulative = false;
  NaiveBayesConfig nb{};
  LogisticConfig logistic{};
  SvmConfig svm{};
  ForestConfig forest{};
};

struct GridCell {
  std::string algorithm;
  std::uint32_t order = 0;
  double precision = 0.0;  // support-weighted averages on the test fold
  double recall = 0.0;
  double f1 = 0.0;
  double seconds = 0.0;  // wall time: vectorise + train + evaluate
};

struct GridResult {
  std::vector<GridCell> cells;
};

// One shared stratified split; per cell the vectoriser is fitted on the
// train fold only and the cell's training seed is options.seed + cell_index.
// Cells enumerate requested algorithms in canonical order, then requested
// orders ascending.  Deterministic apart from the timing field.
GridResult run_experiment_grid(const Corpus& corpus, const GridOptions& options);

// "algorithm,order,precision,recall,f1,seconds" rows, one per cell.
std::string grid_to_csv(const GridResult& grid);
// Plain-text table: one row per algorithm, P/R/F column groups per order.
std::string grid_to_text(const GridResult& grid);

}  // namespace stump
