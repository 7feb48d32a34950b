#pragma once

#include <cstdint>
#include <vector>

#include "dataset.hpp"

namespace stump {

struct NaiveBayesConfig {
  double alpha = 1.0;  // additive (Laplace) smoothing, must be > 0
};

// Multinomial Naive Bayes over TF-IDF weights used as fractional counts.
struct NaiveBayesModel {
  std::vector<int> classes;  // class codes seen at training time, ascending
  std::vector<double> log_prior;                    // per classes[k]
  std::vector<std::vector<double>> log_likelihood;  // [class][feature]
  std::size_t dim = 0;
  double alpha = 1.0;

  // Log-joint ln P(class) + sum_j x_j ln P(feature_j | class), per class.
  std::vector<double> scores(const SparseVector& x) const;
  // Argmax of scores; exact ties resolve to the lowest class code.
  int predict(const SparseVector& x) const;
};

// log_prior[c]  = ln(count(c) / n)
// log_lik[c][j] = ln((sum of feature-j weights in class c + alpha) /
//                    (sum of all feature weights in class c + alpha * dim))
NaiveBayesModel train_naive_bayes(const Dataset& data,
                                  const NaiveBayesConfig& config = {});

}  // namespace stump
