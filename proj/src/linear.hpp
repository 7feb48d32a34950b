#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dataset.hpp"

namespace stump {

struct LogisticConfig {
  double learning_rate = 0.1;
  double l2 = 1e-4;  // weight penalty (l2/2)*||W||^2; bias unregularised
  std::uint32_t epochs = 200;
};

struct SvmConfig {
  double lambda = 1e-4;        // Pegasos regularisation strength
  std::uint32_t epochs = 20;   // passes over the data per binary problem
  std::uint64_t seed = 42;     // shuffling; per-class sub-seed = seed + k
};

// Shared parameterisation for the two linear classifiers.
struct LinearModel {
  std::string kind;          // "logistic" or "svm_ovr"
  std::vector<int> classes;  // ascending class codes
  std::vector<std::vector<double>> weights;  // [class][feature]
  std::vector<double> bias;                  // per class

  std::size_t dim() const { return weights.empty() ? 0 : weights[0].size(); }
  // Per-class decision values w_k . x + b_k.
  std::vector<double> scores(const SparseVector& x) const;
  // Argmax of scores; exact ties resolve to the lowest class code.
  int predict(const SparseVector& x) const;
};

// Mean softmax cross-entropy over `data` plus (l2/2)*||W||^2.  `classes`
// must be the ascending class list; weights is classes x dim, bias per class.
double logistic_loss(const Dataset& data, const std::vector<int>& classes,
                     const std::vector<std::vector<double>>& weights,
                     const std::vector<double>& bias, double l2);

// Analytic gradient of logistic_loss at (weights, bias).
void logistic_gradient(const Dataset& data, const std::vector<int>& classes,
                       const std::vector<std::vector<double>>& weights,
                       const std::vector<double>& bias, double l2,
                       std::vector<std::vector<double>>& grad_weights,
                       std::vector<double>& grad_bias);

// Full-batch gradient descent from zero initialisation; deterministic.
// When `loss_trace` is non-null it receives the loss before training and
// after every epoch (epochs + 1 values).
LinearModel train_logistic(const Dataset& data, const LogisticConfig& config = {},
                           std::vector<double>* loss_trace = nullptr);

// Binary Pegasos objective (lambda/2)*||w||^2 + mean hinge on w.x + b, with
// labels y in {-1,+1}.
double svm_binary_objective(const Dataset& data, const std::vector<int>& y,
                            const std::vector<double>& w, double bias,
                            double lambda);

// One-vs-rest linear SVM trained with the Pegasos step schedule
// 1/(lambda*t), with t offset by ceil(1/lambda) so the first step is ~1
// (protects the unregularised bias; see train_svm in linear.cpp).
// When `objective_trace` is non-null it receives, per epoch, the mean of the
// per-class binary objectives after that epoch (epochs values).
LinearModel train_svm(const Dataset& data, const SvmConfig& config = {},
                      std::vector<double>* objective_trace = nullptr);

}  // namespace stump
