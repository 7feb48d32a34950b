#include "linear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace stump {

namespace {

std::vector<int> sorted_unique_labels(const std::vector<int>& labels) {
  std::vector<int> classes(labels);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

double sparse_dot(const std::vector<double>& w, const SparseVector& x) {
  double s = 0.0;
  for (const auto& [j, v] : x) {
    if (j >= w.size()) {
      throw std::invalid_argument("linear: feature index exceeds model dim");
    }
    s += w[j] * v;
  }
  return s;
}

void check_multiclass(const Dataset& data, const std::vector<int>& classes,
                      const char* who) {
  if (data.size() == 0) {
    throw std::invalid_argument(std::string(who) + ": empty dataset");
  }
  if (classes.size() < 2) {
    throw std::invalid_argument(std::string(who) +
                                ": need at least 2 classes");
  }
}

}  // namespace

std::vector<double> LinearModel::scores(const SparseVector& x) const {
  std::vector<double> out(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    out[k] = sparse_dot(weights[k], x) + bias[k];
  }
  return out;
}

int LinearModel::predict(const SparseVector& x) const {
  const std::vector<double> s = scores(x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] > s[best]) best = k;  // ties keep the lowest class code
  }
  return classes.at(best);
}

double logistic_loss(const Dataset& data, const std::vector<int>& classes,
                     const std::vector<std::vector<double>>& weights,
                     const std::vector<double>& bias, double l2) {
  std::map<int, std::size_t> class_index;
  for (std::size_t k = 0; k < classes.size(); ++k) class_index[classes[k]] = k;

  double total = 0.0;
  std::vector<double> z(classes.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t k = 0; k < classes.size(); ++k) {
      z[k] = sparse_dot(weights[k], data.rows[i]) + bias[k];
    }
    const double zmax = *std::max_element(z.begin(), z.end());
    double sum_exp = 0.0;
    for (double zk : z) sum_exp += std::exp(zk - zmax);
    const double log_sum = zmax + std::log(sum_exp);
    total += log_sum - z[class_index.at(data.labels[i])];
  }
  double penalty = 0.0;
  for (const auto& row : weights) {
    for (double w : row) penalty += w * w;
  }
  return total / static_cast<double>(data.size()) + 0.5 * l2 * penalty;
}

void logistic_gradient(const Dataset& data, const std::vector<int>& classes,
                       const std::vector<std::vector<double>>& weights,
                       const std::vector<double>& bias, double l2,
                       std::vector<std::vector<double>>& grad_weights,
                       std::vector<double>& grad_bias) {
  std::map<int, std::size_t> class_index;
  for (std::size_t k = 0; k < classes.size(); ++k) class_index[classes[k]] = k;

  const std::size_t n_classes = classes.size();
  const std::size_t dim = weights.empty() ? 0 : weights[0].size();
  grad_weights.assign(n_classes, std::vector<double>(dim, 0.0));
  grad_bias.assign(n_classes, 0.0);

  const double inv_n = 1.0 / static_cast<double>(data.size());
  std::vector<double> z(n_classes);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t k = 0; k < n_classes; ++k) {
      z[k] = sparse_dot(weights[k], data.rows[i]) + bias[k];
    }
    const double zmax = *std::max_element(z.begin(), z.end());
    double sum_exp = 0.0;
    for (double& zk : z) {
      zk = std::exp(zk - zmax);
      sum_exp += zk;
    }
    const std::size_t yi = class_index.at(data.labels[i]);
    for (std::size_t k = 0; k < n_classes; ++k) {
      const double p = z[k] / sum_exp;
      const double coeff = (p - (k == yi ? 1.0 : 0.0)) * inv_n;
      for (const auto& [j, v] : data.rows[i]) {
        grad_weights[k][j] += coeff * v;
      }
      grad_bias[k] += coeff;
    }
  }
  for (std::size_t k = 0; k < n_classes; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      grad_weights[k][j] += l2 * weights[k][j];
    }
  }
}

LinearModel train_logistic(const Dataset& data, const LogisticConfig& config,
                           std::vector<double>* loss_trace) {
  LinearModel model;
  model.kind = "logistic";
  model.classes = sorted_unique_labels(data.labels);
  check_multiclass(data, model.classes, "train_logistic");
  if (!(config.learning_rate > 0.0) || config.epochs == 0 || config.l2 < 0.0) {
    throw std::invalid_argument("train_logistic: invalid hyperparameters");
  }

  const std::size_t n_classes = model.classes.size();
  model.weights.assign(n_classes, std::vector<double>(data.dim, 0.0));
  model.bias.assign(n_classes, 0.0);

  if (loss_trace != nullptr) {
    loss_trace->clear();
    loss_trace->push_back(
        logistic_loss(data, model.classes, model.weights, model.bias, config.l2));
  }

  std::vector<std::vector<double>> grad_w;
  std::vector<double> grad_b;
  for (std::uint32_t epoch = 0; epoch < config.epochs; ++epoch) {
    logistic_gradient(data, model.classes, model.weights, model.bias, config.l2,
                      grad_w, grad_b);
    for (std::size_t k = 0; k < n_classes; ++k) {
      for (std::size_t j = 0; j < data.dim; ++j) {
        model.weights[k][j] -= config.learning_rate * grad_w[k][j];
      }
      model.bias[k] -= config.learning_rate * grad_b[k];
    }
    if (loss_trace != nullptr) {
      loss_trace->push_back(logistic_loss(data, model.classes, model.weights,
                                          model.bias, config.l2));
    }
  }
  return model;
}

double svm_binary_objective(const Dataset& data, const std::vector<int>& y,
                            const std::vector<double>& w, double bias,
                            double lambda) {
  if (y.size() != data.size()) {
    throw std::invalid_argument("svm_binary_objective: label size mismatch");
  }
  double hinge = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double margin =
        static_cast<double>(y[i]) * (sparse_dot(w, data.rows[i]) + bias);
    hinge += std::max(0.0, 1.0 - margin);
  }
  double norm2 = 0.0;
  for (double wj : w) norm2 += wj * wj;
  return 0.5 * lambda * norm2 + hinge / static_cast<double>(data.size());
}

LinearModel train_svm(const Dataset& data, const SvmConfig& config,
                      std::vector<double>* objective_trace) {
  LinearModel model;
  model.kind = "svm_ovr";
  model.classes = sorted_unique_labels(data.labels);
  check_multiclass(data, model.classes, "train_svm");
  if (!(config.lambda > 0.0) || config.epochs == 0) {
    throw std::invalid_argument("train_svm: invalid hyperparameters");
  }

  const std::size_t n = data.size();
  const std::size_t n_classes = model.classes.size();
  model.weights.assign(n_classes, std::vector<double>(data.dim, 0.0));
  model.bias.assign(n_classes, 0.0);
  if (objective_trace != nullptr) {
    objective_trace->assign(config.epochs, 0.0);
  }

  for (std::size_t k = 0; k < n_classes; ++k) {
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = data.labels[i] == model.classes[k] ? 1 : -1;
    }

    Rng rng(config.seed + k);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    std::vector<double> w(data.dim, 0.0);  // true weights = scale * w
    double scale = 1.0;
    double bias = 0.0;
    // Offsetting the 1/(lambda*t) schedule by ceil(1/lambda) caps the first
    // step near 1.  Without it the first steps have magnitude ~1/lambda;
    // the weights recover through the multiplicative shrink, but the
    // unregularised bias would keep that kick almost verbatim and classes
    // with few positives could never pull it back.
    const auto t0 = static_cast<std::uint64_t>(std::ceil(1.0 / config.lambda));
    std::uint64_t t = 0;
    for (std::uint32_t epoch = 0; epoch < config.epochs; ++epoch) {
      rng.shuffle(order);
      for (std::size_t i : order) {
        ++t;
        const double eta =
            1.0 / (config.lambda * static_cast<double>(t0 + t));
        scale *= 1.0 - eta * config.lambda;  // = 1 - 1/(t0 + t), never zero
        if (std::abs(scale) < 1e-12) {
          for (double& wj : w) wj *= scale;
          scale = 1.0;
        }
        const double margin = static_cast<double>(y[i]) *
                              (scale * sparse_dot(w, data.rows[i]) + bias);
        if (margin < 1.0) {
          const double step = eta * static_cast<double>(y[i]) / scale;
          for (const auto& [j, v] : data.rows[i]) {
            w[j] += step * v;
          }
          bias += eta * static_cast<double>(y[i]);
        }
      }
      if (objective_trace != nullptr) {
        std::vector<double> actual(w);
        for (double& wj : actual) wj *= scale;
        (*objective_trace)[epoch] +=
            svm_binary_objective(data, y, actual, bias, config.lambda) /
            static_cast<double>(n_classes);
      }
    }
    for (std::size_t j = 0; j < data.dim; ++j) {
      model.weights[k][j] = scale * w[j];
    }
    model.bias[k] = bias;
  }
  return model;
}

}  // namespace stump
