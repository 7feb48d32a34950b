#include "naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace stump {

namespace {

std::vector<int> sorted_unique_labels(const std::vector<int>& labels) {
  std::vector<int> classes(labels);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

}  // namespace

NaiveBayesModel train_naive_bayes(const Dataset& data,
                                  const NaiveBayesConfig& config) {
  if (data.size() == 0) {
    throw std::invalid_argument("train_naive_bayes: empty dataset");
  }
  if (!(config.alpha > 0.0)) {
    throw std::invalid_argument("train_naive_bayes: alpha must be > 0");
  }

  NaiveBayesModel model;
  model.dim = data.dim;
  model.alpha = config.alpha;
  model.classes = sorted_unique_labels(data.labels);
  const std::size_t n_classes = model.classes.size();

  std::map<int, std::size_t> class_index;
  for (std::size_t k = 0; k < n_classes; ++k) class_index[model.classes[k]] = k;

  std::vector<std::size_t> counts(n_classes, 0);
  std::vector<std::vector<double>> feature_sum(
      n_classes, std::vector<double>(data.dim, 0.0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t k = class_index.at(data.labels[i]);
    ++counts[k];
    for (const auto& [j, w] : data.rows[i]) {
      if (j >= data.dim) {
        throw std::invalid_argument(
            "train_naive_bayes: feature index exceeds dataset dim");
      }
      feature_sum[k][j] += w;
    }
  }

  model.log_prior.resize(n_classes);
  model.log_likelihood.assign(n_classes, std::vector<double>(data.dim, 0.0));
  for (std::size_t k = 0; k < n_classes; ++k) {
    model.log_prior[k] = std::log(static_cast<double>(counts[k]) /
                                  static_cast<double>(data.size()));
    double total = 0.0;
    for (double w : feature_sum[k]) total += w;
    const double denom = total + config.alpha * static_cast<double>(data.dim);
    for (std::size_t j = 0; j < data.dim; ++j) {
      model.log_likelihood[k][j] =
          std::log((feature_sum[k][j] + config.alpha) / denom);
    }
  }
  return model;
}

std::vector<double> NaiveBayesModel::scores(const SparseVector& x) const {
  std::vector<double> out(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    double s = log_prior[k];
    for (const auto& [j, w] : x) {
      if (j >= dim) {
        throw std::invalid_argument(
            "NaiveBayesModel::scores: feature index exceeds model dim");
      }
      s += w * log_likelihood[k][j];
    }
    out[k] = s;
  }
  return out;
}

int NaiveBayesModel::predict(const SparseVector& x) const {
  const std::vector<double> s = scores(x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] > s[best]) best = k;  // ties keep the lowest class code
  }
  return classes.at(best);
}

}  // namespace stump
