#include "eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace stump {

SplitResult stratified_split(const std::vector<int>& labels,
                             double test_fraction, std::uint64_t seed) {
  if (labels.empty()) {
    throw std::invalid_argument("stratified_split: empty corpus");
  }
  if (!(test_fraction > 0.0) || !(test_fraction < 1.0)) {
    throw std::invalid_argument(
        "stratified_split: test_fraction must lie in (0, 1)");
  }
  for (int label : labels) {
    if (!is_valid_class_code(label)) {
      throw std::invalid_argument("stratified_split: label outside 1..8");
    }
  }

  SplitResult split;
  split.test_fraction = test_fraction;
  split.seed = seed;
  Rng rng(seed);
  for (int code = 1; code <= kNumClasses; ++code) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == code) members.push_back(i);
    }
    if (members.empty()) continue;
    if (members.size() == 1) {
      split.singleton_classes.push_back(code);
      split.train.push_back(members[0]);
      continue;
    }
    rng.shuffle(members);
    std::size_t n_test = static_cast<std::size_t>(std::floor(
        static_cast<double>(members.size()) * test_fraction + 0.5));
    if (n_test >= members.size()) n_test = members.size() - 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      (i < n_test ? split.test : split.train).push_back(members[i]);
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

SplitResult stratified_split(const Corpus& corpus, double test_fraction,
                             std::uint64_t seed) {
  std::vector<int> labels;
  labels.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    labels.push_back(class_code(corpus[i].label));
  }
  return stratified_split(labels, test_fraction, seed);
}

EvaluationReport evaluate(const std::vector<int>& y_true,
                          const std::vector<int>& y_pred) {
  if (y_true.empty()) throw std::invalid_argument("evaluate: empty input");
  if (y_true.size() != y_pred.size()) {
    throw std::invalid_argument("evaluate: length mismatch");
  }

  EvaluationReport report;
  report.n = y_true.size();
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (!is_valid_class_code(y_true[i]) || !is_valid_class_code(y_pred[i])) {
      throw std::invalid_argument("evaluate: label outside 1..8");
    }
    ++report.confusion[y_true[i] - 1][y_pred[i] - 1];
  }

  const double n = static_cast<double>(report.n);
  double correct = 0.0;
  double macro_p = 0.0;
  double macro_r = 0.0;
  double macro_f = 0.0;
  std::size_t present_classes = 0;
  for (int c = 0; c < kNumClasses; ++c) {
    std::uint64_t tp = report.confusion[c][c];
    std::uint64_t row_total = 0;  // true instances of c
    std::uint64_t col_total = 0;  // predictions of c
    for (int k = 0; k < kNumClasses; ++k) {
      row_total += report.confusion[c][k];
      col_total += report.confusion[k][c];
    }
    ClassMetrics& m = report.per_class[c];
    m.class_code = c + 1;
    m.support = row_total;
    if (col_total > 0) {
      m.precision = static_cast<double>(tp) / static_cast<double>(col_total);
    } else {
      m.zero_division = true;
    }
    if (row_total > 0) {
      m.recall = static_cast<double>(tp) / static_cast<double>(row_total);
    } else {
      m.zero_division = true;
    }
    if (m.precision + m.recall > 0.0) {
      m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    } else {
      m.zero_division = true;
    }
    correct += static_cast<double>(tp);

    const double support = static_cast<double>(m.support);
    report.weighted_precision += support * m.precision;
    report.weighted_recall += support * m.recall;
    report.weighted_f1 += support * m.f1;
    if (m.support > 0) {
      ++present_classes;
      macro_p += m.precision;
      macro_r += m.recall;
      macro_f += m.f1;
    }
  }
  report.accuracy = correct / n;
  report.weighted_precision /= n;
  report.weighted_recall /= n;
  report.weighted_f1 /= n;
  if (present_classes > 0) {
    report.macro_precision = macro_p / static_cast<double>(present_classes);
    report.macro_recall = macro_r / static_cast<double>(present_classes);
    report.macro_f1 = macro_f / static_cast<double>(present_classes);
  }
  return report;
}

}  // namespace stump
