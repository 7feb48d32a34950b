#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "corpus.hpp"

namespace stump {

// Deterministic stratified train/test partition over class labels.
struct SplitResult {
  std::vector<std::size_t> train;  // ascending row indices
  std::vector<std::size_t> test;   // ascending row indices, disjoint from train
  double test_fraction = 0.0;
  std::uint64_t seed = 0;
  // Classes with a single member are pinned to train and flagged here.
  std::vector<int> singleton_classes;
};

// Per class (ascending code): shuffle members with one shared seeded RNG and
// move round(count * test_fraction) of them to test, always keeping at least
// one member in train.  Throws on empty input or test_fraction outside (0,1).
SplitResult stratified_split(const std::vector<int>& labels,
                             double test_fraction, std::uint64_t seed);
SplitResult stratified_split(const Corpus& corpus, double test_fraction,
                             std::uint64_t seed);

struct ClassMetrics {
  int class_code = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;        // true instances of the class
  bool zero_division = false;     // some denominator was zero; metric forced 0
};

struct EvaluationReport {
  // counts[t][p]: items of true class code t+1 predicted as code p+1.
  std::array<std::array<std::uint64_t, kNumClasses>, kNumClasses> confusion{};
  std::array<ClassMetrics, kNumClasses> per_class{};
  std::size_t n = 0;
  double accuracy = 0.0;
  // Support-weighted averages (primary. equals accuracy for recall).
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  // Unweighted means over classes that appear in the truth labels.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
};

// Precision/recall/F1 per class over the fixed 8-class universe.
// Zero-denominator metrics become 0 with the class's zero_division flag set.
// Throws on empty input, length mismatch, or label codes outside 1..8.
EvaluationReport evaluate(const std::vector<int>& y_true,
                          const std::vector<int>& y_pred);

}  // namespace stump
