#pragma once

#include <cstdint>
#include <vector>

#include "dataset.hpp"

namespace stump {

struct ForestConfig {
  std::uint32_t n_trees = 100;
  std::uint32_t max_depth = 20;  // max edges on any root-to-leaf path
  std::uint32_t min_leaf = 1;    // minimum bootstrap samples per child
  std::uint32_t mtry = 0;        // features tried per split; 0 -> ceil(sqrt(dim))
  std::uint64_t seed = 42;       // per-tree sub-seed = seed + tree_index
  std::uint32_t n_threads = 0;   // 0 -> hardware concurrency
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;     // value <= threshold goes left
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::vector<std::uint32_t> counts;  // leaf: bootstrap class histogram
};

struct Tree {
  std::vector<TreeNode> nodes;  // node 0 is the root; never empty
};

// Bagged Gini decision trees with majority voting.  Per-tree randomness is
// derived as seed + tree_index, so the trained model is identical for any
// thread count.
struct ForestModel {
  std::vector<int> classes;  // ascending class codes
  std::size_t dim = 0;
  std::uint32_t n_trees = 0;
  std::uint32_t max_depth = 0;
  std::uint32_t min_leaf = 1;
  std::uint32_t mtry = 0;  // resolved value actually used
  std::uint64_t seed = 0;
  std::vector<Tree> trees;

  // Per-class vote counts across trees.
  std::vector<double> scores(const SparseVector& x) const;
  // Majority vote; exact ties resolve to the lowest class code.
  int predict(const SparseVector& x) const;
};

ForestModel train_forest(const Dataset& data, const ForestConfig& config = {});

// Gini impurity 1 - sum((c/m)^2) of a class-count histogram (0 when empty).
double gini_impurity(const std::vector<std::uint32_t>& counts);

}  // namespace stump
