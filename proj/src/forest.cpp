#include "forest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "rng.hpp"

namespace stump {

namespace {

// Feature-major view of the dataset.  Small feature spaces use dense columns;
// wide (n-gram) spaces use sorted (row, value) postings per feature.
class ColumnStore {
 public:
  static constexpr std::size_t kDenseDimLimit = 512;

  ColumnStore(const Dataset& data)
      : n_rows_(data.size()), dim_(data.dim), dense_(data.dim <= kDenseDimLimit) {
    if (dense_) {
      columns_.assign(dim_, std::vector<double>(n_rows_, 0.0));
      for (std::size_t r = 0; r < n_rows_; ++r) {
        for (const auto& [j, v] : data.rows[r]) {
          columns_[j][r] = v;
        }
      }
    } else {
      postings_.resize(dim_);
      for (std::size_t r = 0; r < n_rows_; ++r) {
        for (const auto& [j, v] : data.rows[r]) {
          postings_[j].emplace_back(static_cast<std::uint32_t>(r), v);
        }
      }
    }
  }

  bool dense() const { return dense_; }
  const std::vector<double>& dense_column(std::uint32_t f) const {
    return columns_[f];
  }
  const std::vector<std::pair<std::uint32_t, double>>& posting_list(
      std::uint32_t f) const {
    return postings_[f];
  }

  double value(std::uint32_t f, std::uint32_t row) const {
    if (dense_) return columns_[f][row];
    const auto& list = postings_[f];
    auto it = std::lower_bound(
        list.begin(), list.end(), row,
        [](const std::pair<std::uint32_t, double>& e, std::uint32_t r) {
          return e.first < r;
        });
    return (it != list.end() && it->first == row) ? it->second : 0.0;
  }

 private:
  std::size_t n_rows_;
  std::size_t dim_;
  bool dense_;
  std::vector<std::vector<double>> columns_;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> postings_;
};

// Draw `k` distinct values from [0, n) (Floyd's algorithm), ascending.
std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n,
                                           std::uint32_t k) {
  std::unordered_set<std::uint32_t> chosen;
  std::vector<std::uint32_t> out;
  out.reserve(k);
  for (std::uint32_t j = n - k; j < n; ++j) {
    const std::uint32_t t =
        static_cast<std::uint32_t>(rng.next_below(std::uint64_t{j} + 1));
    if (chosen.insert(t).second) {
      out.push_back(t);
    } else {
      chosen.insert(j);
      out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const ColumnStore& columns,
              const std::vector<std::uint32_t>& row_class,
              std::size_t n_classes, const ForestConfig& config,
              std::uint32_t mtry)
      : data_(data),
        columns_(columns),
        row_class_(row_class),
        n_classes_(n_classes),
        config_(config),
        mtry_(mtry),
        multiplicity_(data.size(), 0) {}

  Tree build(std::uint64_t tree_seed) {
    Rng rng(tree_seed);
    std::vector<std::uint32_t> samples(data_.size());
    for (auto& r : samples) {
      r = static_cast<std::uint32_t>(rng.next_below(data_.size()));
    }
    tree_.nodes.clear();
    build_node(std::move(samples), 0, rng);
    return std::move(tree_);
  }

 private:
  struct SplitChoice {
    double decrease = 0.0;
    std::uint32_t feature = 0;
    double threshold = 0.0;
    bool found = false;
  };

  std::vector<std::uint32_t> class_histogram(
      const std::vector<std::uint32_t>& samples) const {
    std::vector<std::uint32_t> counts(n_classes_, 0);
    for (std::uint32_t r : samples) ++counts[row_class_[r]];
    return counts;
  }

  std::int32_t make_leaf(std::vector<std::uint32_t> counts) {
    TreeNode node;
    node.feature = -1;
    node.counts = std::move(counts);
    tree_.nodes.push_back(std::move(node));
    return static_cast<std::int32_t>(tree_.nodes.size() - 1);
  }

  // Collect the node's observations of feature `f` as (value, class, weight)
  // runs, plus the zero-valued remainder, and evaluate every boundary between
  // consecutive distinct values.
  void consider_feature(std::uint32_t f,
                        const std::vector<std::uint32_t>& samples,
                        const std::vector<std::uint32_t>& counts,
                        double parent_gini, SplitChoice& best) {
    entries_.clear();
    if (columns_.dense()) {
      const std::vector<double>& col = columns_.dense_column(f);
      for (std::uint32_t r : samples) {
        const double v = col[r];
        if (v != 0.0) entries_.push_back({v, row_class_[r], 1});
      }
    } else {
      for (const auto& [row, v] : columns_.posting_list(f)) {
        const std::uint32_t w = multiplicity_[row];
        if (w > 0 && v != 0.0) entries_.push_back({v, row_class_[row], w});
      }
    }

    const std::uint32_t m = static_cast<std::uint32_t>(samples.size());
    std::uint32_t nonzero_total = 0;
    for (const Entry& e : entries_) nonzero_total += e.weight;
    if (nonzero_total < m) {
      // Rows where the feature is absent form the zero-valued remainder.
      std::vector<std::uint32_t> nonzero_counts(n_classes_, 0);
      for (const Entry& e : entries_) nonzero_counts[e.cls] += e.weight;
      for (std::size_t k = 0; k < n_classes_; ++k) {
        const std::uint32_t zc = counts[k] - nonzero_counts[k];
        if (zc > 0) entries_.push_back({0.0, static_cast<std::uint32_t>(k), zc});
      }
    }

    // Group by distinct value, ascending.  Equal-value entries aggregate into
    // one group, so the sort's tie order cannot affect the result.
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.value < b.value; });
    group_values_.clear();
    group_counts_.clear();
    for (std::size_t i = 0; i < entries_.size();) {
      const double v = entries_[i].value;
      group_values_.push_back(v);
      const std::size_t base = group_counts_.size();
      group_counts_.resize(base + n_classes_, 0);
      for (; i < entries_.size() && entries_[i].value == v; ++i) {
        group_counts_[base + entries_[i].cls] += entries_[i].weight;
      }
    }

    const std::size_t n_groups = group_values_.size();
    if (n_groups < 2) return;

    left_counts_.assign(n_classes_, 0);
    std::uint32_t left_m = 0;
    for (std::size_t g = 0; g + 1 < n_groups; ++g) {
      std::uint32_t group_m = 0;
      for (std::size_t k = 0; k < n_classes_; ++k) {
        const std::uint32_t c = group_counts_[g * n_classes_ + k];
        left_counts_[k] += c;
        group_m += c;
      }
      left_m += group_m;
      const std::uint32_t right_m = m - left_m;
      if (left_m < config_.min_leaf || right_m < config_.min_leaf) continue;

      double left_sq = 0.0;
      double right_sq = 0.0;
      for (std::size_t k = 0; k < n_classes_; ++k) {
        const double lc = static_cast<double>(left_counts_[k]);
        const double rc = static_cast<double>(counts[k] - left_counts_[k]);
        left_sq += lc * lc;
        right_sq += rc * rc;
      }
      const double lm = static_cast<double>(left_m);
      const double rm = static_cast<double>(right_m);
      const double gini_left = 1.0 - left_sq / (lm * lm);
      const double gini_right = 1.0 - right_sq / (rm * rm);
      const double decrease = parent_gini - (lm * gini_left + rm * gini_right) /
                                                static_cast<double>(m);
      // Strict > keeps the first best: lowest feature, then lowest threshold.
      if (decrease > 0.0 && (!best.found || decrease > best.decrease)) {
        best.found = true;
        best.decrease = decrease;
        best.feature = f;
        best.threshold = 0.5 * (group_values_[g] + group_values_[g + 1]);
      }
    }
  }

  std::int32_t build_node(std::vector<std::uint32_t> samples,
                          std::uint32_t depth, Rng& rng) {
    std::vector<std::uint32_t> counts = class_histogram(samples);
    const std::uint32_t m = static_cast<std::uint32_t>(samples.size());
    const bool pure =
        *std::max_element(counts.begin(), counts.end()) == m;
    if (depth >= config_.max_depth || pure || m < 2 * config_.min_leaf ||
        mtry_ == 0) {
      return make_leaf(std::move(counts));
    }

    const std::vector<std::uint32_t> features = sample_distinct(
        rng, static_cast<std::uint32_t>(data_.dim), mtry_);
    for (std::uint32_t r : samples) ++multiplicity_[r];
    const double parent_gini = gini_impurity(counts);
    SplitChoice best;
    for (std::uint32_t f : features) {
      consider_feature(f, samples, counts, parent_gini, best);
    }
    for (std::uint32_t r : samples) multiplicity_[r] = 0;

    if (!best.found) {
      return make_leaf(std::move(counts));
    }

    std::vector<std::uint32_t> left_samples;
    std::vector<std::uint32_t> right_samples;
    for (std::uint32_t r : samples) {
      if (columns_.value(best.feature, r) <= best.threshold) {
        left_samples.push_back(r);
      } else {
        right_samples.push_back(r);
      }
    }

    TreeNode node;
    node.feature = static_cast<std::int32_t>(best.feature);
    node.threshold = best.threshold;
    tree_.nodes.push_back(std::move(node));
    const std::int32_t index = static_cast<std::int32_t>(tree_.nodes.size() - 1);
    const std::int32_t left = build_node(std::move(left_samples), depth + 1, rng);
    const std::int32_t right =
        build_node(std::move(right_samples), depth + 1, rng);
    tree_.nodes[index].left = left;
    tree_.nodes[index].right = right;
    return index;
  }

  struct Entry {
    double value;
    std::uint32_t cls;
    std::uint32_t weight;
  };

  const Dataset& data_;
  const ColumnStore& columns_;
  const std::vector<std::uint32_t>& row_class_;
  std::size_t n_classes_;
  const ForestConfig& config_;
  std::uint32_t mtry_;
  std::vector<std::uint32_t> multiplicity_;  // node-local bootstrap counts
  std::vector<Entry> entries_;
  std::vector<double> group_values_;
  std::vector<std::uint32_t> group_counts_;  // n_groups x n_classes, flat
  std::vector<std::uint32_t> left_counts_;
  Tree tree_;
};

}  // namespace

double gini_impurity(const std::vector<std::uint32_t>& counts) {
  std::uint64_t m = 0;
  for (std::uint32_t c : counts) m += c;
  if (m == 0) return 0.0;
  double sq = 0.0;
  for (std::uint32_t c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(m);
    sq += p * p;
  }
  return 1.0 - sq;
}

ForestModel train_forest(const Dataset& data, const ForestConfig& config) {
  if (data.size() == 0) {
    throw std::invalid_argument("train_forest: empty dataset");
  }
  if (config.n_trees == 0) {
    throw std::invalid_argument("train_forest: n_trees must be >= 1");
  }
  if (config.min_leaf == 0) {
    throw std::invalid_argument("train_forest: min_leaf must be >= 1");
  }

  ForestModel model;
  model.dim = data.dim;
  model.n_trees = config.n_trees;
  model.max_depth = config.max_depth;
  model.min_leaf = config.min_leaf;
  model.seed = config.seed;
  {
    std::vector<int> classes(data.labels);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    model.classes = std::move(classes);
  }

  std::uint32_t mtry = config.mtry;
  if (mtry == 0 && data.dim > 0) {
    mtry = static_cast<std::uint32_t>(
        std::ceil(std::sqrt(static_cast<double>(data.dim))));
  }
  mtry = std::min<std::uint32_t>(mtry, static_cast<std::uint32_t>(data.dim));
  model.mtry = mtry;

  std::map<int, std::uint32_t> class_index;
  for (std::size_t k = 0; k < model.classes.size(); ++k) {
    class_index[model.classes[k]] = static_cast<std::uint32_t>(k);
  }
  std::vector<std::uint32_t> row_class(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    row_class[i] = class_index.at(data.labels[i]);
  }

  const ColumnStore columns(data);
  model.trees.resize(config.n_trees);

  std::uint32_t n_threads = config.n_threads;
  if (n_threads == 0) {
    n_threads = std::max(1u, std::thread::hardware_concurrency());
  }
  n_threads = std::min(n_threads, config.n_trees);

  auto work = [&](std::uint32_t first) {
    TreeBuilder builder(data, columns, row_class, model.classes.size(), config,
                        mtry);
    for (std::uint32_t t = first; t < config.n_trees; t += n_threads) {
      model.trees[t] = builder.build(config.seed + t);
    }
  };
  if (n_threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::uint32_t h = 0; h < n_threads; ++h) pool.emplace_back(work, h);
    for (std::thread& th : pool) th.join();
  }
  return model;
}

namespace {

double sparse_value(const SparseVector& x, std::uint32_t j) {
  auto it = std::lower_bound(
      x.begin(), x.end(), j,
      [](const std::pair<std::uint32_t, double>& e, std::uint32_t f) {
        return e.first < f;
      });
  return (it != x.end() && it->first == j) ? it->second : 0.0;
}

}  // namespace

std::vector<double> ForestModel::scores(const SparseVector& x) const {
  for (const auto& [j, v] : x) {
    (void)v;
    if (j >= dim) {
      throw std::invalid_argument(
          "ForestModel::scores: feature index exceeds model dim");
    }
  }
  std::vector<double> votes(classes.size(), 0.0);
  for (const Tree& tree : trees) {
    std::int32_t node = 0;
    while (tree.nodes[node].feature >= 0) {
      const TreeNode& n = tree.nodes[node];
      node = sparse_value(x, static_cast<std::uint32_t>(n.feature)) <=
                     n.threshold
                 ? n.left
                 : n.right;
    }
    const auto& counts = tree.nodes[node].counts;
    std::size_t best = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      if (counts[k] > counts[best]) best = k;  // ties keep lowest class
    }
    votes[best] += 1.0;
  }
  return votes;
}

int ForestModel::predict(const SparseVector& x) const {
  const std::vector<double> votes = scores(x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < votes.size(); ++k) {
    if (votes[k] > votes[best]) best = k;
  }
  return classes.at(best);
}

}  // namespace stump
