#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "dataset.hpp"
#include "forest.hpp"
#include "linear.hpp"
#include "naive_bayes.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace stump;

namespace {

SparseVector sparse_of(const std::vector<double>& dense) {
  SparseVector v;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0.0) v.push_back({static_cast<std::uint32_t>(j), dense[j]});
  }
  return v;
}

Dataset dataset_of(const std::vector<std::vector<double>>& rows,
                   const std::vector<int>& labels) {
  Dataset data;
  data.dim = rows.empty() ? 0 : rows[0].size();
  data.labels = labels;
  for (const auto& row : rows) data.rows.push_back(sparse_of(row));
  return data;
}

// Random small dense corpus; labels drawn from 1..max_label with every label
// appearing at least once.
struct SmallCorpus {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::vector<int> classes;
};

SmallCorpus random_small_corpus(Rng& rng, std::size_t max_docs,
                                std::size_t max_features, int max_label,
                                bool integer_counts) {
  SmallCorpus c;
  const std::size_t docs = 2 + rng.next_below(max_docs - 1);
  const std::size_t dim = 1 + rng.next_below(max_features);
  for (std::size_t i = 0; i < docs; ++i) {
    std::vector<double> row(dim, 0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      if (rng.next_bernoulli(0.7)) {
        row[j] = integer_counts
                     ? static_cast<double>(rng.next_below(4))
                     : rng.next_unit() * 2.0;
      }
    }
    c.rows.push_back(std::move(row));
    c.labels.push_back(1 + static_cast<int>(rng.next_below(
                               static_cast<std::uint64_t>(max_label))));
  }
  std::set<int> present(c.labels.begin(), c.labels.end());
  c.classes.assign(present.begin(), present.end());
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Naive Bayes

TEST_CASE("naive bayes matches a worked two-document example") {
  // docs: class 1 = "good good bad" counts (2,1); class 2 = "bad" counts (0,1)
  // alpha 1: P(good|1) = (2+1)/(3+2) = 3/5, P(bad|1) = (1+1)/5 = 2/5
  //          P(good|2) = (0+1)/(1+2) = 1/3, P(bad|2) = (1+1)/3 = 2/3
  const Dataset data = dataset_of({{2, 1}, {0, 1}}, {1, 2});
  const NaiveBayesModel model = train_naive_bayes(data, {.alpha = 1.0});
  REQUIRE(model.classes == std::vector<int>{1, 2});
  CHECK(model.log_prior[0] == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(model.log_likelihood[0][0] ==
        doctest::Approx(std::log(3.0 / 5.0)).epsilon(1e-14));
  CHECK(model.log_likelihood[0][1] ==
        doctest::Approx(std::log(2.0 / 5.0)).epsilon(1e-14));
  CHECK(model.log_likelihood[1][0] ==
        doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-14));
  CHECK(model.log_likelihood[1][1] ==
        doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-14));

  // a "good"-heavy document goes to class 1, a "bad" one to class 2
  CHECK(model.predict(sparse_of({3, 0})) == 1);
  CHECK(model.predict(sparse_of({0, 3})) == 2);
}

TEST_CASE("naive bayes log-joint matches the brute-force oracle") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const SmallCorpus c = random_small_corpus(rng, 5, 6, 3, trial % 2 == 0);
    const double alpha = trial % 3 == 0 ? 0.5 : 1.0;
    const NaiveBayesModel model =
        train_naive_bayes(dataset_of(c.rows, c.labels), {.alpha = alpha});
    REQUIRE(model.classes == c.classes);

    std::vector<double> x(c.rows[0].size());
    for (auto& value : x) {
      value = rng.next_bernoulli(0.5) ? static_cast<double>(rng.next_below(3))
                                      : 0.0;
    }
    const auto got = model.scores(sparse_of(x));
    const auto want =
        oracle::naive_bayes_scores(c.rows, c.labels, c.classes, alpha, x);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(std::abs(got[k] - want[k]) <= 1e-12);
    }

    // argmax with lowest-code tie-break
    int best = 0;
    for (std::size_t k = 1; k < want.size(); ++k) {
      if (want[k] > want[best]) best = static_cast<int>(k);
    }
    CHECK(model.predict(sparse_of(x)) == c.classes[best]);
  }
}

TEST_CASE("naive bayes prediction ties resolve to the lowest class code") {
  // Two identical classes: scores are equal, the lower code must win.
  const Dataset data = dataset_of({{1, 1}, {1, 1}}, {4, 6});
  const NaiveBayesModel model = train_naive_bayes(data);
  const auto scores = model.scores(sparse_of({1, 1}));
  REQUIRE(scores.size() == 2);
  CHECK(scores[0] == scores[1]);
  CHECK(model.predict(sparse_of({1, 1})) == 4);
}

// ---------------------------------------------------------------------------
// Logistic regression

TEST_CASE("logistic loss at zero weights is ln(K)") {
  const Dataset data = dataset_of({{1, 0}, {0, 1}, {1, 1}}, {1, 2, 3});
  const std::vector<int> classes = {1, 2, 3};
  const std::vector<std::vector<double>> w(3, std::vector<double>(2, 0.0));
  const std::vector<double> b(3, 0.0);
  CHECK(logistic_loss(data, classes, w, b, 0.0) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  // the L2 term adds (l2/2) * ||W||^2
  std::vector<std::vector<double>> w2 = w;
  w2[0][0] = 2.0;
  CHECK(logistic_loss(data, classes, w2, b, 0.1) -
            logistic_loss(data, classes, w2, b, 0.0) ==
        doctest::Approx(0.05 * 4.0).epsilon(1e-12));
}

TEST_CASE("logistic analytic gradient matches central finite differences") {
  Rng rng(321);
  const std::size_t samples = 10, dim = 6;
  const int n_classes = 3;
  std::vector<std::vector<double>> rows(samples, std::vector<double>(dim));
  std::vector<int> labels(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    for (auto& v : rows[i]) v = rng.next_unit() * 2.0 - 1.0;
    labels[i] = 1 + static_cast<int>(i) % n_classes;
  }
  const Dataset data = dataset_of(rows, labels);
  const std::vector<int> classes = {1, 2, 3};
  const double l2 = 1e-3;
  const double h = 1e-5;

  for (int point = 0; point < 5; ++point) {
    std::vector<std::vector<double>> w(n_classes, std::vector<double>(dim));
    std::vector<double> b(n_classes);
    for (auto& wk : w) {
      for (auto& v : wk) v = rng.next_unit() * 2.0 - 1.0;
    }
    for (auto& v : b) v = rng.next_unit() * 2.0 - 1.0;

    std::vector<std::vector<double>> gw;
    std::vector<double> gb;
    logistic_gradient(data, classes, w, b, l2, gw, gb);

    double num = 0.0, den = 0.0;
    auto accumulate = [&](double analytic, double fd) {
      num += (analytic - fd) * (analytic - fd);
      den += (analytic + fd) * (analytic + fd);
    };
    for (int k = 0; k < n_classes; ++k) {
      for (std::size_t j = 0; j < dim; ++j) {
        auto wp = w;
        wp[k][j] += h;
        auto wm = w;
        wm[k][j] -= h;
        const double fd = (logistic_loss(data, classes, wp, b, l2) -
                           logistic_loss(data, classes, wm, b, l2)) /
                          (2 * h);
        accumulate(gw[k][j], fd);
      }
      auto bp = b;
      bp[k] += h;
      auto bm = b;
      bm[k] -= h;
      const double fd = (logistic_loss(data, classes, w, bp, l2) -
                         logistic_loss(data, classes, w, bm, l2)) /
                        (2 * h);
      accumulate(gb[k], fd);
    }
    const double rel = std::sqrt(num) / std::max(1e-12, std::sqrt(den));
    CAPTURE(point);
    CHECK(rel <= 1e-5);
  }
}

TEST_CASE("logistic training monotonically reduces the loss") {
  Rng rng(55);
  const SmallCorpus c = random_small_corpus(rng, 12, 5, 3, false);
  const Dataset data = dataset_of(c.rows, c.labels);
  std::vector<double> trace;
  const LinearModel model =
      train_logistic(data, {.learning_rate = 0.1, .l2 = 1e-4, .epochs = 50},
                     &trace);
  REQUIRE(trace.size() == 51);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] <= trace[i - 1] + 1e-12);
  }
  CHECK(model.kind == "logistic");
  CHECK(model.classes == c.classes);
  CHECK(model.dim() == c.rows[0].size());
}

TEST_CASE("logistic separates an easy two-class problem") {
  const Dataset data = dataset_of(
      {{1, 0}, {0.9, 0.1}, {0, 1}, {0.1, 0.9}, {1, 0}, {0, 1}},
      {1, 1, 2, 2, 1, 2});
  const LinearModel model = train_logistic(data);
  CHECK(model.predict(sparse_of({1, 0})) == 1);
  CHECK(model.predict(sparse_of({0, 1})) == 2);
}

TEST_CASE("logistic training is deterministic") {
  Rng rng(77);
  const SmallCorpus c = random_small_corpus(rng, 10, 4, 3, false);
  const Dataset data = dataset_of(c.rows, c.labels);
  const LinearModel a = train_logistic(data);
  const LinearModel b = train_logistic(data);
  CHECK(a.weights == b.weights);  // bitwise
  CHECK(a.bias == b.bias);
}

// ---------------------------------------------------------------------------
// Linear SVM

TEST_CASE("svm binary objective is the regularised mean hinge") {
  const Dataset data = dataset_of({{1, 0}, {0, 1}}, {1, 2});
  const std::vector<int> y = {+1, -1};
  const std::vector<double> w = {0.5, -0.25};
  const double b = 0.1;
  const double lambda = 0.01;
  // margins: +1 * (0.5 + 0.1) = 0.6 -> hinge 0.4
  //          -1 * (-0.25 + 0.1) = 0.15 -> hinge 0.85
  const double expected =
      0.5 * lambda * (0.5 * 0.5 + 0.25 * 0.25) + 0.5 * (0.4 + 0.85);
  CHECK(svm_binary_objective(data, y, w, b, lambda) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("svm separates an easy problem and reports objectives") {
  const Dataset data = dataset_of(
      {{1, 0}, {0.9, 0.1}, {0, 1}, {0.1, 0.9}, {1, 0}, {0, 1}},
      {1, 1, 2, 2, 1, 2});
  std::vector<double> trace;
  const LinearModel model = train_svm(data, {}, &trace);
  CHECK(model.kind == "svm_ovr");
  REQUIRE(trace.size() == SvmConfig{}.epochs);
  CHECK(model.predict(sparse_of({1, 0})) == 1);
  CHECK(model.predict(sparse_of({0, 1})) == 2);
  // the final objective is no worse than the first epoch's
  CHECK(trace.back() <= trace.front() + 1e-9);
}

TEST_CASE("svm training is deterministic per seed and varies across seeds") {
  Rng rng(88);
  const SmallCorpus c = random_small_corpus(rng, 14, 5, 3, false);
  const Dataset data = dataset_of(c.rows, c.labels);
  const LinearModel a = train_svm(data, {.lambda = 1e-4, .epochs = 5, .seed = 42});
  const LinearModel b = train_svm(data, {.lambda = 1e-4, .epochs = 5, .seed = 42});
  const LinearModel c2 = train_svm(data, {.lambda = 1e-4, .epochs = 5, .seed = 43});
  CHECK(a.weights == b.weights);
  CHECK(a.bias == b.bias);
  CHECK(a.weights != c2.weights);
}

// ---------------------------------------------------------------------------
// Random forest

TEST_CASE("gini impurity of class histograms") {
  CHECK(gini_impurity({}) == 0.0);
  CHECK(gini_impurity({5}) == 0.0);
  CHECK(gini_impurity({1, 1}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gini_impurity({1, 1, 1, 1}) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(gini_impurity({3, 1}) ==
        doctest::Approx(1.0 - (9.0 + 1.0) / 16.0).epsilon(1e-14));
}

TEST_CASE("forest fits an easy problem and votes consistently") {
  const Dataset data = dataset_of(
      {{1, 0}, {0.9, 0.1}, {0.8, 0}, {0, 1}, {0.1, 0.9}, {0, 0.8}},
      {1, 1, 1, 2, 2, 2});
  const ForestModel model = train_forest(data, {.n_trees = 25});
  CHECK(model.classes == std::vector<int>{1, 2});
  CHECK(model.n_trees == 25);
  CHECK(model.trees.size() == 25);
  CHECK(model.predict(sparse_of({1, 0})) == 1);
  CHECK(model.predict(sparse_of({0, 1})) == 2);
  // vote counts over 25 trees sum to 25
  const auto scores = model.scores(sparse_of({1, 0}));
  REQUIRE(scores.size() == 2);
  CHECK(scores[0] + scores[1] == doctest::Approx(25.0));
  CHECK(scores[0] > scores[1]);
}

TEST_CASE("forest training is thread-count invariant and seed deterministic") {
  Rng rng(99);
  const SmallCorpus c = random_small_corpus(rng, 30, 6, 4, false);
  const Dataset data = dataset_of(c.rows, c.labels);

  const ForestModel one =
      train_forest(data, {.n_trees = 16, .seed = 7, .n_threads = 1});
  const ForestModel four =
      train_forest(data, {.n_trees = 16, .seed = 7, .n_threads = 4});
  REQUIRE(one.trees.size() == four.trees.size());
  for (std::size_t t = 0; t < one.trees.size(); ++t) {
    REQUIRE(one.trees[t].nodes.size() == four.trees[t].nodes.size());
    for (std::size_t n = 0; n < one.trees[t].nodes.size(); ++n) {
      const TreeNode& a = one.trees[t].nodes[n];
      const TreeNode& b = four.trees[t].nodes[n];
      CHECK(a.feature == b.feature);
      CHECK(a.threshold == b.threshold);
      CHECK(a.left == b.left);
      CHECK(a.right == b.right);
      CHECK(a.counts == b.counts);
    }
  }

  const ForestModel other =
      train_forest(data, {.n_trees = 16, .seed = 8, .n_threads = 1});
  bool any_difference = false;
  for (std::size_t t = 0; t < one.trees.size() && !any_difference; ++t) {
    if (one.trees[t].nodes.size() != other.trees[t].nodes.size()) {
      any_difference = true;
      break;
    }
    for (std::size_t n = 0; n < one.trees[t].nodes.size(); ++n) {
      const TreeNode& a = one.trees[t].nodes[n];
      const TreeNode& b = other.trees[t].nodes[n];
      if (a.feature != b.feature || a.threshold != b.threshold) {
        any_difference = true;
        break;
      }
    }
  }
  CHECK(any_difference);
}

TEST_CASE("forest respects max_depth") {
  Rng rng(101);
  const SmallCorpus c = random_small_corpus(rng, 40, 6, 4, false);
  const Dataset data = dataset_of(c.rows, c.labels);
  const ForestModel model = train_forest(data, {.n_trees = 8, .max_depth = 2});
  for (const Tree& tree : model.trees) {
    // walk every node measuring depth
    std::vector<std::pair<std::int32_t, int>> stack = {{0, 0}};
    while (!stack.empty()) {
      auto [node, depth] = stack.back();
      stack.pop_back();
      CHECK(depth <= 2);
      const TreeNode& n = tree.nodes[static_cast<std::size_t>(node)];
      if (n.feature >= 0) {
        stack.push_back({n.left, depth + 1});
        stack.push_back({n.right, depth + 1});
      }
    }
  }
}
